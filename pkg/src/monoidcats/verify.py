"""Seeded randomized property suites.

Every check draws from its own ``random.Random`` seeded by ``"{seed}:{name}"``,
so adding or reordering checks never changes the instances another check sees.
A check returns ``None`` on success or a short reproducer string on failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from monoidcats import cat_c, kernels
from monoidcats.cat_c import CMorphism, check_morphism, enumerate_hom, functor_c_mor, hom_cardinality
from monoidcats.msets import (
    Atom,
    SortedMapping,
    SortedSet,
    Tagged,
    all_sorted_mappings,
    alpha_iso,
    beta_iso,
    card,
    compose_mappings,
    coproduct_mor,
    essential_surjectivity_witness,
    is_bijective,
    pr_iso,
    sorted_set_to_word,
    vs_full_inverse,
    vs_mor,
    vs_obj,
)
from monoidcats.perm import (
    Permutation,
    apply_right_action,
    canonical_perm,
    compose_perm,
    identity_perm,
    invert_perm,
    occ,
    pos,
)
from monoidcats.quotient_q import (
    export_truncation,
    fiber_family,
    functor_q,
    gamma_iso,
    matrix_related,
    q_compose,
    q_full_inverse,
    q_identity,
    q_morphism,
    q_object,
    q_to_msets_mor,
    q_to_msets_obj,
    transport,
)
from monoidcats.riguet import check_riguet_axioms
from monoidcats.words import (
    Alphabet,
    LetterMap,
    MonoidSpec,
    Word,
    canonical_word,
    concat,
    empty_word,
    lift_to_monoid,
    map_word,
    parikh,
)

SUITES = ("laws", "equivalence", "naturality")
LETTERS = "abcd"
TARGET_LETTERS = "xyz"
FULLNESS_HOM_LIMIT = 1000


# random instances


def random_alphabet(rng: random.Random, max_size: int = 4, letters: str = LETTERS) -> Alphabet:
    return Alphabet(letters[: rng.randint(1, max_size)])


def random_word(rng: random.Random, alphabet: Alphabet, max_len: int, min_len: int = 0) -> Word:
    n = rng.randint(min_len, max_len)
    return Word(alphabet, tuple(rng.randrange(len(alphabet)) for _ in range(n)))


def shuffled(rng: random.Random, w: Word) -> Word:
    entries = list(w.entries)
    rng.shuffle(entries)
    return Word(w.alphabet, tuple(entries))


def random_morphism_into(rng: random.Random, b: Word, max_len: int) -> CMorphism:
    """A random morphism whose domain uses only letters occurring in ``b``."""
    where = kernels.letter_positions(b.entries, len(b.alphabet))
    present = [x for x, ps in enumerate(where) if ps]
    n = rng.randint(0, max_len) if present else 0
    entries = tuple(rng.choice(present) for _ in range(n))
    return CMorphism(Word(b.alphabet, entries), b, tuple(rng.choice(where[x]) for x in entries))


def random_morphism(rng: random.Random, alphabet: Alphabet, max_len: int) -> CMorphism:
    return random_morphism_into(rng, random_word(rng, alphabet, max_len), max_len)


def random_morphism_from(rng: random.Random, a: Word, max_len: int) -> CMorphism:
    """A random morphism out of ``a``; the codomain contains every letter of ``a``."""
    extra = random_word(rng, a.alphabet, max_len)
    b = shuffled(rng, Word(a.alphabet, tuple(sorted(set(a.entries))) + extra.entries))
    where = kernels.letter_positions(b.entries, len(b.alphabet))
    return CMorphism(a, b, tuple(rng.choice(where[x]) for x in a.entries))


def random_letter_map(rng: random.Random, source: Alphabet, letters: str = TARGET_LETTERS) -> LetterMap:
    target = Alphabet(letters[: rng.randint(1, len(letters))])
    return LetterMap(source, target, tuple(rng.randrange(len(target)) for _ in source.letters))


def random_element(rng: random.Random):
    e = Atom(rng.randrange(50))
    if rng.random() < 0.25:
        e = Tagged(e, rng.choice("pq"))
    return e


def random_sorted_set(rng: random.Random, alphabet: Alphabet, max_part: int = 3, nonempty: bool = False) -> SortedSet:
    parts = {}
    for x in alphabet.letters:
        n = rng.randint(1 if nonempty else 0, max_part)
        part = set()
        while len(part) < n:
            part.add(random_element(rng))
        parts[x] = part
    return SortedSet(alphabet, parts)


def random_sorted_mapping(rng: random.Random, X: SortedSet, Y: SortedSet) -> SortedMapping:
    comps = {}
    for x, src, dst in zip(X.alphabet.letters, X.parts, Y.parts):
        dst_l = sorted(dst, key=repr)
        comps[x] = {e: rng.choice(dst_l) for e in src}
    return SortedMapping(X, Y, comps)


def random_mapping_pair(rng: random.Random, alphabet: Alphabet) -> SortedMapping:
    X = random_sorted_set(rng, alphabet)
    Y = random_sorted_set(rng, alphabet, nonempty=True)
    return random_sorted_mapping(rng, X, Y)


# laws


def check_word_monoid(rng):
    A = random_alphabet(rng)
    u, v, w = (random_word(rng, A, 6) for _ in range(3))
    if concat(concat(u, v), w) != concat(u, concat(v, w)):
        return f"associativity fails for {u}, {v}, {w}"
    e = empty_word(A)
    if concat(e, u) != u or concat(u, e) != u:
        return f"unit law fails for {u}"
    if parikh(concat(u, v)) != parikh(u) + parikh(v):
        return f"counts are not additive on {u}, {v}"
    weights = {x: rng.randint(-3, 3) for x in A.letters}
    m = MonoidSpec(0, lambda p, q: p + q)
    if lift_to_monoid(m, weights.__getitem__, concat(u, v)) != (
        lift_to_monoid(m, weights.__getitem__, u) + lift_to_monoid(m, weights.__getitem__, v)
    ):
        return f"monoid fold is not a homomorphism on {u}, {v}"
    if lift_to_monoid(m, weights.__getitem__, shuffled(rng, u)) != lift_to_monoid(m, weights.__getitem__, u):
        return f"commutative fold is not constant on the class of {u}"
    return None


def check_occ_pos(rng):
    A = random_alphabet(rng)
    w = random_word(rng, A, 12)
    for i in range(len(w)):
        if pos(w, w[i], occ(w, i)) != i:
            return f"pos(occ(i)) != i at {i} in {w}"
    for x in A.letters:
        for j, i in enumerate(p for p in range(len(w)) if w[p] == x):
            if occ(w, pos(w, x, j)) != j:
                return f"occ(pos(j)) != j for {x}, {j} in {w}"
    return None


def check_sigma_laws(rng):
    A = random_alphabet(rng)
    a = random_word(rng, A, 12)
    b, c = shuffled(rng, a), shuffled(rng, a)
    n = len(a)
    if canonical_perm(a, a) != identity_perm(n):
        return f"sigma(a, a) is not the identity for {a}"
    if compose_perm(canonical_perm(b, c), canonical_perm(a, b)) != canonical_perm(a, c):
        return f"composition law fails for {a}, {b}, {c}"
    if invert_perm(canonical_perm(a, b)) != canonical_perm(b, a):
        return f"inverse law fails for {a}, {b}"
    s_ab, s_ba = canonical_perm(a, b), canonical_perm(b, a)
    for i in range(n):
        if occ(a, i) != occ(b, s_ab(i)):
            return f"occurrence rank not transported at {i} for {a}, {b}"
    for x in A.letters:
        k = sum(1 for e in a.letters() if e == x)
        for j in range(k):
            if pos(a, x, j) != s_ba(pos(b, x, j)):
                return f"position not transported for {x}, {j} in {a}, {b}"
    return None


def check_action_laws(rng):
    A = random_alphabet(rng)
    w = random_word(rng, A, 10)
    n = len(w)
    s = Permutation(tuple(rng.sample(range(n), n)))
    t = Permutation(tuple(rng.sample(range(n), n)))
    if apply_right_action(w, identity_perm(n)) != w:
        return f"identity does not act trivially on {w}"
    if apply_right_action(w, compose_perm(s, t)) != apply_right_action(apply_right_action(w, s), t):
        return f"action law fails for {w}, {s}, {t}"
    return None


def check_c_category_laws(rng):
    A = random_alphabet(rng)
    h = random_morphism(rng, A, 5)
    g = random_morphism_into(rng, h.dom, 5)
    f = random_morphism_into(rng, g.dom, 5)
    for m in (f, g, h):
        check_morphism(m.dom, m.cod, m.map)
    if cat_c.compose(h, cat_c.compose(g, f)) != cat_c.compose(cat_c.compose(h, g), f):
        return f"associativity fails for {f}, {g}, {h}"
    if cat_c.compose(cat_c.identity(f.cod), f) != f or cat_c.compose(f, cat_c.identity(f.dom)) != f:
        return f"unit law fails for {f}"
    return None


def check_hom_enumeration(rng):
    A = random_alphabet(rng, 3)
    a, b = random_word(rng, A, 4), random_word(rng, A, 5)
    maps = [m.map for m in enumerate_hom(a, b)]
    if len(maps) != hom_cardinality(a, b) or len(set(maps)) != len(maps) or maps != sorted(maps):
        return f"enumeration of Hom({a}, {b}) is not the sorted set of size {hom_cardinality(a, b)}"
    return None


def check_q_laws(rng):
    A = random_alphabet(rng)
    g = random_morphism(rng, A, 5)
    f = random_morphism_into(rng, g.dom, 5)
    qf, qg = q_morphism(f), q_morphism(g)
    if q_compose(qg, qf) != q_morphism(cat_c.compose(g, f)):
        return f"class composition is not well defined for {f}, {g}"
    if q_compose(q_identity(qf.cod), qf) != qf or q_compose(qf, q_identity(qf.dom)) != qf:
        return f"unit law fails for {qf}"
    if q_morphism(cat_c.identity(f.dom)) != q_identity(qf.dom):
        return f"identity of {f.dom} does not normalize to the identity"
    other = transport(f, shuffled(rng, f.dom), shuffled(rng, f.cod))
    if q_morphism(other) != qf:
        return f"related morphisms {f} and {other} have different normal forms"
    return None


def check_fiber_laws(rng):
    A = random_alphabet(rng)
    g = random_morphism(rng, A, 6)
    f = random_morphism_into(rng, g.dom, 6)
    gf = cat_c.compose(g, f)
    for x, ff, fg, fgf in zip(A.letters, fiber_family(f), fiber_family(g), fiber_family(gf)):
        if tuple(fg[k] for k in ff) != fgf:
            return f"fiber maps do not compose at {x} for {f}, {g}"
        for j, k in enumerate(ff):
            if f.map[pos(f.dom, x, j)] != pos(f.cod, x, k):
                return f"position square fails at {x}, {j} for {f}"
    ident = cat_c.identity(f.dom)
    if any(fib != tuple(range(len(fib))) for fib in fiber_family(ident)):
        return f"identity of {f.dom} has a non-identity fiber map"
    return None


def check_relabel_functor(rng):
    A = random_alphabet(rng)
    f = random_letter_map(rng, A)
    g = random_morphism(rng, A, 5)
    h = random_morphism_into(rng, g.dom, 5)
    qg, qh = q_morphism(g), q_morphism(h)
    if functor_q(f, q_compose(qg, qh)) != q_compose(functor_q(f, qg), functor_q(f, qh)):
        return f"relabelling along {f.as_dict()} does not preserve {qg} o {qh}"
    if functor_q(f, q_identity(qh.dom)) != q_identity(functor_q(f, qh.dom)):
        return f"relabelling along {f.as_dict()} does not preserve the identity of {qh.dom}"
    if functor_q(LetterMap.identity(A), qh) != qh:
        return f"relabelling along the identity moves {qh}"
    return None


def check_diagonal_collapse(rng):
    A = random_alphabet(rng, 3)
    phi = random_morphism(rng, A, 4)
    for psi in enumerate_hom(phi.dom, phi.cod):
        if matrix_related(phi, psi) != (phi == psi):
            return f"relation at equal endpoints is not equality for {phi}, {psi}"
    return None


def check_fiber_invariance(rng):
    A = random_alphabet(rng)
    phi = random_morphism(rng, A, 6)
    other = transport(phi, shuffled(rng, phi.dom), shuffled(rng, phi.cod))
    if not matrix_related(phi, other) or fiber_family(phi) != fiber_family(other):
        return f"transport of {phi} changes its fiber maps"
    return None


# equivalence legs


def _small_pair(rng, A, limit=FULLNESS_HOM_LIMIT):
    while True:
        phi = random_morphism(rng, A, 4)
        if hom_cardinality(phi.dom, phi.cod) <= limit:
            return phi.dom, phi.cod


def check_vs_full_faithful(rng):
    A = random_alphabet(rng, 3)
    a, b = _small_pair(rng, A)
    images = set()
    for h in all_sorted_mappings(vs_obj(a), vs_obj(b)):
        phi = vs_full_inverse(a, b, h)
        check_morphism(a, b, phi.map)
        if vs_mor(phi) != h:
            return f"round trip fails for Hom({a}, {b})"
    for phi in enumerate_hom(a, b):
        images.add(vs_mor(phi))
    if len(images) != hom_cardinality(a, b):
        return f"position-set functor is not injective on Hom({a}, {b})"
    return None


def check_q_full_faithful(rng):
    A = random_alphabet(rng, 3)
    a, b = _small_pair(rng, A)
    o1, o2 = q_object(a), q_object(b)
    seen = set()
    for h in all_sorted_mappings(q_to_msets_obj(o1), q_to_msets_obj(o2)):
        m = q_full_inverse(o1, o2, h)
        check_morphism(o1.canonical, o2.canonical, m.rep.map)
        if q_to_msets_mor(m) != h:
            return f"round trip fails for classes {o1}, {o2}"
        seen.add(m.rep.map)
    if len(seen) != hom_cardinality(a, b):
        return f"class hom {o1}, {o2} does not match the sorted-set hom in size"
    return None


def check_essential_surjectivity(rng):
    A = random_alphabet(rng)
    X = random_sorted_set(rng, A, 4)
    w = sorted_set_to_word(X)
    iso = essential_surjectivity_witness(X)
    if not is_bijective(iso) or iso.dom != X or iso.cod != vs_obj(w):
        return f"no sorted bijection from {X!r} to the positions of {w}"
    if canonical_word(w) != w or card(X) != len(w):
        return f"reconstructed word {w} is not sorted or has the wrong length"
    counts = [len(p) for p in X.parts]
    if [len(p) for p in q_to_msets_obj(q_object(w)).parts] != counts:
        return f"class of {w} does not have the sort sizes of {X!r}"
    return None


def check_fiber_converse(rng):
    A = random_alphabet(rng, 3)
    phi = random_morphism(rng, A, 4)
    a2, b2 = shuffled(rng, phi.dom), shuffled(rng, phi.cod)
    candidates = list(enumerate_hom(a2, b2, cap=FULLNESS_HOM_LIMIT)) if hom_cardinality(a2, b2) <= FULLNESS_HOM_LIMIT else [transport(phi, a2, b2)]
    for psi in candidates:
        if (fiber_family(psi) == fiber_family(phi)) != matrix_related(phi, psi):
            return f"fiber families and relatedness disagree on {phi}, {psi}"
    return None


def check_cardinality_bridge(rng):
    A = random_alphabet(rng, 3)
    a, b = _small_pair(rng, A)
    o1, o2 = q_object(a), q_object(b)
    n = sum(1 for _ in all_sorted_mappings(q_to_msets_obj(o1), q_to_msets_obj(o2)))
    if n != hom_cardinality(a, b) or n != hom_cardinality(o1.canonical, o2.canonical):
        return f"hom sizes disagree for {o1}, {o2}"
    return None


# naturality squares


def check_pr_square(rng):
    A = random_alphabet(rng)
    h = random_mapping_pair(rng, A)
    ident = LetterMap.identity(A)
    if compose_mappings(pr_iso(h.cod), coproduct_mor(ident, h)) != compose_mappings(h, pr_iso(h.dom)):
        return f"tag-stripping square fails for {h!r}"
    return None


def check_alpha_square(rng):
    A = random_alphabet(rng)
    f = random_letter_map(rng, A)
    g = random_letter_map(rng, f.target, "uvw")
    h = random_mapping_pair(rng, A)
    left = compose_mappings(alpha_iso(f, g, h.cod), coproduct_mor(f.then(g), h))
    right = compose_mappings(coproduct_mor(g, coproduct_mor(f, h)), alpha_iso(f, g, h.dom))
    if left != right:
        return f"re-tagging square fails for {f.as_dict()}, {g.as_dict()}, {h!r}"
    return None


def check_beta_square(rng):
    A = random_alphabet(rng)
    f = random_letter_map(rng, A)
    phi = random_morphism(rng, A, 6)
    left = compose_mappings(vs_mor(functor_c_mor(f, phi)), beta_iso(f, phi.dom))
    right = compose_mappings(beta_iso(f, phi.cod), coproduct_mor(f, vs_mor(phi)))
    if left != right:
        return f"position square fails for {f.as_dict()}, {phi}"
    return None


def check_pi_square(rng):
    A = random_alphabet(rng)
    f = random_letter_map(rng, A)
    phi = random_morphism(rng, A, 6)
    if functor_q(f, q_object(phi.dom)) != q_object(map_word(f, phi.dom)):
        return f"object square fails for {f.as_dict()}, {phi.dom}"
    if functor_q(f, q_morphism(phi)) != q_morphism(functor_c_mor(f, phi)):
        return f"projection square fails for {f.as_dict()}, {phi}"
    return None


def check_pi_square_injective(rng):
    A = random_alphabet(rng, 3)
    images = rng.sample(range(4), len(A))
    f = LetterMap(A, Alphabet("wxyz"), tuple(images))
    phi = random_morphism(rng, A, 6)
    if functor_q(f, q_morphism(phi)) != q_morphism(functor_c_mor(f, phi)):
        return f"projection square fails for injective {f.as_dict()}, {phi}"
    return None


def check_gamma_square(rng):
    A = random_alphabet(rng)
    f = random_letter_map(rng, A)
    m = q_morphism(random_morphism(rng, A, 6))
    g_dom, g_cod = gamma_iso(f, m.dom), gamma_iso(f, m.cod)
    if not (is_bijective(g_dom) and is_bijective(g_cod)):
        return f"reindexing map is not bijective for {f.as_dict()}, {m}"
    left = compose_mappings(q_to_msets_mor(functor_q(f, m)), g_dom)
    right = compose_mappings(g_cod, coproduct_mor(f, q_to_msets_mor(m)))
    if left != right:
        return f"reindexing square fails for {f.as_dict()}, {m}"
    return None


def check_truncation_axioms(rng):
    C, phi = export_truncation(Alphabet("ab"), 2)
    report = check_riguet_axioms(C, phi)
    if not report.all_passed:
        return f"conditions {report.failed()} fail on the length-2 truncation over {{a,b}}"
    return None


CHECKS: dict[str, list[tuple[str, Callable]]] = {
    "laws": [
        ("word_monoid", check_word_monoid),
        ("occ_pos_round_trip", check_occ_pos),
        ("sigma_laws", check_sigma_laws),
        ("right_action", check_action_laws),
        ("word_category_laws", check_c_category_laws),
        ("hom_enumeration", check_hom_enumeration),
        ("class_category_laws", check_q_laws),
        ("fiber_maps", check_fiber_laws),
        ("relabel_functor", check_relabel_functor),
        ("diagonal_collapse", check_diagonal_collapse),
        ("fiber_invariance", check_fiber_invariance),
    ],
    "equivalence": [
        ("positions_full_faithful", check_vs_full_faithful),
        ("classes_full_faithful", check_q_full_faithful),
        ("essential_surjectivity", check_essential_surjectivity),
        ("fiber_converse", check_fiber_converse),
        ("cardinality_bridge", check_cardinality_bridge),
        ("truncation_axioms", check_truncation_axioms),
    ],
    "naturality": [
        ("pr", check_pr_square),
        ("alpha", check_alpha_square),
        ("beta", check_beta_square),
        ("pi", check_pi_square),
        ("pi_injective", check_pi_square_injective),
        ("gamma", check_gamma_square),
    ],
}

# checks without randomness run once regardless of the trial count
SINGLE_SHOT = {"truncation_axioms"}


@dataclass
class CheckOutcome:
    suite: str
    name: str
    trials: int
    failures: int
    reproducer: str | None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "status": "PASS" if self.passed else "FAIL",
            "reproducer": self.reproducer,
        }

    def render(self) -> str:
        line = f"{'PASS' if self.passed else 'FAIL'} {self.suite}.{self.name} {self.trials - self.failures}/{self.trials}"
        if self.reproducer:
            line += f"\n     reproducer: {self.reproducer}"
        return line


def run_check(suite: str, name: str, fn: Callable, seed: int, trials: int) -> CheckOutcome:
    rng = random.Random(f"{seed}:{suite}.{name}")
    n = min(trials, 1) if name in SINGLE_SHOT else trials
    failures = 0
    first = None
    for t in range(n):
        try:
            msg = fn(rng)
        except Exception as exc:  # an exception is a violated invariant, not a crash
            msg = f"{type(exc).__name__}: {exc}"
        if msg is not None:
            failures += 1
            if first is None:
                first = f"trial {t}: {msg}"
    return CheckOutcome(suite, name, n, failures, first)


def run_suites(suite: str, seed: int, trials: int) -> list[CheckOutcome]:
    names = SUITES if suite == "all" else (suite,)
    if any(s not in CHECKS for s in names):
        raise ValueError(f"unknown suite {suite!r}")
    return [run_check(s, name, fn, seed, trials) for s in names for name, fn in CHECKS[s]]
