"""The letter-count congruence on the word category and its skeletal quotient.

Equivalent words are identified, and a morphism ``phi: a -> b`` is identified
with ``phi2: a2 -> b2`` when ``phi2 o s(a, a2) == s(b, b2) o phi`` for the
canonical permutations ``s``. Every class has exactly one member between the
sorted representatives, which serves as its normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from monoidcats import kernels
from monoidcats.cat_c import (
    CMorphism,
    compose,
    default_cap,
    enumerate_hom,
    functor_c_mor,
    hom_cardinality,
    identity,
)
from monoidcats.errors import (
    CapExceeded,
    IndexOutOfRange,
    MalformedElement,
    NotComposable,
    NotEquivalentEndpoints,
    SortMismatch,
)
from monoidcats.msets import (
    Atom,
    SortedMapping,
    SortedSet,
    Tagged,
    coproduct_obj,
)
from monoidcats.perm import canonical_perm
from monoidcats.riguet import FiniteCategory, RiguetCongruence, find_nontrivial_iso
from monoidcats.words import (
    Alphabet,
    LetterMap,
    Word,
    _same_alphabet,
    all_words,
    canonical_word,
    equiv,
    map_word,
)

MAX_TRUNCATION_LENGTH = 3
MAX_TRUNCATION_ALPHABET = 3


@dataclass(frozen=True)
class QObject:
    """A class of equivalent words, keyed by its sorted representative.

    ``source`` remembers the word the class was built from; it does not take
    part in equality.
    """

    canonical: Word
    source: Word | None = field(default=None, compare=False)

    @property
    def representative(self) -> Word:
        return self.source if self.source is not None else self.canonical

    def __str__(self):
        return f"[{self.canonical}]"


@dataclass(frozen=True)
class QMorphism:
    dom: QObject
    cod: QObject
    rep: CMorphism

    def __str__(self):
        return f"{self.dom} -> {self.cod} {list(self.rep.map)}"


def _require_equivalent(a: Word, a2: Word) -> None:
    if not equiv(a, a2):
        raise NotEquivalentEndpoints(f"{a} and {a2} are not equivalent")


def transport(phi: CMorphism, a2: Word, b2: Word) -> CMorphism:
    """The unique morphism ``a2 -> b2`` related to ``phi``: ``s(b, b2) o phi o s(a2, a)``."""
    _require_equivalent(phi.dom, a2)
    _require_equivalent(phi.cod, b2)
    s_dom = canonical_perm(a2, phi.dom)
    s_cod = canonical_perm(phi.cod, b2)
    return CMorphism(a2, b2, kernels.transport(phi.map, s_dom.map, s_cod.map))


def matrix_related(phi: CMorphism, phi2: CMorphism) -> bool:
    _require_equivalent(phi.dom, phi2.dom)
    _require_equivalent(phi.cod, phi2.cod)
    s_a = canonical_perm(phi.dom, phi2.dom).map
    s_b = canonical_perm(phi.cod, phi2.cod).map
    return kernels.compose(phi2.map, s_a) == kernels.compose(s_b, phi.map)


def q_object(a: Word) -> QObject:
    return QObject(canonical_word(a), a)


def q_morphism(phi: CMorphism) -> QMorphism:
    dom, cod = q_object(phi.dom), q_object(phi.cod)
    return QMorphism(dom, cod, transport(phi, dom.canonical, cod.canonical))


def q_identity(o: QObject) -> QMorphism:
    return QMorphism(o, o, identity(o.canonical))


def q_compose(psi: QMorphism, phi: QMorphism) -> QMorphism:
    """``psi o phi``."""
    if phi.cod != psi.dom:
        raise NotComposable(f"codomain {phi.cod} differs from domain {psi.dom}")
    return QMorphism(phi.dom, psi.cod, compose(psi.rep, phi.rep))


def q_hom(o1: QObject, o2: QObject, cap: int | None = None) -> list[QMorphism]:
    return [QMorphism(o1, o2, m) for m in enumerate_hom(o1.canonical, o2.canonical, cap)]


def functor_q(f: LetterMap, x):
    """Relabel a class (or a class of morphisms) along ``f`` and re-normalize."""
    if isinstance(x, QObject):
        return q_object(map_word(f, x.canonical))
    if isinstance(x, QMorphism):
        return q_morphism(functor_c_mor(f, x.rep))
    raise TypeError(f"expected a QObject or QMorphism, got {type(x).__name__}")


def pi_component(x):
    """The projection of a word or word morphism to its class."""
    if isinstance(x, Word):
        return q_object(x)
    if isinstance(x, CMorphism):
        return q_morphism(x)
    raise TypeError(f"expected a Word or CMorphism, got {type(x).__name__}")


# truncations as explicit finite categories


def _word_id(w: Word) -> str:
    return str(w)


def _morphism_id(phi: CMorphism) -> str:
    return f"{phi.dom}->{phi.cod}[{','.join(map(str, phi.map))}]"


def _check_truncation_size(alphabet: Alphabet, max_len: int, max_length: int, max_alphabet: int) -> None:
    if max_len > max_length:
        raise CapExceeded(f"truncation length {max_len} exceeds the limit {max_length}")
    if len(alphabet) > max_alphabet:
        raise CapExceeded(f"alphabet of size {len(alphabet)} exceeds the limit {max_alphabet}")


def _category_from_words(words: list[Word], cap: int) -> tuple[FiniteCategory, dict]:
    total = sum(hom_cardinality(a, b) for a in words for b in words)
    if total > cap:
        raise CapExceeded(f"truncation has {total} morphisms, cap is {cap}")
    homs = {}
    ident = {}
    labels = {}
    by_key = {}
    for a in words:
        for b in words:
            ids = []
            for phi in enumerate_hom(a, b, cap):
                mid = _morphism_id(phi)
                by_key[(a, b, phi.map)] = mid
                labels[mid] = "[" + ",".join(map(str, phi.map)) + "]"
                ids.append(mid)
            homs[(_word_id(a), _word_id(b))] = ids
        ident[_word_id(a)] = _morphism_id(identity(a))
    table = {}
    for a, b, c in product(words, repeat=3):
        for fm in kernels.hom_maps(a.entries, b.entries, len(a.alphabet)):
            f = by_key[(a, b, fm)]
            for gm in kernels.hom_maps(b.entries, c.entries, len(a.alphabet)):
                table[(by_key[(b, c, gm)], f)] = by_key[(a, c, kernels.compose(gm, fm))]
    C = FiniteCategory(
        [_word_id(w) for w in words], homs, table, ident, labels=labels, check_associativity=False
    )
    return C, by_key


def export_truncation(
    alphabet: Alphabet,
    max_len: int,
    cap: int | None = None,
    max_length: int = MAX_TRUNCATION_LENGTH,
    max_alphabet: int = MAX_TRUNCATION_ALPHABET,
) -> tuple[FiniteCategory, RiguetCongruence]:
    """All words of length at most ``max_len``, all morphisms between them, and the congruence.

    Object ids are the word strings (``"λ"`` for the empty word); morphism ids
    look like ``"ab->aab[1,2]"``. Composition is associative by construction,
    so only the unit laws and typing are re-validated.
    """
    _check_truncation_size(alphabet, max_len, max_length, max_alphabet)
    cap = default_cap() if cap is None else cap
    words = all_words(alphabet, max_len)
    C, by_key = _category_from_words(words, cap)

    classes: dict[Word, list[Word]] = {}
    for w in words:
        classes.setdefault(canonical_word(w), []).append(w)
    blocks = [[_word_id(w) for w in members] for members in classes.values()]

    fl = {}
    for dom_block, cod_block in product(classes.values(), repeat=2):
        for a, b in product(dom_block, cod_block):
            hom = list(enumerate_hom(a, b, cap))
            for a2, b2 in product(dom_block, cod_block):
                pairs = []
                for phi in hom:
                    phi2 = transport(phi, a2, b2)
                    if not matrix_related(phi, phi2):
                        raise AssertionError(f"transport of {phi} to {a2} -> {b2} is not related")
                    pairs.append((by_key[(a, b, phi.map)], by_key[(a2, b2, phi2.map)]))
                if pairs:
                    fl[(_word_id(a), _word_id(b), _word_id(a2), _word_id(b2))] = pairs
    return C, RiguetCongruence(blocks, fl)


def q_truncation(
    alphabet: Alphabet,
    max_len: int,
    cap: int | None = None,
    max_length: int = MAX_TRUNCATION_LENGTH,
    max_alphabet: int = MAX_TRUNCATION_ALPHABET,
) -> FiniteCategory:
    """The full subcategory of the quotient on classes of words of length at most ``max_len``."""
    _check_truncation_size(alphabet, max_len, max_length, max_alphabet)
    cap = default_cap() if cap is None else cap
    canon = []
    for w in all_words(alphabet, max_len):
        if canonical_word(w) == w:
            canon.append(w)
    C, _ = _category_from_words(canon, cap)
    C.labels.update({_word_id(w): f"[{w}]" for w in canon})
    return C


def q_skeletal_check(C: FiniteCategory) -> bool:
    """True iff no isomorphism in ``C`` joins two distinct objects."""
    return find_nontrivial_iso(C) is None


# fiber maps and the equivalence with sorted sets


def fiber_map(phi: CMorphism, name: str) -> tuple[int, ...]:
    """``j -> occ_b(phi(pos_{a,name}(j)))``; empty when ``name`` does not occur in the domain."""
    x = phi.dom.alphabet.position(name)
    return kernels.fiber_maps(phi.dom.entries, phi.cod.entries, phi.map, len(phi.dom.alphabet))[x]


def fiber_family(phi: CMorphism) -> tuple[tuple[int, ...], ...]:
    return kernels.fiber_maps(phi.dom.entries, phi.cod.entries, phi.map, len(phi.dom.alphabet))


def counts_to_sorted_set(w: Word) -> SortedSet:
    counts = kernels.letter_counts(w.entries, len(w.alphabet))
    return SortedSet(
        w.alphabet, {x: [Atom(j) for j in range(n)] for x, n in zip(w.alphabet.letters, counts)}
    )


def q_to_msets_obj(o: QObject) -> SortedSet:
    """Sort ``x`` holds ``Atom(0) .. Atom(count - 1)``."""
    return counts_to_sorted_set(o.canonical)


def q_to_msets_mor(m: QMorphism) -> SortedMapping:
    fam = fiber_family(m.rep)
    comps = {
        x: {Atom(j): Atom(k) for j, k in enumerate(fib)}
        for x, fib in zip(m.rep.dom.alphabet.letters, fam)
    }
    return SortedMapping(q_to_msets_obj(m.dom), q_to_msets_obj(m.cod), comps)


def q_full_inverse(o1: QObject, o2: QObject, h: SortedMapping) -> QMorphism:
    """``phi(i) = pos_{b,a(i)}(h_{a(i)}(occ_a(i)))`` on the sorted representatives."""
    if h.dom != q_to_msets_obj(o1) or h.cod != q_to_msets_obj(o2):
        raise SortMismatch("mapping is not typed between the count sets of the two classes")
    a, b = o1.canonical, o2.canonical
    n = len(a.alphabet)
    ranks = kernels.occ_ranks(a.entries, n)
    where = kernels.letter_positions(b.entries, n)
    image = []
    for i, x in enumerate(a.entries):
        k = h.components[x][Atom(ranks[i])].n
        if not 0 <= k < len(where[x]):
            raise IndexOutOfRange(f"fiber index {k} for letter {a[i]!r} is out of range")
        image.append(where[x][k])
    return QMorphism(o1, o2, CMorphism(a, b, tuple(image)))


def gamma_iso(f: LetterMap, o: QObject, representative: Word | None = None) -> SortedMapping:
    """``Tagged(Atom(j), x) -> Atom(occ_{f@a}(pos_{a,x}(j)))`` computed on a word ``a`` of the class.

    ``a`` defaults to the sorted representative, the same one :func:`functor_q`
    relabels, which is what makes the family natural in ``o``.
    """
    a = o.canonical if representative is None else representative
    if not equiv(a, o.canonical):
        raise NotEquivalentEndpoints(f"{a} does not belong to {o}")
    _same_alphabet(f.source, a.alphabet)
    fa = map_word(f, a)
    src = coproduct_obj(f, q_to_msets_obj(o))
    dst = q_to_msets_obj(functor_q(f, o))
    where = kernels.letter_positions(a.entries, len(a.alphabet))
    ranks = kernels.occ_ranks(fa.entries, len(fa.alphabet))
    comps = {}
    for y, part in src.items():
        comp = {}
        for e in part:
            if not isinstance(e, Tagged) or f(e.tag) != y or not isinstance(e.inner, Atom):
                raise MalformedElement(f"{e} does not belong to sort {y!r}")
            j = e.inner
            comp[e] = Atom(ranks[where[a.alphabet.position(e.tag)][j.n]])
        comps[y] = comp
    return SortedMapping(src, dst, comps)
