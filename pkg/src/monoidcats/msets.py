"""Finite sorted sets, sorted mappings, reindexing along letter maps.

Elements of a coproduct are kept as explicit ``Tagged(x, a)`` pairs instead
of being flattened, so the isomorphisms below are literal tag manipulations:

* ``pr_iso``    strips the tag from ``coproduct(id, X)``,
* ``alpha_iso`` re-tags ``coproduct(g o f, X)`` as ``coproduct(g, coproduct(f, X))``,
* ``beta_iso``  strips the tag from ``coproduct(f, vs_obj(a))`` into ``vs_obj(f@a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping, Union

from monoidcats.cat_c import CMorphism
from monoidcats.errors import DomainError, MalformedElement, SortMismatch
from monoidcats.words import Alphabet, LetterMap, Word, _same_alphabet, map_word


@dataclass(frozen=True)
class Atom:
    n: int

    def __str__(self):
        return str(self.n)


@dataclass(frozen=True)
class Tagged:
    inner: "Element"
    tag: str

    def __str__(self):
        return f"({self.inner},{self.tag})"


Element = Union[Atom, Tagged]


def element_key(e: Element):
    """Total order on elements: atoms by value, then tagged pairs by tag and inner key."""
    if isinstance(e, Atom):
        return (0, e.n)
    return (1, e.tag, element_key(e.inner))


def untag(e: Element, tag: str) -> Element:
    if not isinstance(e, Tagged) or e.tag != tag:
        raise MalformedElement(f"expected an element tagged {tag!r}, got {e}")
    return e.inner


class SortedSet:
    """A family of finite sets indexed by the letters of an alphabet."""

    __slots__ = ("alphabet", "parts")

    def __init__(self, alphabet: Alphabet, parts: Mapping[str, Iterable[Element]] | None = None):
        parts = parts or {}
        for name in parts:
            alphabet.position(name)
        self.alphabet = alphabet
        self.parts = tuple(frozenset(parts.get(x, ())) for x in alphabet.letters)

    def part(self, name: str) -> frozenset:
        return self.parts[self.alphabet.position(name)]

    def items(self):
        return zip(self.alphabet.letters, self.parts)

    def __eq__(self, other):
        return (
            isinstance(other, SortedSet)
            and self.alphabet == other.alphabet
            and self.parts == other.parts
        )

    def __hash__(self):
        return hash((self.alphabet, self.parts))

    def __repr__(self):
        body = ", ".join(
            f"{x}:{{{','.join(str(e) for e in sorted(p, key=element_key))}}}"
            for x, p in self.items()
            if p
        )
        return f"SortedSet({body})"


class SortedMapping:
    """A family of total maps ``dom.part(x) -> cod.part(x)``, one per letter."""

    __slots__ = ("dom", "cod", "components")

    def __init__(self, dom: SortedSet, cod: SortedSet, components: Mapping[str, Mapping]):
        _same_alphabet(dom.alphabet, cod.alphabet)
        for name in components:
            dom.alphabet.position(name)
        comps = []
        for x, src, dst in zip(dom.alphabet.letters, dom.parts, cod.parts):
            comp = dict(components.get(x, {}))
            if set(comp) != src:
                raise SortMismatch(f"component {x!r} is not defined exactly on its domain part")
            for e, img in comp.items():
                if img not in dst:
                    raise SortMismatch(f"component {x!r} sends {e} outside its codomain part")
            comps.append(comp)
        self.dom = dom
        self.cod = cod
        self.components = tuple(comps)

    def component(self, name: str) -> dict:
        return self.components[self.dom.alphabet.position(name)]

    def __call__(self, name: str, e: Element) -> Element:
        return self.component(name)[e]

    def __eq__(self, other):
        return (
            isinstance(other, SortedMapping)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.dom, self.cod, tuple(frozenset(c.items()) for c in self.components)))

    def __repr__(self):
        return f"SortedMapping({self.dom!r} -> {self.cod!r})"


def card(X: SortedSet) -> int:
    return sum(len(p) for p in X.parts)


def supp(X: SortedSet) -> frozenset[str]:
    return frozenset(x for x, p in X.items() if p)


def identity_mapping(X: SortedSet) -> SortedMapping:
    return SortedMapping(X, X, {x: {e: e for e in p} for x, p in X.items()})


def compose_mappings(k: SortedMapping, h: SortedMapping) -> SortedMapping:
    """``k o h``."""
    if h.cod != k.dom:
        raise SortMismatch("codomain and domain of the composed mappings differ")
    return SortedMapping(
        h.dom,
        k.cod,
        {x: {e: kc[hc[e]] for e in hc} for x, hc, kc in zip(h.dom.alphabet.letters, h.components, k.components)},
    )


def is_bijective(h: SortedMapping) -> bool:
    return all(
        len(set(c.values())) == len(c) == len(dst)
        for c, dst in zip(h.components, h.cod.parts)
    )


def inverse_mapping(h: SortedMapping) -> SortedMapping:
    if not is_bijective(h):
        raise DomainError("mapping is not bijective in every sort")
    return SortedMapping(
        h.cod, h.dom, {x: {v: k for k, v in c.items()} for x, c in zip(h.dom.alphabet.letters, h.components)}
    )


def all_sorted_mappings(X: SortedSet, Y: SortedSet) -> Iterator[SortedMapping]:
    """Every sorted mapping ``X -> Y`` by brute force over each sort's function space."""
    _same_alphabet(X.alphabet, Y.alphabet)
    letters = X.alphabet.letters
    per_sort = []
    for src, dst in zip(X.parts, Y.parts):
        src_l = sorted(src, key=element_key)
        dst_l = sorted(dst, key=element_key)
        per_sort.append([dict(zip(src_l, imgs)) for imgs in product(dst_l, repeat=len(src_l))])
    for choice in product(*per_sort):
        yield SortedMapping(X, Y, dict(zip(letters, choice)))


# reindexing along a letter map


def coproduct_obj(f: LetterMap, X: SortedSet) -> SortedSet:
    """Sort ``b`` holds ``Tagged(x, a)`` for every ``a`` in the fiber of ``b`` and ``x`` in ``X_a``."""
    _same_alphabet(f.source, X.alphabet)
    parts: dict[str, set] = {b: set() for b in f.target.letters}
    for a, part in X.items():
        parts[f(a)].update(Tagged(e, a) for e in part)
    return SortedSet(f.target, parts)


def coproduct_mor(f: LetterMap, h: SortedMapping) -> SortedMapping:
    """``Tagged(x, a) -> Tagged(h_a(x), a)``."""
    comps: dict[str, dict] = {b: {} for b in f.target.letters}
    for a, comp in zip(h.dom.alphabet.letters, h.components):
        comps[f(a)].update({Tagged(e, a): Tagged(img, a) for e, img in comp.items()})
    return SortedMapping(coproduct_obj(f, h.dom), coproduct_obj(f, h.cod), comps)


def pr_iso(X: SortedSet) -> SortedMapping:
    """``coproduct(id, X) -> X``, ``Tagged(x, a) -> x``."""
    src = coproduct_obj(LetterMap.identity(X.alphabet), X)
    return SortedMapping(src, X, {a: {e: untag(e, a) for e in part} for a, part in src.items()})


def alpha_iso(f: LetterMap, g: LetterMap, X: SortedSet) -> SortedMapping:
    """``coproduct(g o f, X) -> coproduct(g, coproduct(f, X))``, ``Tagged(x, a) -> Tagged(Tagged(x, a), f(a))``."""
    gf = f.then(g)
    src = coproduct_obj(gf, X)
    dst = coproduct_obj(g, coproduct_obj(f, X))
    comps = {}
    for c, part in src.items():
        comp = {}
        for e in part:
            if not isinstance(e, Tagged) or gf(e.tag) != c:
                raise MalformedElement(f"{e} does not belong to sort {c!r}")
            comp[e] = Tagged(e, f(e.tag))
        comps[c] = comp
    return SortedMapping(src, dst, comps)


# the equivalence between words and sorted sets


def vs_obj(a: Word) -> SortedSet:
    """Sort ``x`` holds the positions of ``a`` carrying ``x``."""
    parts: dict[str, set] = {x: set() for x in a.alphabet.letters}
    for i, name in enumerate(a.letters()):
        parts[name].add(Atom(i))
    return SortedSet(a.alphabet, parts)


def vs_mor(phi: CMorphism) -> SortedMapping:
    comps: dict[str, dict] = {x: {} for x in phi.dom.alphabet.letters}
    for i, name in enumerate(phi.dom.letters()):
        comps[name][Atom(i)] = Atom(phi.map[i])
    return SortedMapping(vs_obj(phi.dom), vs_obj(phi.cod), comps)


def vs_full_inverse(a: Word, b: Word, h: SortedMapping) -> CMorphism:
    """The morphism ``i -> h_{a(i)}(i)``; its image under ``vs_mor`` is ``h``."""
    if h.dom != vs_obj(a) or h.cod != vs_obj(b):
        raise SortMismatch("mapping is not typed between the position sets of the two words")
    return CMorphism(a, b, tuple(h(name, Atom(i)).n for i, name in enumerate(a.letters())))


def sorted_set_to_word(X: SortedSet) -> Word:
    """``x_0^{n_0} x_1^{n_1} ...`` over the support in declaration order."""
    entries: list[int] = []
    for k, part in enumerate(X.parts):
        entries.extend([k] * len(part))
    return Word(X.alphabet, tuple(entries))


def essential_surjectivity_witness(X: SortedSet) -> SortedMapping:
    """A sorted bijection ``X -> vs_obj(sorted_set_to_word(X))``.

    Within each sort, elements in :func:`element_key` order are paired with the
    positions of that letter in ascending order.
    """
    w = sorted_set_to_word(X)
    target = vs_obj(w)
    comps = {}
    for x, src, dst in zip(X.alphabet.letters, X.parts, target.parts):
        comps[x] = dict(zip(sorted(src, key=element_key), sorted(dst, key=element_key)))
    return SortedMapping(X, target, comps)


def beta_iso(f: LetterMap, a: Word) -> SortedMapping:
    """``coproduct(f, vs_obj(a)) -> vs_obj(f@a)``, ``Tagged(i, x) -> i``."""
    src = coproduct_obj(f, vs_obj(a))
    dst = vs_obj(map_word(f, a))
    comps = {}
    for b, part in src.items():
        comp = {}
        for e in part:
            if not isinstance(e, Tagged) or f(e.tag) != b:
                raise MalformedElement(f"{e} does not belong to sort {b!r}")
            comp[e] = e.inner
        comps[b] = comp
    return SortedMapping(src, dst, comps)
