"""The category whose objects are words and whose arrows are letter-preserving index maps.

A morphism ``phi: a -> b`` is a map ``{0..|a|-1} -> {0..|b|-1}`` with
``a(i) == b(phi(i))`` for every ``i``. Composition is composition of index
maps; the identity on ``a`` is the identity map on ``|a|``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import prod
from typing import Iterator, Sequence

from monoidcats import kernels
from monoidcats.errors import (
    CapExceeded,
    DomainError,
    IndexOutOfRange,
    LengthMismatch,
    NotAMorphism,
    NotComposable,
)
from monoidcats.perm import Permutation
from monoidcats.words import LetterMap, Word, _same_alphabet, map_word

DEFAULT_CAP = 10**6


def default_cap() -> int:
    """Enumeration cap, overridable through ``MONOIDCATS_CAP``."""
    raw = os.environ.get("MONOIDCATS_CAP")
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True)
class CMorphism:
    dom: Word
    cod: Word
    map: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.map[i]

    def __str__(self):
        return f"{self.dom} -> {self.cod} {list(self.map)}"


def check_morphism(a: Word, b: Word, phi: Sequence[int]) -> CMorphism:
    _same_alphabet(a.alphabet, b.alphabet)
    phi = tuple(int(k) for k in phi)
    if len(phi) != len(a):
        raise LengthMismatch(f"index map has length {len(phi)}, domain word has length {len(a)}")
    for i, k in enumerate(phi):
        if not 0 <= k < len(b):
            raise IndexOutOfRange(f"map[{i}] = {k} is outside the codomain of length {len(b)}")
    bad = kernels.first_violation(a.entries, b.entries, phi)
    if bad >= 0:
        raise NotAMorphism(bad, a[bad], b[phi[bad]])
    return CMorphism(a, b, phi)


def identity(a: Word) -> CMorphism:
    return CMorphism(a, a, tuple(range(len(a))))


def compose(psi: CMorphism, phi: CMorphism) -> CMorphism:
    """``psi o phi``."""
    if phi.cod != psi.dom:
        raise NotComposable(f"codomain {phi.cod} differs from domain {psi.dom}")
    return CMorphism(phi.dom, psi.cod, kernels.compose(psi.map, phi.map))


def hom_cardinality(a: Word, b: Word) -> int:
    """Product over letters of ``count(b, x) ** count(a, x)``, with ``0 ** 0 == 1``."""
    _same_alphabet(a.alphabet, b.alphabet)
    n = len(a.alphabet)
    ca = kernels.letter_counts(a.entries, n)
    cb = kernels.letter_counts(b.entries, n)
    return prod(cb[x] ** ca[x] for x in range(n))


def enumerate_hom(a: Word, b: Word, cap: int | None = None) -> Iterator[CMorphism]:
    """Every morphism ``a -> b`` exactly once, in lexicographic order of the index map."""
    cap = default_cap() if cap is None else cap
    total = hom_cardinality(a, b)
    if total > cap:
        raise CapExceeded(f"Hom({a}, {b}) has {total} morphisms, cap is {cap}")
    for phi in kernels.hom_maps(a.entries, b.entries, len(a.alphabet)):
        yield CMorphism(a, b, phi)


def is_iso(phi: CMorphism) -> bool:
    return len(phi.dom) == len(phi.cod) and kernels.is_permutation(phi.map)


def inverse(phi: CMorphism) -> CMorphism:
    if not is_iso(phi):
        raise DomainError(f"{phi} is not invertible")
    return CMorphism(phi.cod, phi.dom, kernels.invert(phi.map))


def from_permutation(a: Word, b: Word, sigma: Permutation) -> CMorphism:
    return check_morphism(a, b, sigma.map)


def functor_c_obj(f: LetterMap, a: Word) -> Word:
    return map_word(f, a)


def functor_c_mor(f: LetterMap, phi: CMorphism) -> CMorphism:
    """Same index map between the relabelled endpoints."""
    return CMorphism(map_word(f, phi.dom), map_word(f, phi.cod), phi.map)


def find_isomorphic_distinct(words: Sequence[Word]):
    """A pair of distinct isomorphic words among ``words`` with an iso between them, or ``None``."""
    for i, a in enumerate(words):
        for b in words[i + 1 :]:
            if len(a) != len(b) or a == b:
                continue
            for phi in kernels.hom_maps(a.entries, b.entries, len(a.alphabet)):
                if kernels.is_permutation(phi):
                    return a, b, CMorphism(a, b, phi)
    return None
