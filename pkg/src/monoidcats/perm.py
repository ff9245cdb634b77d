"""Occurrence ranks, letter positions and canonical permutations.

For equivalent words ``u`` and ``v`` the canonical permutation sends the
``j``-th occurrence of each letter in ``u`` to the ``j``-th occurrence of the
same letter in ``v``, so that ``u == v o sigma``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

from monoidcats import kernels
from monoidcats.errors import (
    DomainError,
    IndexOutOfRange,
    NotEquivalent,
    OccurrenceOutOfRange,
    SizeMismatch,
)
from monoidcats.words import Word, _same_alphabet


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0..n-1}`` in one-line notation: ``map[i]`` is the image of ``i``."""

    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(p) for p in self.map))
        if not kernels.is_permutation(self.map):
            raise DomainError(f"{list(self.map)} is not a permutation")

    @property
    def size(self) -> int:
        return len(self.map)

    def __len__(self):
        return len(self.map)

    def __call__(self, i: int) -> int:
        return self.map[i]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen = [False] * len(self.map)
        out = []
        for start in range(len(self.map)):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.map[i]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)

    def __str__(self):
        return self.cycle_string()


def identity_perm(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, size: int) -> Permutation:
    """Parse ``"(0 2 6 4 5 7)(1 3 8)"``; omitted points are fixed."""
    stripped = _CYCLE.sub("", text).strip()
    if stripped:
        raise DomainError(f"cannot parse cycle notation {text!r}")
    image = list(range(size))
    touched: set[int] = set()
    for body in _CYCLE.findall(text):
        points = [int(t) for t in body.replace(",", " ").split()]
        for p in points:
            if not 0 <= p < size or p in touched:
                raise DomainError(f"bad cycle point {p} in {text!r}")
            touched.add(p)
        for k, p in enumerate(points):
            image[p] = points[(k + 1) % len(points)]
    return Permutation(tuple(image))


def compose_perm(s: Permutation, t: Permutation) -> Permutation:
    """``s o t``, i.e. ``i -> s(t(i))``."""
    if len(s) != len(t):
        raise SizeMismatch(f"cannot compose permutations of sizes {len(s)} and {len(t)}")
    return Permutation(kernels.compose(s.map, t.map))


def invert_perm(s: Permutation) -> Permutation:
    return Permutation(kernels.invert(s.map))


def apply_right_action(w: Word, s: Permutation) -> Word:
    """``w o s``."""
    if len(s) != len(w):
        raise SizeMismatch(f"permutation of size {len(s)} acting on a word of length {len(w)}")
    return Word(w.alphabet, tuple(w.entries[k] for k in s.map))


def occ(w: Word, i: int) -> int:
    if not 0 <= i < len(w):
        raise IndexOutOfRange(f"position {i} in a word of length {len(w)}")
    x = w.entries[i]
    return sum(1 for e in w.entries[:i] if e == x)


def occ_table(w: Word) -> tuple[int, ...]:
    return kernels.occ_ranks(w.entries, len(w.alphabet))


def pos(w: Word, name: str, j: int) -> int:
    x = w.alphabet.position(name)
    seen = 0
    for i, e in enumerate(w.entries):
        if e == x:
            if seen == j:
                return i
            seen += 1
    raise OccurrenceOutOfRange(f"{name!r} occurs {seen} times in {w}, asked for occurrence {j}")


def positions(w: Word, name: str) -> tuple[int, ...]:
    """``pos_{w,name}`` as a tuple; empty when ``name`` does not occur."""
    return kernels.letter_positions(w.entries, len(w.alphabet))[w.alphabet.position(name)]


def canonical_perm(u: Word, v: Word) -> Permutation:
    _same_alphabet(u.alphabet, v.alphabet)
    image = kernels.canonical_perm(u.entries, v.entries, len(u.alphabet))
    if image is None:
        raise NotEquivalent(f"{u} and {v} are not equivalent")
    sigma = Permutation(image)
    if apply_right_action(v, sigma) != u:
        raise AssertionError(f"canonical permutation {sigma} fails u = v o sigma")
    return sigma


def permutations_between(u: Word, v: Word):
    """Every permutation ``s`` with ``u == v o s`` (brute force; small words only)."""
    _same_alphabet(u.alphabet, v.alphabet)
    if len(u) != len(v):
        return
    for image in permutations(range(len(u))):
        if all(v.entries[image[i]] == u.entries[i] for i in range(len(u))):
            yield Permutation(image)
