"""Alphabets, words over them, and the letter-count congruence.

A word is stored as a tuple of letter indices into its alphabet, so the
word ``abbbaacab`` over ``{a, b, c}`` has entries ``(0, 1, 1, 1, 0, 0, 2, 0, 1)``.
Two words are only comparable under the same alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, Mapping, Sequence

from monoidcats import kernels
from monoidcats.errors import (
    AlphabetMismatch,
    DomainError,
    IndexOutOfRange,
    UnknownLetter,
)

EMPTY_LABEL = "λ"


@dataclass(frozen=True)
class Alphabet:
    """A finite alphabet; declaration order is the canonical letter order."""

    letters: tuple[str, ...]
    index: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        for name in letters:
            if not isinstance(name, str) or not name:
                raise DomainError(f"letter names must be non-empty strings, got {name!r}")
        if len(set(letters)) != len(letters):
            raise DomainError(f"duplicate letters in {letters!r}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "index", {x: i for i, x in enumerate(letters)})

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, name):
        return name in self.index

    def position(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownLetter(name) from None

    @property
    def compact(self) -> bool:
        """True when every letter is one character, so words render as plain strings."""
        return all(len(x) == 1 for x in self.letters)

    def __str__(self):
        return "{" + ",".join(self.letters) + "}"


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    entries: tuple[int, ...]

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i: int) -> str:
        """Letter name at position ``i``."""
        return self.alphabet.letters[self.entries[i]]

    def letters(self) -> tuple[str, ...]:
        return tuple(self.alphabet.letters[x] for x in self.entries)

    def text(self) -> str:
        """Compact rendering; the empty word renders as ``""``."""
        sep = "" if self.alphabet.compact else " "
        return sep.join(self.letters())

    def __str__(self):
        return self.text() or EMPTY_LABEL

    def __repr__(self):
        return f"Word({str(self)!r})"


@dataclass(frozen=True)
class ParikhVector:
    alphabet: Alphabet
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != len(self.alphabet):
            raise DomainError("one count per alphabet letter is required")
        if any(c < 0 for c in self.counts):
            raise DomainError("counts must be nonnegative")

    def __getitem__(self, name: str) -> int:
        return self.counts[self.alphabet.position(name)]

    def __add__(self, other: ParikhVector) -> ParikhVector:
        _same_alphabet(self.alphabet, other.alphabet)
        return ParikhVector(self.alphabet, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.alphabet.letters, self.counts))


@dataclass(frozen=True)
class MonoidSpec:
    """A monoid given by its unit and an (assumed associative) binary operation."""

    identity: Any
    combine: Callable[[Any, Any], Any]


@dataclass(frozen=True)
class LetterMap:
    """A total map between alphabets, stored as target indices."""

    source: Alphabet
    target: Alphabet
    images: tuple[int, ...]

    @classmethod
    def from_dict(cls, source: Alphabet, target: Alphabet, mapping: Mapping[str, str]) -> LetterMap:
        images = []
        for name in source.letters:
            if name not in mapping:
                raise DomainError(f"letter map is not total: {name!r} has no image")
            images.append(target.position(mapping[name]))
        return cls(source, target, tuple(images))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> LetterMap:
        return cls(alphabet, alphabet, tuple(range(len(alphabet))))

    def __call__(self, name: str) -> str:
        return self.target.letters[self.images[self.source.position(name)]]

    def then(self, g: LetterMap) -> LetterMap:
        """The composite ``g o self``."""
        _same_alphabet(self.target, g.source)
        return LetterMap(self.source, g.target, tuple(g.images[k] for k in self.images))

    def fiber(self, name: str) -> tuple[str, ...]:
        """Source letters mapped to ``name``, in declaration order."""
        b = self.target.position(name)
        return tuple(x for x, img in zip(self.source.letters, self.images) if img == b)

    def as_dict(self) -> dict[str, str]:
        return {x: self.target.letters[k] for x, k in zip(self.source.letters, self.images)}


def _same_alphabet(a: Alphabet, b: Alphabet) -> None:
    if a != b:
        raise AlphabetMismatch(f"alphabets differ: {a} vs {b}")


def word_from_letters(alphabet: Alphabet, names: Sequence[str]) -> Word:
    return Word(alphabet, tuple(alphabet.position(x) for x in names))


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse a compact string such as ``"abbba"``; ``""`` and ``"λ"`` give the empty word."""
    if text == EMPTY_LABEL and EMPTY_LABEL not in alphabet:
        text = ""
    if alphabet.compact:
        return word_from_letters(alphabet, list(text))
    return word_from_letters(alphabet, text.split())


def empty_word(alphabet: Alphabet) -> Word:
    return Word(alphabet, ())


def concat(u: Word, v: Word) -> Word:
    _same_alphabet(u.alphabet, v.alphabet)
    return Word(u.alphabet, u.entries + v.entries)


def concat_all(alphabet: Alphabet, words: Iterable[Word]) -> Word:
    out = empty_word(alphabet)
    for w in words:
        out = concat(out, w)
    return out


def length(w: Word) -> int:
    return len(w.entries)


def count(w: Word, name: str) -> int:
    x = w.alphabet.position(name)
    return sum(1 for e in w.entries if e == x)


def subword(w: Word, k: int, l: int) -> Word:
    """Entries at positions ``k..l`` inclusive."""
    if not 0 <= k <= l < len(w):
        raise IndexOutOfRange(f"subword({k}, {l}) of a word of length {len(w)}")
    return Word(w.alphabet, w.entries[k : l + 1])


def head(w: Word) -> Word:
    return subword(w, 0, 0)


def tail(w: Word) -> Word:
    return subword(w, len(w) - 1, len(w) - 1)


def lift_to_monoid(m: MonoidSpec, letter_map: Callable[[str], Any], w: Word) -> Any:
    """The monoid homomorphism extending ``letter_map``, evaluated at ``w``."""
    acc = m.identity
    for name in w.letters():
        acc = m.combine(acc, letter_map(name))
    return acc


def map_word(f: LetterMap, w: Word) -> Word:
    """Apply ``f`` letterwise."""
    _same_alphabet(f.source, w.alphabet)
    return Word(f.target, tuple(f.images[x] for x in w.entries))


def equiv(u: Word, v: Word) -> bool:
    """Same length and the same number of occurrences of every letter."""
    _same_alphabet(u.alphabet, v.alphabet)
    if len(u) != len(v):
        return False
    n = len(u.alphabet)
    return kernels.letter_counts(u.entries, n) == kernels.letter_counts(v.entries, n)


def parikh(w: Word) -> ParikhVector:
    return ParikhVector(w.alphabet, kernels.letter_counts(w.entries, len(w.alphabet)))


def parikh_from_dict(alphabet: Alphabet, counts: Mapping[str, int]) -> ParikhVector:
    for name in counts:
        alphabet.position(name)
    return ParikhVector(alphabet, tuple(int(counts.get(x, 0)) for x in alphabet.letters))


def parikh_to_canonical_word(p: ParikhVector) -> Word:
    """Blocks of equal letters in declaration order, e.g. ``(a:4, b:4, c:1) -> aaaabbbbc``."""
    entries: list[int] = []
    for x, n in enumerate(p.counts):
        entries.extend([x] * n)
    return Word(p.alphabet, tuple(entries))


def canonical_word(w: Word) -> Word:
    """The letter-sorted representative of ``w``'s equivalence class."""
    return Word(w.alphabet, tuple(sorted(w.entries)))


def all_words(alphabet: Alphabet, max_len: int) -> list[Word]:
    """Every word of length at most ``max_len``, shortest first, then lexicographic."""
    out = []
    for n in range(max_len + 1):
        out.extend(Word(alphabet, t) for t in product(range(len(alphabet)), repeat=n))
    return out
