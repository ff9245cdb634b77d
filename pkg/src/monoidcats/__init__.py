"""Words, canonical permutations, the word category and its skeletal quotient."""

from monoidcats.kernels import BACKEND
from monoidcats.words import Alphabet, LetterMap, Word, parse_word

__version__ = "0.1.0"

__all__ = ["Alphabet", "BACKEND", "LetterMap", "Word", "parse_word", "__version__"]
