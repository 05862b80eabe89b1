# freegroups/words.py
"""
Wortalgebra der freien Gruppe F(A)

Buchstaben sind vorzeichenbehaftete Ganzzahlen: Erzeuger g (0-basiert)
wird als +(g+1) gespeichert, sein Inverses als -(g+1).
Textform: a..z sind die Erzeuger, A..Z ihre Inversen, "1" die Identität.
"""
from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from typing import Iterable, Iterator, List, NewType, Optional, Sequence, Tuple

import numpy as np

from config import settings
from .errors import (
    LetterOutOfRangeError,
    RankMismatchError,
    WordParseError,
)

Letter = NewType('Letter', int)

IDENTITY_TEXT = "1"


# =============================================================================
# LETTERS
# =============================================================================
def make_letter(generator: int, sign: int = 1) -> Letter:
    if generator < 0 or sign not in (1, -1):
        raise ValueError(f"Ungültiger Buchstabe: Erzeuger {generator}, Vorzeichen {sign}")
    return Letter(sign * (generator + 1))


def generator_of(letter: int) -> int:
    return abs(letter) - 1


def sign_of(letter: int) -> int:
    return 1 if letter > 0 else -1


def letter_to_char(letter: int) -> str:
    char = string.ascii_lowercase[generator_of(letter)]
    return char if letter > 0 else char.upper()


def char_to_letter(char: str, rank: Optional[int] = None) -> Letter:
    if len(char) != 1 or char not in string.ascii_letters:
        raise WordParseError(f"Ungültiges Zeichen '{char}' (erlaubt: a..z, A..Z)")
    generator = string.ascii_lowercase.index(char.lower())
    if rank is not None and generator >= rank:
        raise LetterOutOfRangeError(char, rank)
    return make_letter(generator, 1 if char.islower() else -1)


def all_letters(rank: int) -> Tuple[Letter, ...]:
    """Alle 2r Buchstaben in Shortlex-Reihenfolge a, A, b, B, ..."""
    return tuple(make_letter(g, s) for g in range(rank) for s in (1, -1))


def letter_order(letter: int) -> int:
    return 2 * generator_of(letter) + (0 if letter > 0 else 1)


def _free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for x in letters:
        if x == 0:
            raise WordParseError("Buchstabe 0 ist nicht definiert")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


# =============================================================================
# WORD
# =============================================================================
class Word:
    """Frei reduziertes Wort; unveränderlich, Reduktion beim Erzeugen"""

    __slots__ = ("_letters",)

    def __init__(self, letters: Iterable[int] = ()):
        self._letters: Tuple[int, ...] = _free_reduce(int(x) for x in letters)

    @classmethod
    def identity(cls) -> "Word":
        return cls()

    @classmethod
    def generator(cls, index: int, sign: int = 1) -> "Word":
        return cls((make_letter(index, sign),))

    @classmethod
    def parse(cls, text: str, rank: Optional[int] = None) -> "Word":
        return parse_word(text, rank)

    @property
    def letters(self) -> Tuple[int, ...]:
        return self._letters

    @property
    def min_rank(self) -> int:
        """Kleinster Rang, in dem das Wort lebt"""
        return max((abs(x) for x in self._letters), default=0)

    def is_identity(self) -> bool:
        return not self._letters

    def is_cyclically_reduced(self) -> bool:
        return len(self._letters) < 2 or self._letters[0] != -self._letters[-1]

    def shortlex_key(self) -> Tuple[int, Tuple[int, ...]]:
        return len(self._letters), tuple(letter_order(x) for x in self._letters)

    def check_rank(self, rank: int) -> None:
        if self.min_rank > rank:
            raise LetterOutOfRangeError(letter_to_char(max(self._letters, key=abs)), rank)

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self._letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self._letters[item])
        return self._letters[item]

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __lt__(self, other: "Word") -> bool:
        return self.shortlex_key() < other.shortlex_key()

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        return power(self, n)

    def __str__(self) -> str:
        if not self._letters:
            return IDENTITY_TEXT
        return "".join(letter_to_char(x) for x in self._letters)

    def __repr__(self) -> str:
        return f"Word('{self}')"


# =============================================================================
# OPERATIONS
# =============================================================================
def parse_word(text: str, rank: Optional[int] = None) -> Word:
    """
    Liest ein Wort in Textform.

    Args:
        text: z.B. "abA"; "1" oder "" für die Identität
        rank: Alphabetgröße; Buchstaben darüber hinaus werden abgelehnt
    """
    text = text.strip()
    if text in ("", IDENTITY_TEXT):
        return Word()
    return Word(char_to_letter(c, rank) for c in text)


def multiply(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters)


def invert(u: Word) -> Word:
    return Word(-x for x in reversed(u.letters))


def power(u: Word, n: int) -> Word:
    if n < 0:
        return power(invert(u), -n)
    conjugator, core = cyclic_reduce(u)
    # Kern ist zyklisch reduziert, seine Potenz also reduziert
    return Word(conjugator.letters + core.letters * n + invert(conjugator).letters)


def conjugate(u: Word, g: Word) -> Word:
    """g⁻¹·u·g"""
    return Word(invert(g).letters + u.letters + g.letters)


def cyclic_reduce(u: Word) -> Tuple[Word, Word]:
    """
    Zerlegt u = c·k·c⁻¹ mit zyklisch reduziertem Kern k.

    Returns:
        (Konjugator c, Kern k)
    """
    letters = u.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    return Word(letters[:i]), Word(letters[i:j + 1])


def shortlex_words(rank: int, max_length: int, min_length: int = 1) -> Iterator[Word]:
    """Alle reduzierten Wörter mit min_length <= |w| <= max_length in Shortlex-Ordnung"""
    letters = all_letters(rank)
    for length in range(min_length, max_length + 1):
        for combo in itertools.product(letters, repeat=length):
            if all(combo[k] != -combo[k + 1] for k in range(length - 1)):
                yield Word(combo)


def random_reduced_word(rng: np.random.Generator, rank: int, length: int) -> Word:
    """Gleichverteiltes reduziertes Wort der exakten Länge length"""
    letters: List[int] = []
    while len(letters) < length:
        choices = [x for x in all_letters(rank) if not letters or x != -letters[-1]]
        letters.append(choices[int(rng.integers(len(choices)))])
    return Word(letters)


def total_length(words: Sequence[Word]) -> int:
    return sum(len(w) for w in words)


# =============================================================================
# ENDOMORPHISMS
# =============================================================================
@dataclass(frozen=True)
class Endomorphism:
    """Endomorphismus von F(A), gegeben durch die Bilder der Erzeuger"""

    rank: int
    images: Tuple[Word, ...]

    def __post_init__(self):
        if not 1 <= self.rank <= settings.MAX_RANK:
            raise ValueError(f"Rang {self.rank} nicht unterstützt (1..{settings.MAX_RANK})")
        if len(self.images) != self.rank:
            raise RankMismatchError(self.rank, len(self.images), "Anzahl der Bilder")
        for image in self.images:
            image.check_rank(self.rank)

    @classmethod
    def identity(cls, rank: int) -> "Endomorphism":
        return cls(rank, tuple(Word.generator(g) for g in range(rank)))

    @classmethod
    def parse(cls, text: str, rank: int) -> "Endomorphism":
        """'a,ab,acba' -> a↦a, b↦ab, c↦acba"""
        parts = [p for p in text.split(",")]
        return cls(rank, tuple(parse_word(p, rank) for p in parts))

    def image_of_letter(self, letter: int) -> Word:
        image = self.images[generator_of(letter)]
        return image if letter > 0 else invert(image)

    def __call__(self, u: Word) -> Word:
        return apply_endomorphism(self, u)

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """self ∘ other (erst other, dann self)"""
        if other.rank != self.rank:
            raise RankMismatchError(self.rank, other.rank)
        return Endomorphism(self.rank, tuple(self(image) for image in other.images))

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.images)


def apply_endomorphism(e: Endomorphism, u: Word) -> Word:
    if u.min_rank > e.rank:
        raise RankMismatchError(e.rank, u.min_rank, "Rang des Wortes")
    letters: List[int] = []
    for x in u.letters:
        letters.extend(e.image_of_letter(x).letters)
    return Word(letters)
