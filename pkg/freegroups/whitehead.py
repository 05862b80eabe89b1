# freegroups/whitehead.py
"""
Whitehead-Automorphismen, Längenminimierung von Tupeln und der
Freie-Faktor-Test (erster Teil des Whitehead-Algorithmus)

Zugsyntax:
    Typ I   "I:bA"       a↦b, b↦a⁻¹ (ein Bildbuchstabe je Erzeuger)
    Typ II  "II:a:*lc"   Multiplikator a; je Erzeuger eine Aktion:
                         '*' Erzeuger des Multiplikators (fest), '.' fest,
                         'l' x↦m·x, 'r' x↦x·m⁻¹, 'c' x↦m·x·m⁻¹
    Folgen werden mit ';' getrennt und von links nach rechts angewendet.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, NamedTuple, Sequence, Tuple

from utils.logger import Logger
from .errors import (
    EmptyWordError,
    NotMemberError,
    NotSubgroupError,
    RankMismatchError,
    WordParseError,
)
from .stallings import StallingsGraph, basis, build, contains, express, leq
from .words import (
    Endomorphism,
    Word,
    all_letters,
    char_to_letter,
    generator_of,
    letter_to_char,
    make_letter,
    total_length,
)

logger = Logger.for_module(__name__)


class MoveKind(Enum):
    TYPE_I = "I"
    TYPE_II = "II"


FIX = "."
LEFT = "l"
RIGHT = "r"
CONJUGATE = "c"
MULTIPLIER = "*"
ACTIONS = (FIX, LEFT, RIGHT, CONJUGATE)


@dataclass(frozen=True)
class WhiteheadAutomorphism:
    """
    Typ I: vorzeichenbehaftete Permutation (images[g] = Bildbuchstabe von g).
    Typ II: Multiplikatorbuchstabe m und eine Aktion je Erzeuger.
    """

    kind: MoveKind
    rank: int
    images: Tuple[int, ...] = ()
    multiplier: int = 0
    actions: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind is MoveKind.TYPE_I:
            if len(self.images) != self.rank:
                raise RankMismatchError(self.rank, len(self.images), "Anzahl der Bilder")
            if sorted(generator_of(x) for x in self.images) != list(range(self.rank)):
                raise WordParseError(f"Keine Permutation der Erzeuger: {self.images}")
        else:
            if len(self.actions) != self.rank:
                raise RankMismatchError(self.rank, len(self.actions), "Anzahl der Aktionen")
            m = generator_of(self.multiplier)
            if self.multiplier == 0 or m >= self.rank:
                raise WordParseError(f"Ungültiger Multiplikator {self.multiplier}")
            for g, action in enumerate(self.actions):
                expected = (MULTIPLIER,) if g == m else ACTIONS
                if action not in expected:
                    raise WordParseError(f"Ungültige Aktion '{action}' für Erzeuger {g}")

    def image_of_generator(self, g: int) -> Tuple[int, ...]:
        if self.kind is MoveKind.TYPE_I:
            return (self.images[g],)
        x = make_letter(g)
        m = self.multiplier
        action = self.actions[g]
        if action == LEFT:
            return m, x
        if action == RIGHT:
            return x, -m
        if action == CONJUGATE:
            return m, x, -m
        return (x,)

    def apply(self, w: Word) -> Word:
        letters: List[int] = []
        for x in w:
            image = self.image_of_generator(generator_of(x))
            letters.extend(image if x > 0 else (-y for y in reversed(image)))
        return Word(letters)

    def inverse(self) -> "WhiteheadAutomorphism":
        if self.kind is MoveKind.TYPE_I:
            images = [0] * self.rank
            for g, y in enumerate(self.images):
                images[generator_of(y)] = make_letter(g, 1 if y > 0 else -1)
            return WhiteheadAutomorphism(MoveKind.TYPE_I, self.rank, images=tuple(images))
        # m⁻¹ mit denselben Aktionen invertiert jede Aktion
        return WhiteheadAutomorphism(MoveKind.TYPE_II, self.rank,
                                     multiplier=-self.multiplier, actions=self.actions)

    def as_endomorphism(self) -> Endomorphism:
        return Endomorphism(self.rank, tuple(Word(self.image_of_generator(g))
                                             for g in range(self.rank)))

    def is_identity(self) -> bool:
        if self.kind is MoveKind.TYPE_I:
            return all(y == make_letter(g) for g, y in enumerate(self.images))
        return all(a in (FIX, MULTIPLIER) for a in self.actions)

    def __str__(self) -> str:
        return format_move(self)


# =============================================================================
# SYNTAX
# =============================================================================
def format_move(m: WhiteheadAutomorphism) -> str:
    if m.kind is MoveKind.TYPE_I:
        return "I:" + "".join(letter_to_char(y) for y in m.images)
    return f"II:{letter_to_char(m.multiplier)}:{''.join(m.actions)}"


def format_moves(moves: Sequence[WhiteheadAutomorphism]) -> str:
    return ";".join(format_move(m) for m in moves)


def parse_move(text: str, rank: int) -> WhiteheadAutomorphism:
    parts = text.strip().split(":")
    if parts[0] == "I" and len(parts) == 2:
        images = tuple(char_to_letter(c, rank) for c in parts[1])
        return WhiteheadAutomorphism(MoveKind.TYPE_I, rank, images=images)
    if parts[0] == "II" and len(parts) == 3 and len(parts[1]) == 1:
        return WhiteheadAutomorphism(MoveKind.TYPE_II, rank,
                                     multiplier=char_to_letter(parts[1], rank),
                                     actions=tuple(parts[2]))
    raise WordParseError(f"Ungültiger Whitehead-Zug '{text}' (erwartet I:<bilder> oder II:<m>:<aktionen>)")


def parse_moves(text: str, rank: int) -> List[WhiteheadAutomorphism]:
    return [parse_move(part, rank) for part in text.split(";") if part.strip()]


# =============================================================================
# ENUMERATION
# =============================================================================
@lru_cache(maxsize=None)
def enumerate_whitehead(rank: int) -> Tuple[WhiteheadAutomorphism, ...]:
    """
    Alle Whitehead-Automorphismen vom gegebenen Rang, ohne Duplikate.

    Typ I: r!·2^r (inklusive Identität, die zuerst kommt).
    Typ II: 2r·(4^(r-1) - 1); Tupel nur aus Fixierungen entfallen.
    Ergebnis wird pro Rang gecacht.
    """
    if rank < 1:
        raise ValueError("Rang muss mindestens 1 sein")
    moves: List[WhiteheadAutomorphism] = []
    for perm in itertools.permutations(range(rank)):
        for signs in itertools.product((1, -1), repeat=rank):
            images = tuple(make_letter(p, s) for p, s in zip(perm, signs))
            moves.append(WhiteheadAutomorphism(MoveKind.TYPE_I, rank, images=images))

    for m in all_letters(rank):
        others = [g for g in range(rank) if g != generator_of(m)]
        for choice in itertools.product(ACTIONS, repeat=len(others)):
            if all(a == FIX for a in choice):
                continue
            actions = [MULTIPLIER] * rank
            for g, a in zip(others, choice):
                actions[g] = a
            moves.append(WhiteheadAutomorphism(MoveKind.TYPE_II, rank,
                                               multiplier=m, actions=tuple(actions)))
    return tuple(moves)


def type_ii_moves(rank: int) -> Tuple[WhiteheadAutomorphism, ...]:
    return tuple(m for m in enumerate_whitehead(rank) if m.kind is MoveKind.TYPE_II)


# =============================================================================
# TUPLES
# =============================================================================
def apply_move(m: WhiteheadAutomorphism, t: Sequence[Word]) -> Tuple[Word, ...]:
    for w in t:
        if w.min_rank > m.rank:
            raise RankMismatchError(m.rank, w.min_rank, "Rang des Wortes")
    return tuple(m.apply(w) for w in t)


def compose_moves(moves: Sequence[WhiteheadAutomorphism], rank: int) -> Endomorphism:
    """Endomorphismus, der moves[0] zuerst anwendet"""
    images = tuple(Word.generator(g) for g in range(rank))
    for m in moves:
        if m.rank != rank:
            raise RankMismatchError(rank, m.rank)
        images = apply_move(m, images)
    return Endomorphism(rank, images)


def inverse_sequence(moves: Sequence[WhiteheadAutomorphism]) -> List[WhiteheadAutomorphism]:
    return [m.inverse() for m in reversed(moves)]


class MinimizationResult(NamedTuple):
    words: Tuple[Word, ...]
    total_length: int
    trace: Tuple[WhiteheadAutomorphism, ...]


def minimize_tuple(t: Sequence[Word], rank: int) -> MinimizationResult:
    """
    Greedy strikter Abstieg: wende den ersten Zug (Aufzählungsreihenfolge)
    an, der die Gesamtlänge echt verkleinert, bis keiner mehr existiert.
    Typ-I-Züge erhalten Längen und werden übersprungen.
    """
    current = tuple(t)
    length = total_length(current)
    trace: List[WhiteheadAutomorphism] = []
    moves = type_ii_moves(rank) if rank > 1 else ()
    improved = True
    while improved:
        improved = False
        for m in moves:
            candidate = apply_move(m, current)
            candidate_length = total_length(candidate)
            if candidate_length < length:
                current, length = candidate, candidate_length
                trace.append(m)
                improved = True
                break
    logger.debug(f"minimize_tuple: {len(trace)} Züge, Gesamtlänge {length}")
    return MinimizationResult(current, length, tuple(trace))


def is_basis_of_free_factor(t: Sequence[Word], length: int) -> bool:
    """Minimales Tupel: lauter Einzelbuchstaben mit paarweise verschiedenen Erzeugern"""
    if length != len(t):
        return False
    generators = [generator_of(w[0]) for w in t if len(w) == 1]
    return len(generators) == len(t) and len(set(generators)) == len(t)


# =============================================================================
# FREE FACTORS
# =============================================================================
def rewrite_in_basis(L: StallingsGraph, K: StallingsGraph) -> Tuple[Word, ...]:
    """basis(L) als Tupel über der Basis von K"""
    return tuple(express(K, b) for b in basis(L))


def is_free_factor(L: StallingsGraph, K: StallingsGraph) -> bool:
    """
    Entscheidet L ≤ff K.

    Schnelle Fälle vorab, sonst: basis(L) über basis(K) umschreiben,
    Tupel minimieren und auf Einzelbuchstaben verschiedener Erzeuger prüfen.

    Raises:
        NotSubgroupError: falls L nicht in K liegt
    """
    morphism = leq(L, K)
    if morphism is None:
        raise NotSubgroupError("L ist keine Untergruppe von K")
    if L == K or L.rank == 0:
        return True
    if L.rank > K.rank:
        return False
    if morphism.is_injective:
        # Teilgraph: Spannbaum von Γ(L) setzt sich zu einem von Γ(K) fort
        return True
    if L.rank == K.rank:
        return False

    result = minimize_tuple(rewrite_in_basis(L, K), K.rank)
    return is_basis_of_free_factor(result.words, result.total_length)


def is_primitive(w: Word, K: StallingsGraph) -> bool:
    if w.is_identity():
        raise EmptyWordError("Die Identität ist nie primitiv")
    if not contains(K, w):
        raise NotMemberError(f"'{w}' liegt nicht in K")
    return is_free_factor(build(K.alphabet_rank, [w]), K)
