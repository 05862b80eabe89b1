# tests/conftest.py
"""
Gemeinsame Fixtures und Hilfsfunktionen der Testsuite
"""
import numpy as np
import pytest

from freegroups.stallings import StallingsGraph, bouquet, build
from freegroups.words import Word, parse_word


def w(text: str) -> Word:
    return parse_word(text)


def g(rank: int, gens: str) -> StallingsGraph:
    """g(3, "ab,acba") -> Γ(⟨ab, acba⟩) über Rang 3"""
    return build(rank, [parse_word(part, rank) for part in gens.split(",") if part.strip()])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def F2():
    return bouquet(2)


@pytest.fixture
def F3():
    return bouquet(3)


@pytest.fixture
def fringe_example():
    """⟨ab, acba⟩ ≤ F(a,b,c), Stallings-Graph mit 4 Knoten und 5 Kanten"""
    return g(3, "ab,acba")
