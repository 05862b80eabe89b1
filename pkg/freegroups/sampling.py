# freegroups/sampling.py
"""
Zufallsstichproben von Wörtern und Untergruppen (immer mit explizitem Generator)
"""
from typing import List

import numpy as np

from .stallings import StallingsGraph, basis, build
from .words import Word, random_reduced_word


def random_words(rng: np.random.Generator, rank: int, count: int,
                 max_length: int, min_length: int = 1) -> List[Word]:
    lengths = rng.integers(min_length, max_length + 1, size=count)
    return [random_reduced_word(rng, rank, int(n)) for n in lengths]


def random_subgroup(rng: np.random.Generator, rank: int, max_generators: int = 3,
                    max_length: int = 6, min_generators: int = 1) -> StallingsGraph:
    """Γ(⟨w₁..wₖ⟩) mit zufälligen nichttrivialen Wörtern"""
    count = int(rng.integers(min_generators, max_generators + 1))
    return build(rank, random_words(rng, rank, count, max_length))


def random_extension(rng: np.random.Generator, H: StallingsGraph,
                     max_words: int = 2, max_length: int = 4) -> StallingsGraph:
    """K = ⟨H, zufällige Wörter⟩ ⊇ H"""
    count = int(rng.integers(1, max_words + 1))
    extra = random_words(rng, H.alphabet_rank, count, max_length)
    return build(H.alphabet_rank, basis(H) + extra)


def random_element(rng: np.random.Generator, H: StallingsGraph, factors: int = 3) -> Word:
    """Zufälliges Produkt von Basiselementen von H (und ihren Inversen)"""
    gens = basis(H)
    w = Word()
    if not gens:
        return w
    for _ in range(factors):
        b = gens[int(rng.integers(len(gens)))]
        w = w * (b if rng.integers(2) else ~b)
    return w
