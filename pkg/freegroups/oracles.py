# freegroups/oracles.py
"""
Unabhängige Brute-Force-Referenzen für kleine Instanzen

Absichtlich langsam und nur in der Testsuite verwendet; jede Suche ist
durch ein explizites Budget begrenzt.
"""
from __future__ import annotations

from collections import deque
from typing import Optional

import numpy as np
from sympy.utilities.iterables import multiset_partitions

from config import settings
from utils.logger import Logger
from .errors import BudgetExceededError, NotSubgroupError
from .lattice import SubgroupSet, fringe, intersect, takahasi_factor
from .properties import RootWitness
from .sampling import random_extension
from .stallings import (
    StallingsGraph,
    VertexPartition,
    conjugate_subgroup,
    contains,
    leq,
    quotient,
)
from .whitehead import (
    apply_move,
    enumerate_whitehead,
    is_basis_of_free_factor,
    is_free_factor,
    rewrite_in_basis,
)
from .words import Word, shortlex_words, total_length

logger = Logger.for_module(__name__)


def oracle_free_factor(L: StallingsGraph, K: StallingsGraph, length_budget: int) -> bool:
    """
    BFS über die Bahn des umgeschriebenen Tupels unter ALLEN Whitehead-Zügen,
    beschränkt auf Tupel, die nicht länger als das Starttupel sind.

    Raises:
        BudgetExceededError: Starttupel länger als length_budget oder zu viele Zustände
    """
    if leq(L, K) is None:
        raise NotSubgroupError("L ist keine Untergruppe von K")
    start = rewrite_in_basis(L, K)
    limit = total_length(start)
    if limit > length_budget:
        raise BudgetExceededError(f"Tupellänge {limit} > Budget {length_budget}")
    if is_basis_of_free_factor(start, limit):
        return True

    moves = enumerate_whitehead(K.rank)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for m in moves:
            candidate = apply_move(m, current)
            length = total_length(candidate)
            if length > limit or candidate in seen:
                continue
            if is_basis_of_free_factor(candidate, length):
                return True
            seen.add(candidate)
            if len(seen) > settings.ORACLE_MAX_STATES:
                raise BudgetExceededError(f"Mehr als {settings.ORACLE_MAX_STATES} Tupel besucht")
            queue.append(candidate)
    return False


def oracle_root_search(H: StallingsGraph, max_len: int, max_exp: int,
                       coprime_to: Optional[int] = None) -> Optional[RootWitness]:
    """Erstes (x, d) in Shortlex-Ordnung mit x ∉ H, x^d ∈ H; Fehlen beweist nichts."""
    for x in shortlex_words(H.alphabet_rank, max_len):
        if contains(H, x):
            continue
        for d in range(2, max_exp + 1):
            if coprime_to is not None and d % coprime_to == 0:
                continue
            if contains(H, x ** d):
                return RootWitness(x, d)
    return None


def oracle_fringe_is_takahasi(H: StallingsGraph, trials: int, seed: int) -> bool:
    """Für zufällige K ⊇ H: Takahasi-Faktor liegt in fringe(H) und ist freier Faktor von K"""
    rng = np.random.default_rng(seed)
    members = fringe(H)
    for trial in range(trials):
        K = random_extension(rng, H)
        L = takahasi_factor(H, K)
        if L not in members or leq(H, L) is None or not is_free_factor(L, K):
            logger.log_message(f"Takahasi-Prüfung {trial} fehlgeschlagen", "WARNING")
            return False
    return True


def oracle_conjugate_intersection(H: StallingsGraph, max_len: int) -> Optional[Word]:
    """Erstes g ∉ H (Shortlex, |g| ≤ max_len) mit H ∩ g⁻¹Hg ≠ 1, sonst None"""
    for g in shortlex_words(H.alphabet_rank, max_len):
        if contains(H, g):
            continue
        if intersect(H, conjugate_subgroup(H, g)).rank > 0:
            return g
    return None


def oracle_fringe_by_partitions(H: StallingsGraph,
                                max_vertices: Optional[int] = None) -> SubgroupSet:
    """Quotienten nach JEDER Mengenpartition der Knoten (Bell-Zahl viele)"""
    cap = settings.ORACLE_PARTITION_MAX_VERTICES if max_vertices is None else max_vertices
    if H.num_vertices > cap:
        raise BudgetExceededError(f"{H.num_vertices} Knoten > {cap}")
    return SubgroupSet(
        quotient(H, VertexPartition.from_blocks(H.num_vertices, blocks))
        for blocks in multiset_partitions(list(range(H.num_vertices)))
    )
