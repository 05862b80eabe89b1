# freegroups/lattice.py
"""
Untergruppenverband: Schnitt, Erzeugnis, Fringe (Hauptobergruppen),
Takahasi-Faktor und Fringe bezüglich einer anderen Basis
"""
from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from config import settings
from utils.logger import Logger
from .errors import NotSubgroupError, RankMismatchError, SearchCapExceededError
from .stallings import (
    Edge,
    LabeledGraph,
    StallingsGraph,
    basis,
    build,
    fold,
    leq,
    merge_pair,
    subgroup_image,
)
from .whitehead import WhiteheadAutomorphism, compose_moves, inverse_sequence

logger = Logger.for_module(__name__)


class SubgroupSet:
    """Duplikatfreie Menge von Stallings-Graphen, sortiert nach (V, Kantenliste)"""

    __slots__ = ("_members", "_lookup")

    def __init__(self, graphs: Iterable[StallingsGraph] = ()):
        unique = {}
        for G in graphs:
            unique.setdefault(G, G)
        self._members: Tuple[StallingsGraph, ...] = tuple(sorted(unique, key=StallingsGraph.sort_key))
        self._lookup = frozenset(self._members)

    @property
    def members(self) -> Tuple[StallingsGraph, ...]:
        return self._members

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[StallingsGraph]:
        return iter(self._members)

    def __getitem__(self, item: int) -> StallingsGraph:
        return self._members[item]

    def __contains__(self, G: object) -> bool:
        return G in self._lookup

    def __eq__(self, other) -> bool:
        return isinstance(other, SubgroupSet) and self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"SubgroupSet({list(self._members)!r})"

    def find(self, G: StallingsGraph) -> Optional[int]:
        """Position von G oder None"""
        for k, member in enumerate(self._members):
            if member == G:
                return k
        return None

    def union(self, other: Iterable[StallingsGraph]) -> "SubgroupSet":
        return SubgroupSet(list(self._members) + list(other))

    def intersection(self, other: "SubgroupSet") -> "SubgroupSet":
        return SubgroupSet(G for G in self._members if G in other)

    def issubset(self, other: "SubgroupSet") -> bool:
        return all(G in other for G in self._members)

    def filter(self, predicate) -> "SubgroupSet":
        return SubgroupSet(G for G in self._members if predicate(G))


# =============================================================================
# INTERSECTION / JOIN
# =============================================================================
def intersect(H: StallingsGraph, K: StallingsGraph) -> StallingsGraph:
    """Produktgraph, nur die Komponente von (Basis, Basis)"""
    if H.alphabet_rank != K.alphabet_rank:
        raise RankMismatchError(H.alphabet_rank, K.alphabet_rank)
    ids: Dict[Tuple[int, int], int] = {(H.base, K.base): 0}
    queue = deque([(H.base, K.base)])
    edges: List[Edge] = []
    while queue:
        u, v = queue.popleft()
        here = ids[(u, v)]
        for g in range(H.alphabet_rank):
            pair = (H.out(u, g), K.out(v, g))
            if pair[0] >= 0 and pair[1] >= 0:
                if pair not in ids:
                    ids[pair] = len(ids)
                    queue.append(pair)
                edges.append((here, g, ids[pair]))
            pair = (H.inc(u, g), K.inc(v, g))
            if pair[0] >= 0 and pair[1] >= 0 and pair not in ids:
                # Kante wird beim Besuch ihrer Quelle erfasst
                ids[pair] = len(ids)
                queue.append(pair)
    return fold(LabeledGraph(H.alphabet_rank, len(ids), tuple(edges)))


def join(H: StallingsGraph, K: StallingsGraph) -> StallingsGraph:
    if H.alphabet_rank != K.alphabet_rank:
        raise RankMismatchError(H.alphabet_rank, K.alphabet_rank)
    return build(H.alphabet_rank, basis(H) + basis(K))


# =============================================================================
# FRINGE
# =============================================================================
def single_pair_quotients(G: StallingsGraph) -> Iterator[StallingsGraph]:
    for v in range(G.num_vertices):
        for w in range(v + 1, G.num_vertices):
            yield merge_pair(G, v, w)


def fringe(H: StallingsGraph, max_members: Optional[int] = None) -> SubgroupSet:
    """
    O_A(H): alle Quotienten von Γ(H), per BFS über Einzelpaar-Verschmelzungen.

    Raises:
        SearchCapExceededError: mehr als max_members Quotienten
    """
    cap = settings.FRINGE_MAX_MEMBERS if max_members is None else max_members
    seen = {H}
    queue = deque([H])
    while queue:
        G = queue.popleft()
        for Q in single_pair_quotients(G):
            if Q not in seen:
                seen.add(Q)
                queue.append(Q)
                if len(seen) > cap:
                    raise SearchCapExceededError("Fringe", cap, "FRINGE_MAX_MEMBERS")
    logger.debug(f"fringe: {len(seen)} Hauptobergruppen (V={H.num_vertices})")
    return SubgroupSet(seen)


def takahasi_factor(H: StallingsGraph, K: StallingsGraph) -> StallingsGraph:
    """Bild von φ_{H,K}: freier Faktor von K, der H enthält und in fringe(H) liegt"""
    morphism = leq(H, K)
    if morphism is None:
        raise NotSubgroupError("H ist keine Untergruppe von K")
    return fold(LabeledGraph(K.alphabet_rank, K.num_vertices, morphism.image_edges()))


def fringe_in_basis(H: StallingsGraph,
                    moves: Sequence[WhiteheadAutomorphism]) -> SubgroupSet:
    """
    Fringe von H bezüglich der Basis B = ψ(A), ψ = Komposition der Züge
    (moves[0] zuerst). Berechnet als ψ(fringe(ψ⁻¹(H))).
    """
    rank = H.alphabet_rank
    forward = compose_moves(moves, rank)
    backward = compose_moves(inverse_sequence(moves), rank)
    pulled_back = subgroup_image(backward, H)
    return SubgroupSet(subgroup_image(forward, K) for K in fringe(pulled_back))
