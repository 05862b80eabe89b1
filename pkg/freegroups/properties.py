# freegroups/properties.py
"""
Entscheidbare Untergruppeneigenschaften und P-Abschlüsse über AE(H)

Unterstützt: malnormal, rein (pure), p-rein (p-pure) und
e-algebraisch abgeschlossen. F selbst erfüllt jede Eigenschaft.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from sympy import isprime

from config import settings
from utils.logger import Logger
from .algext import algebraic_extensions, is_ealg_closed, unique_minimum
from .errors import InternalInconsistencyError, InvalidPropertyError, SearchCapExceededError
from .lattice import join
from .stallings import StallingsGraph, build, contains, spanning_tree
from .words import Word, all_letters, invert

logger = Logger.for_module(__name__)


class PropertyName(Enum):
    MALNORMAL = "malnormal"
    PURE = "pure"
    P_PURE = "p-pure"
    EALG_CLOSED = "ealg-closed"


@dataclass(frozen=True)
class PropertyPredicate:
    name: PropertyName
    prime: Optional[int] = None

    def __post_init__(self):
        if self.name is PropertyName.P_PURE:
            if self.prime is None or not isprime(self.prime):
                raise InvalidPropertyError(f"p-pure verlangt eine Primzahl, nicht {self.prime}")
        elif self.prime is not None:
            raise InvalidPropertyError(f"{self.name.value} hat keinen Parameter")

    @classmethod
    def parse(cls, text: str) -> "PropertyPredicate":
        """'pure', 'p-pure:3', 'malnormal', 'ealg' oder 'ealg-closed'"""
        text = text.strip().lower()
        if text.startswith("p-pure"):
            _, _, raw = text.partition(":")
            try:
                return cls(PropertyName.P_PURE, int(raw))
            except ValueError as e:
                raise InvalidPropertyError(f"Ungültige Primzahl in '{text}'") from e
        if text == "ealg":
            return cls(PropertyName.EALG_CLOSED)
        try:
            return cls(PropertyName(text))
        except ValueError as e:
            raise InvalidPropertyError(f"Unbekannte Eigenschaft '{text}'") from e

    def evaluate(self, H: StallingsGraph) -> bool:
        if self.name is PropertyName.MALNORMAL:
            return is_malnormal(H)
        if self.name is PropertyName.PURE:
            return is_pure(H)
        if self.name is PropertyName.P_PURE:
            return is_p_pure(H, self.prime)
        return is_ealg_closed(H)

    def __str__(self) -> str:
        if self.prime is not None:
            return f"{self.name.value}:{self.prime}"
        return self.name.value


@dataclass(frozen=True)
class RootWitness:
    """x ∉ H, aber x^exponent ∈ H"""

    x: Word
    exponent: int

    def __str__(self) -> str:
        return f"({self.x}, {self.exponent})"


# =============================================================================
# MALNORMALITY
# =============================================================================
def is_malnormal(H: StallingsGraph) -> bool:
    """
    Voller Produktgraph Γ(H)×Γ(H) über alle Knotenpaare. Außerhalb der
    Diagonalkomponente muss jede Komponente ein Baum sein (Betti-Zahl 0).
    """
    n = H.num_vertices
    edges = np.array(H.edges, dtype=np.int64).reshape(-1, 3)
    sources: List[np.ndarray] = []
    targets: List[np.ndarray] = []
    for g in range(H.alphabet_rank):
        labelled = edges[edges[:, 1] == g]
        if not len(labelled):
            continue
        s, t = labelled[:, 0], labelled[:, 2]
        k = len(labelled)
        # alle Paare gleich beschrifteter Kanten
        sources.append(np.repeat(s, k) * n + np.tile(s, k))
        targets.append(np.repeat(t, k) * n + np.tile(t, k))
    if not sources:
        return True
    src = np.concatenate(sources)
    dst = np.concatenate(targets)

    adjacency = coo_matrix((np.ones(len(src)), (src, dst)), shape=(n * n, n * n)).tocsr()
    count, labels = connected_components(adjacency, directed=False)
    vertex_counts = np.bincount(labels, minlength=count)
    edge_counts = np.bincount(labels[src], minlength=count)
    betti = edge_counts - vertex_counts + 1

    diagonal = labels[H.base * n + H.base]
    cyclic = [c for c in range(count) if c != diagonal and betti[c] > 0]
    if cyclic:
        logger.debug(f"is_malnormal: {len(cyclic)} zyklische Nebenkomponenten")
    return not cyclic


# =============================================================================
# ROOTS
# =============================================================================
def _letter_maps(H: StallingsGraph) -> Dict[int, Tuple[int, ...]]:
    return {x: tuple(H.step(v, x) for v in range(H.num_vertices))
            for x in all_letters(H.alphabet_rank)}


def _first_cycle(mapping: Tuple[int, ...], coprime_to: Optional[int]) -> Optional[Tuple[int, int]]:
    """(Startknoten, Länge) des ersten Zyklus der Länge ≥ 2 der partiellen Injektion"""
    for start in range(len(mapping)):
        v, length = mapping[start], 1
        while v >= 0 and v != start and length <= len(mapping):
            v, length = mapping[v], length + 1
        if v == start and length >= 2 and (coprime_to is None or math.gcd(length, coprime_to) == 1):
            return start, length
    return None


def root_witness(H: StallingsGraph, coprime_to: Optional[int] = None) -> Optional[RootWitness]:
    """
    Sucht x ∉ H mit x^d ∈ H (und ggT(d, p) = 1 falls coprime_to = p).

    BFS über das Übergangsmonoid von Γ(H): jedes Wort w wirkt als partielle
    Injektion τ_w der Knoten. Ein Zeuge existiert genau dann, wenn ein τ_w
    einen Zyklus v₀→…→v₀ der Länge d ≥ 2 hat; dann ist x = u·w·u⁻¹ mit dem
    Baumweg u zu v₀ ein Zeuge mit Exponent d. Das Monoid ist endlich, die
    Suche also vollständig; sie liefert das kürzeste w.

    Raises:
        SearchCapExceededError: Graph oder Monoid größer als konfiguriert
    """
    if H.num_vertices > settings.ROOT_SEARCH_VERTEX_CAP:
        raise SearchCapExceededError("Wurzelsuche (Knoten)", settings.ROOT_SEARCH_VERTEX_CAP,
                                     "ROOT_SEARCH_VERTEX_CAP")
    if H.num_vertices < 2:
        return None

    letter_maps = _letter_maps(H)
    seen = set()
    queue = deque()
    for x, mapping in letter_maps.items():
        if mapping not in seen and any(v >= 0 for v in mapping):
            seen.add(mapping)
            queue.append((mapping, (x,)))

    while queue:
        mapping, word = queue.popleft()
        cycle = _first_cycle(mapping, coprime_to)
        if cycle is not None:
            start, exponent = cycle
            u = spanning_tree(H).path_word(start)
            witness = RootWitness(u * Word(word) * invert(u), exponent)
            if contains(H, witness.x) or not contains(H, witness.x ** exponent):
                raise InternalInconsistencyError(f"Wurzelzeuge {witness} ist ungültig")
            logger.debug(f"root_witness: {witness} nach {len(seen)} Monoidelementen")
            return witness
        for x, step in letter_maps.items():
            extended = tuple(step[v] if v >= 0 else -1 for v in mapping)
            if extended in seen or all(v < 0 for v in extended):
                continue
            seen.add(extended)
            if len(seen) > settings.ROOT_SEARCH_STATE_CAP:
                raise SearchCapExceededError("Wurzelsuche (Monoid)", settings.ROOT_SEARCH_STATE_CAP,
                                             "ROOT_SEARCH_STATE_CAP")
            queue.append((extended, word + (x,)))
    return None


def is_pure(H: StallingsGraph) -> bool:
    return root_witness(H) is None


def is_p_pure(H: StallingsGraph, p: int) -> bool:
    if not isprime(p):
        raise InvalidPropertyError(f"p = {p} ist keine Primzahl")
    return root_witness(H, coprime_to=p) is None


# =============================================================================
# CLOSURES
# =============================================================================
def property_closure(H: StallingsGraph, P: PropertyPredicate) -> StallingsGraph:
    """Eindeutiges inklusionsminimales K ∈ AE(H) mit P(K)"""
    candidates = [K for K in algebraic_extensions(H) if P.evaluate(K)]
    if not candidates:
        raise InternalInconsistencyError(f"Keine algebraische Erweiterung erfüllt {P}")
    closure = unique_minimum(candidates, f"{P}-Abschluss")
    logger.debug(f"property_closure[{P}]: V={H.num_vertices} -> V={closure.num_vertices}")
    return closure


def pure_closure_chain(H: StallingsGraph, coprime_to: Optional[int] = None) -> List[StallingsGraph]:
    """H = H₀ < H₁ < …, jeweils H_{i+1} = ⟨H_i, x⟩ für einen Wurzelzeugen x"""
    chain = [H]
    witness = root_witness(H, coprime_to)
    while witness is not None:
        current = chain[-1]
        extended = join(current, build(current.alphabet_rank, [witness.x]))
        if extended.num_vertices >= current.num_vertices:
            # algebraisch ⇒ echter Quotient
            raise InternalInconsistencyError(f"Wurzelschritt mit {witness} verkleinert Γ nicht")
        chain.append(extended)
        witness = root_witness(extended, coprime_to)
    return chain


def pure_closure_iterative(H: StallingsGraph, coprime_to: Optional[int] = None) -> StallingsGraph:
    return pure_closure_chain(H, coprime_to)[-1]
