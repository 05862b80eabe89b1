# freegroups/algext.py
"""
Algebraische Erweiterungen: AE(H), algebraischer Abschluss in einer
Obergruppe, elementare algebraische Nachfolger, e-algebraischer Abschluss
und Komprimiertheit
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, List, Optional

from config import settings
from utils.logger import Logger
from .errors import InternalInconsistencyError, NotSubgroupError, SearchCapExceededError
from .lattice import SubgroupSet, fringe, single_pair_quotients
from .stallings import StallingsGraph, basis, leq
from .whitehead import is_free_factor

logger = Logger.for_module(__name__)


def _require_leq(H: StallingsGraph, K: StallingsGraph) -> None:
    if leq(H, K) is None:
        raise NotSubgroupError("H ist keine Untergruppe von K")


def _describe(graphs: Iterable[StallingsGraph]) -> str:
    return "\n".join(f"  ⟨{', '.join(str(b) for b in basis(G)) or '1'}⟩" for G in graphs)


def unique_minimum(candidates: List[StallingsGraph], what: str) -> StallingsGraph:
    minimal = [L for L in candidates
               if not any(M != L and leq(M, L) is not None for M in candidates)]
    if len(minimal) != 1:
        raise InternalInconsistencyError(
            f"{what}: {len(minimal)} minimale Kandidaten statt genau einem",
            _describe(minimal or candidates))
    return minimal[0]


def _contains_proper_free_factor(K: StallingsGraph, members: Iterable[StallingsGraph]) -> bool:
    for L in members:
        # Echte freie Faktoren haben kleineren Rang
        if L.rank >= K.rank or L == K:
            continue
        if leq(L, K) is not None and is_free_factor(L, K):
            return True
    return False


def algebraic_extensions(H: StallingsGraph) -> SubgroupSet:
    """AE(H): Hauptobergruppen, die keine andere Hauptobergruppe als freien Faktor enthalten"""
    members = fringe(H)
    result = SubgroupSet(K for K in members if not _contains_proper_free_factor(K, members))
    logger.debug(f"AE: {len(result)} von {len(members)} Hauptobergruppen algebraisch")
    return result


def is_algebraic(H: StallingsGraph, K: StallingsGraph) -> bool:
    _require_leq(H, K)
    return K in algebraic_extensions(H)


def algebraic_closure(H: StallingsGraph, K: StallingsGraph) -> StallingsGraph:
    """cl_K(H): eindeutiges L mit H ≤alg L ≤ff K"""
    _require_leq(H, K)
    candidates = [L for L in algebraic_extensions(H)
                  if leq(L, K) is not None and is_free_factor(L, K)]
    return unique_minimum(candidates, "Algebraischer Abschluss")


def is_algebraically_closed_in(H: StallingsGraph, K: StallingsGraph) -> bool:
    return algebraic_closure(H, K) == H


def is_algebraically_dense_in(H: StallingsGraph, K: StallingsGraph) -> bool:
    return algebraic_closure(H, K) == K


# =============================================================================
# ELEMENTARY / E-ALGEBRAIC EXTENSIONS
# =============================================================================
def elementary_algebraic_successors(L: StallingsGraph) -> SubgroupSet:
    """Einzelpaar-Quotienten ohne Rangzuwachs (der Fall +1 ist rein transzendent)"""
    return SubgroupSet(M for M in single_pair_quotients(L) if M.rank <= L.rank)


def _ealg_reachable(H: StallingsGraph, bound: Optional[StallingsGraph] = None) -> List[StallingsGraph]:
    seen = {H}
    order = [H]
    queue = deque([H])
    while queue:
        G = queue.popleft()
        for M in elementary_algebraic_successors(G):
            if M in seen or (bound is not None and leq(M, bound) is None):
                continue
            seen.add(M)
            order.append(M)
            queue.append(M)
            if len(seen) > settings.FRINGE_MAX_MEMBERS:
                raise SearchCapExceededError("e-algebraische Ketten", settings.FRINGE_MAX_MEMBERS,
                                             "FRINGE_MAX_MEMBERS")
    return order


def is_ealg_extension(H: StallingsGraph, K: StallingsGraph) -> bool:
    _require_leq(H, K)
    return K in _ealg_reachable(H, bound=K)


def ealg_closure(H: StallingsGraph) -> StallingsGraph:
    """Größte e-algebraische Erweiterung von H"""
    reachable = _ealg_reachable(H)
    maximal = [X for X in reachable
               if not any(M != X and leq(X, M) is not None for M in reachable)]
    if len(maximal) != 1:
        raise InternalInconsistencyError(
            f"e-algebraischer Abschluss: {len(maximal)} maximale Kandidaten statt genau einem",
            _describe(maximal))
    return maximal[0]


def is_ealg_closed(H: StallingsGraph) -> bool:
    return len(elementary_algebraic_successors(H)) == 0


def is_compressed(H: StallingsGraph) -> bool:
    return all(H.rank <= K.rank for K in algebraic_extensions(H))


def non_ealg_candidates(H: StallingsGraph) -> SubgroupSet:
    """
    Algebraische Erweiterungen ohne Rangzuwachs, die KEINE e-algebraischen
    Erweiterungen sind. Ein nichtleeres Ergebnis wäre ein Gegenbeispiel-Kandidat
    für die offene Frage, ob solche Erweiterungen existieren.
    """
    reachable = set(_ealg_reachable(H))
    return SubgroupSet(K for K in algebraic_extensions(H)
                       if K.rank <= H.rank and K not in reachable)
