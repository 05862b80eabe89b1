# freegroups/stallings.py
"""
Stallings-Graphen endlich erzeugter Untergruppen von F(A)

Ein StallingsGraph ist gefaltet, getrimmt und kanonisch nummeriert
(Basis = Knoten 0, BFS-Reihenfolge). Damit ist Gleichheit von
Untergruppen einfach Gleichheit der Kantenlisten.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from config import settings
from utils.logger import Logger
from .errors import (
    LetterOutOfRangeError,
    NotMemberError,
    NotSubgroupError,
    RankMismatchError,
    WordParseError,
)
from .union_find import Node, UnionFind
from .words import (
    Endomorphism,
    Word,
    apply_endomorphism,
    char_to_letter,
    conjugate,
    generator_of,
    invert,
    letter_to_char,
    make_letter,
)

logger = Logger.for_module(__name__)

# (Quelle, Erzeuger 0-basiert, Ziel)
Edge = Tuple[int, int, int]

INFINITE = math.inf
Index = Union[int, float]


# =============================================================================
# RAW GRAPHS
# =============================================================================
@dataclass(frozen=True)
class LabeledGraph:
    """Beliebiger gewurzelter A-beschrifteter Graph (Eingabe für fold)"""

    rank: int
    num_vertices: int
    edges: Tuple[Edge, ...]
    base: int = 0

    def __post_init__(self):
        if not 1 <= self.rank <= settings.MAX_RANK:
            raise ValueError(f"Rang {self.rank} nicht unterstützt (1..{settings.MAX_RANK})")
        if not 0 <= self.base < max(self.num_vertices, 1):
            raise ValueError(f"Basisknoten {self.base} existiert nicht")
        for s, g, t in self.edges:
            if not (0 <= s < self.num_vertices and 0 <= t < self.num_vertices):
                raise ValueError(f"Kante ({s}, {g}, {t}) verweist auf unbekannten Knoten")
            if not 0 <= g < self.rank:
                raise LetterOutOfRangeError(str(g), self.rank)

    @classmethod
    def from_words(cls, rank: int, words: Iterable[Word]) -> "LabeledGraph":
        """Bukett unterteilter Kreise, ein Blütenblatt pro (nichttrivialem) Wort"""
        edges: List[Edge] = []
        num_vertices = 1
        for w in words:
            w.check_rank(rank)
            if not len(w):
                continue
            path = [0] + list(range(num_vertices, num_vertices + len(w) - 1)) + [0]
            num_vertices += len(w) - 1
            for k, x in enumerate(w):
                edges.append(_oriented_edge(path[k], x, path[k + 1]))
        return cls(rank, num_vertices, tuple(edges))

    def shuffled(self, rng: np.random.Generator) -> "LabeledGraph":
        """Gleicher Graph mit zufälliger Knotennummerierung und Kantenreihenfolge"""
        perm = rng.permutation(self.num_vertices)
        edges = [(int(perm[s]), g, int(perm[t])) for s, g, t in self.edges]
        order = rng.permutation(len(edges))
        return LabeledGraph(self.rank, self.num_vertices,
                            tuple(edges[int(k)] for k in order), int(perm[self.base]))


def _oriented_edge(source: int, letter: int, target: int) -> Edge:
    """Ein Buchstabe x⁻¹ von s nach t ist die Kante t -x-> s."""
    if letter > 0:
        return source, generator_of(letter), target
    return target, generator_of(letter), source


# =============================================================================
# STALLINGS GRAPH
# =============================================================================
class StallingsGraph:
    """
    Gefalteter, getrimmter, kanonischer Graph Γ_A(H).

    Wird nur über fold()/build() erzeugt; der Konstruktor vertraut
    darauf, dass die Kantenliste bereits kanonisch ist.
    """

    __slots__ = ("alphabet_rank", "num_vertices", "edges", "_out", "_inc", "_hash")

    base = 0

    def __init__(self, alphabet_rank: int, num_vertices: int, edges: Tuple[Edge, ...]):
        self.alphabet_rank = alphabet_rank
        self.num_vertices = num_vertices
        self.edges = edges
        self._hash = hash((alphabet_rank, num_vertices, edges))
        self._out: List[List[int]] = [[-1] * alphabet_rank for _ in range(num_vertices)]
        self._inc: List[List[int]] = [[-1] * alphabet_rank for _ in range(num_vertices)]
        for s, g, t in edges:
            self._out[s][g] = t
            self._inc[t][g] = s

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def rank(self) -> int:
        return self.num_edges - self.num_vertices + 1

    def out(self, vertex: int, generator: int) -> int:
        """Ziel der ausgehenden Kante oder -1"""
        return self._out[vertex][generator]

    def inc(self, vertex: int, generator: int) -> int:
        """Quelle der eingehenden Kante oder -1"""
        return self._inc[vertex][generator]

    def step(self, vertex: int, letter: int) -> int:
        g = generator_of(letter)
        return self._out[vertex][g] if letter > 0 else self._inc[vertex][g]

    def read(self, w: Word, start: int = 0) -> int:
        """Endknoten beim Lesen von w ab start, -1 falls nicht lesbar"""
        v = start
        for x in w:
            v = self.step(v, x)
            if v < 0:
                return -1
        return v

    def degree(self, vertex: int) -> int:
        return sum(1 for g in range(self.alphabet_rank) for arr in (self._out, self._inc)
                   if arr[vertex][g] >= 0)

    def sort_key(self) -> Tuple[int, Tuple[Edge, ...]]:
        return self.num_vertices, self.edges

    def to_labeled(self) -> LabeledGraph:
        return LabeledGraph(self.alphabet_rank, self.num_vertices, self.edges)

    def __eq__(self, other) -> bool:
        return (isinstance(other, StallingsGraph)
                and self.alphabet_rank == other.alphabet_rank
                and self.num_vertices == other.num_vertices
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        gens = ", ".join(str(b) for b in basis(self)) or "1"
        return f"<StallingsGraph ⟨{gens}⟩ V={self.num_vertices} E={self.num_edges}>"


@dataclass(frozen=True)
class GraphMorphism:
    """Der eindeutige Morphismus φ_{H,K}: Γ(H) -> Γ(K)"""

    source: StallingsGraph
    target: StallingsGraph
    vertex_map: Tuple[int, ...]

    @property
    def is_injective(self) -> bool:
        # Morphismen gefalteter Graphen sind Immersionen: Knoteninjektivität genügt
        return len(set(self.vertex_map)) == len(self.vertex_map)

    @property
    def is_surjective(self) -> bool:
        image_edges = {(self.vertex_map[s], g, self.vertex_map[t]) for s, g, t in self.source.edges}
        return (len(set(self.vertex_map)) == self.target.num_vertices
                and len(image_edges) == self.target.num_edges)

    @property
    def is_covering(self) -> bool:
        """Surjektiv und lokal bijektiv: jeder Knoten hat dieselben Kantenbuchstaben wie sein Bild"""
        if len(set(self.vertex_map)) != self.target.num_vertices:
            return False
        source, target = self.source, self.target
        for v, image in enumerate(self.vertex_map):
            for g in range(source.alphabet_rank):
                if (source.out(v, g) < 0) != (target.out(image, g) < 0):
                    return False
                if (source.inc(v, g) < 0) != (target.inc(image, g) < 0):
                    return False
        return True

    def image_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted({(self.vertex_map[s], g, self.vertex_map[t])
                             for s, g, t in self.source.edges}))


@dataclass(frozen=True)
class VertexPartition:
    """Partition der Knotenmenge; fehlende Knoten sind Einzelblöcke."""

    num_vertices: int
    blocks: Tuple[FrozenSet[int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        seen = set()
        for block in self.blocks:
            if not block:
                raise ValueError("Leerer Block in der Partition")
            for v in block:
                if not 0 <= v < self.num_vertices:
                    raise ValueError(f"Knoten {v} existiert nicht")
                if v in seen:
                    raise ValueError(f"Knoten {v} liegt in mehreren Blöcken")
                seen.add(v)

    @classmethod
    def from_blocks(cls, num_vertices: int, blocks: Iterable[Iterable[int]]) -> "VertexPartition":
        return cls(num_vertices, tuple(frozenset(b) for b in blocks))

    @classmethod
    def pair(cls, num_vertices: int, v: int, w: int) -> "VertexPartition":
        return cls(num_vertices, (frozenset((v, w)),))

    def merge_pairs(self) -> List[Tuple[int, int]]:
        pairs = []
        for block in self.blocks:
            first, *rest = sorted(block)
            pairs.extend((first, v) for v in rest)
        return pairs


# =============================================================================
# FOLDING
# =============================================================================
def fold(graph: LabeledGraph, merges: Sequence[Tuple[int, int]] = ()) -> StallingsGraph:
    """
    Faltet, trimmt und kanonisiert einen beliebigen Graphen.

    Union-Find über Knoten; jede Klasse hält ihre ausgehenden/eingehenden
    Kanten je Erzeuger. Zwei gleich beschriftete Kanten an einer Klasse
    erzwingen das Verschmelzen ihrer anderen Endpunkte (Worklist).

    Args:
        graph: Eingabegraph
        merges: zusätzlich zu identifizierende Knotenpaare (Quotienten)
    """
    uf = UnionFind(graph.num_vertices)
    out: Dict[int, Dict[int, int]] = {v: {} for v in range(graph.num_vertices)}
    inc: Dict[int, Dict[int, int]] = {v: {} for v in range(graph.num_vertices)}
    pending: List[Tuple[int, int]] = []

    def process_pending():
        while pending:
            x, y = pending.pop()
            rx, ry = uf.root(Node(x)), uf.root(Node(y))
            if rx == ry:
                continue
            keep = uf.join(rx, ry)
            gone = ry if keep == rx else rx
            for table in (out, inc):
                kept_edges = table[keep]
                for g, other in table.pop(gone).items():
                    if g in kept_edges:
                        pending.append((kept_edges[g], other))
                    else:
                        kept_edges[g] = other

    for s, g, t in graph.edges:
        rs, rt = uf.root(Node(s)), uf.root(Node(t))
        if g in out[rs]:
            pending.append((out[rs][g], t))
        else:
            out[rs][g] = t
        if g in inc[rt]:
            pending.append((inc[rt][g], s))
        else:
            inc[rt][g] = s
        process_pending()

    for v, w in merges:
        pending.append((v, w))
        process_pending()

    base = uf.root(Node(graph.base))
    edges = {(root, g, uf.root(Node(t))) for root, table in out.items() for g, t in table.items()}
    folded = _trim(base, edges)
    result = _canonicalize(graph.rank, base, folded)
    if logger.is_debug():
        logger.debug(f"fold: V={graph.num_vertices} E={len(graph.edges)} -> "
                     f"V={result.num_vertices} E={result.num_edges}")
    return result


def _trim(base: int, edges: Iterable[Edge]) -> List[Edge]:
    """Entfernt wiederholt Nicht-Basisknoten vom Grad <= 1."""
    edges = set(edges)
    incident: Dict[int, set] = {}
    for e in edges:
        incident.setdefault(e[0], set()).add(e)
        incident.setdefault(e[2], set()).add(e)

    def degree(v: int) -> int:
        # Schleifen zählen doppelt
        return sum(2 if e[0] == e[2] else 1 for e in incident.get(v, ()))

    queue = deque(v for v in incident if v != base and degree(v) <= 1)
    while queue:
        v = queue.popleft()
        if v == base or v not in incident or degree(v) > 1:
            continue
        for e in list(incident.pop(v)):
            edges.discard(e)
            other = e[2] if e[0] == v else e[0]
            if other in incident:
                incident[other].discard(e)
                if other != base and degree(other) <= 1:
                    queue.append(other)
    return list(edges)


def _canonicalize(rank: int, base: int, edges: Iterable[Edge]) -> StallingsGraph:
    """
    BFS ab der Basis: je Knoten erst ausgehende Kanten nach Erzeuger,
    dann eingehende. Nummerierung in Entdeckungsreihenfolge; nur die
    Komponente der Basis bleibt erhalten.
    """
    out: Dict[int, Dict[int, int]] = {}
    inc: Dict[int, Dict[int, int]] = {}
    for s, g, t in edges:
        out.setdefault(s, {})[g] = t
        inc.setdefault(t, {})[g] = s

    numbering = {base: 0}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for table in (out, inc):
            neighbours = table.get(v, {})
            for g in sorted(neighbours):
                w = neighbours[g]
                if w not in numbering:
                    numbering[w] = len(numbering)
                    queue.append(w)

    canonical = tuple(sorted((numbering[s], g, numbering[t])
                             for s, g, t in edges if s in numbering))
    return StallingsGraph(rank, len(numbering), canonical)


# =============================================================================
# CONSTRUCTION
# =============================================================================
def build(rank: int, generators: Iterable[Word]) -> StallingsGraph:
    """Γ(⟨generators⟩); leere Wörter werden übersprungen."""
    generators = list(generators)
    return fold(LabeledGraph.from_words(rank, generators))


def bouquet(rank: int) -> StallingsGraph:
    """Γ(F(A)): ein Knoten, eine Schleife pro Erzeuger"""
    return build(rank, [Word.generator(g) for g in range(rank)])


def trivial(rank: int) -> StallingsGraph:
    return build(rank, [])


def is_whole_group(H: StallingsGraph) -> bool:
    return H.num_vertices == 1 and H.num_edges == H.alphabet_rank


# =============================================================================
# QUERIES
# =============================================================================
def _check_same_rank(H: StallingsGraph, K: StallingsGraph) -> None:
    if H.alphabet_rank != K.alphabet_rank:
        raise RankMismatchError(H.alphabet_rank, K.alphabet_rank)


def equal(H: StallingsGraph, K: StallingsGraph) -> bool:
    _check_same_rank(H, K)
    return H == K


def contains(H: StallingsGraph, w: Word) -> bool:
    if w.min_rank > H.alphabet_rank:
        return False
    return H.read(w) == H.base


def rank(H: StallingsGraph) -> int:
    return H.rank


class _SpanningTree:
    """BFS-Spannbaum der kanonischen Form samt Baumwegen und Basiskanten"""

    def __init__(self, H: StallingsGraph):
        self.prefix: List[Optional[Word]] = [None] * H.num_vertices
        self.prefix[H.base] = Word()
        tree_edges = set()
        queue = deque([H.base])
        while queue:
            v = queue.popleft()
            for g in range(H.alphabet_rank):
                w = H.out(v, g)
                if w >= 0 and self.prefix[w] is None:
                    self.prefix[w] = self.prefix[v] * Word.generator(g)
                    tree_edges.add((v, g, w))
                    queue.append(w)
            for g in range(H.alphabet_rank):
                w = H.inc(v, g)
                if w >= 0 and self.prefix[w] is None:
                    self.prefix[w] = self.prefix[v] * Word.generator(g, -1)
                    tree_edges.add((w, g, v))
                    queue.append(w)
        self.basis_edges: Tuple[Edge, ...] = tuple(e for e in H.edges if e not in tree_edges)
        self.edge_index: Dict[Edge, int] = {e: k for k, e in enumerate(self.basis_edges)}

    def path_word(self, vertex: int) -> Word:
        return self.prefix[vertex]

    def basis_word(self, edge: Edge) -> Word:
        s, g, t = edge
        return self.prefix[s] * Word.generator(g) * invert(self.prefix[t])


@lru_cache(maxsize=4096)
def spanning_tree(H: StallingsGraph) -> _SpanningTree:
    return _SpanningTree(H)


def basis(H: StallingsGraph) -> List[Word]:
    """Basis aus dem BFS-Spannbaum; Nicht-Baumkanten in kanonischer Reihenfolge"""
    tree = spanning_tree(H)
    return [tree.basis_word(e) for e in tree.basis_edges]


def express(H: StallingsGraph, w: Word) -> Word:
    """
    Schreibt w ∈ H als Wort über den Basisbuchstaben von basis(H).

    Der i-te Basisbuchstabe (0-basiert) wird als Erzeuger i kodiert, das
    Ergebnis lebt also in der abstrakten freien Gruppe vom Rang rank(H).

    Raises:
        NotMemberError: falls w nicht in H liegt
    """
    tree = spanning_tree(H)
    letters: List[int] = []
    v = H.base
    for x in w:
        g = generator_of(x)
        if x > 0:
            nxt = H.out(v, g) if g < H.alphabet_rank else -1
            edge = (v, g, nxt)
        else:
            nxt = H.inc(v, g) if g < H.alphabet_rank else -1
            edge = (nxt, g, v)
        if nxt < 0:
            raise NotMemberError(f"'{w}' ist nicht lesbar in Γ(H)")
        k = tree.edge_index.get(edge)
        if k is not None:
            letters.append(make_letter(k, 1 if x > 0 else -1))
        v = nxt
    if v != H.base:
        raise NotMemberError(f"'{w}' endet nicht an der Basis")
    return Word(letters)


def index(H: StallingsGraph) -> Index:
    """Index in F(A): Knotenzahl, falls Γ(H) eine Überlagerung ist, sonst INFINITE"""
    for v in range(H.num_vertices):
        for g in range(H.alphabet_rank):
            if H.out(v, g) < 0 or H.inc(v, g) < 0:
                return INFINITE
    return H.num_vertices


def leq(H: StallingsGraph, K: StallingsGraph) -> Optional[GraphMorphism]:
    """
    Simultanes Durchlaufen ab beiden Basen.

    Returns:
        φ_{H,K} falls H ≤ K, sonst None
    """
    _check_same_rank(H, K)
    vertex_map = [-1] * H.num_vertices
    vertex_map[H.base] = K.base
    queue = deque([H.base])
    while queue:
        v = queue.popleft()
        image = vertex_map[v]
        for g in range(H.alphabet_rank):
            for h_next, k_next in ((H.out(v, g), K.out(image, g)), (H.inc(v, g), K.inc(image, g))):
                if h_next < 0:
                    continue
                if k_next < 0:
                    return None
                if vertex_map[h_next] < 0:
                    vertex_map[h_next] = k_next
                    queue.append(h_next)
                elif vertex_map[h_next] != k_next:
                    return None
    return GraphMorphism(H, K, tuple(vertex_map))


def relative_index(H: StallingsGraph, K: StallingsGraph) -> Index:
    """[K : H] endlich genau dann, wenn φ_{H,K} eine Überlagerung ist; dann die Fasergröße"""
    morphism = leq(H, K)
    if morphism is None:
        raise NotSubgroupError("H ist keine Untergruppe von K")
    if not morphism.is_covering:
        return INFINITE
    return H.num_vertices // K.num_vertices


def quotient(H: StallingsGraph, partition: VertexPartition) -> StallingsGraph:
    if partition.num_vertices != H.num_vertices:
        raise ValueError(f"Partition über {partition.num_vertices} Knoten, "
                         f"Graph hat {H.num_vertices}")
    return fold(H.to_labeled(), partition.merge_pairs())


def merge_pair(H: StallingsGraph, v: int, w: int) -> StallingsGraph:
    return fold(H.to_labeled(), ((v, w),))


def subgroup_image(e: Endomorphism, H: StallingsGraph) -> StallingsGraph:
    """Γ(⟨e(h) : h ∈ basis(H)⟩)"""
    if e.rank != H.alphabet_rank:
        raise RankMismatchError(H.alphabet_rank, e.rank)
    return build(e.rank, [apply_endomorphism(e, b) for b in basis(H)])


def is_surjective_endomorphism(e: Endomorphism) -> bool:
    return is_whole_group(build(e.rank, e.images))


def conjugate_subgroup(H: StallingsGraph, g: Word) -> StallingsGraph:
    """Γ(g⁻¹Hg)"""
    return build(H.alphabet_rank, [conjugate(b, g) for b in basis(H)])


# =============================================================================
# SERIALIZATION
# =============================================================================
def to_record(H: StallingsGraph) -> dict:
    return {
        "rank": H.alphabet_rank,
        "base": H.base,
        "edges": [[s, letter_to_char(make_letter(g)), t] for s, g, t in H.edges],
    }


def from_record(record: dict) -> StallingsGraph:
    """Liest einen Graph-Datensatz; ungefaltete Eingaben werden gefaltet."""
    try:
        rank_ = int(record["rank"])
        base = int(record.get("base", 0))
        raw_edges = record["edges"]
    except (KeyError, TypeError, ValueError) as e:
        raise WordParseError(f"Ungültiger Graph-Datensatz: {e}") from e

    edges: List[Edge] = []
    vertices = {base}
    for item in raw_edges:
        if len(item) != 3:
            raise WordParseError(f"Kante {item!r} ist kein Tripel")
        s, char, t = int(item[0]), str(item[1]), int(item[2])
        letter = char_to_letter(char, rank_)
        edges.append(_oriented_edge(s, letter, t))
        vertices.update((s, t))
    if min(vertices) < 0:
        raise WordParseError("Negative Knotennummer im Graph-Datensatz")
    return fold(LabeledGraph(rank_, max(vertices) + 1, tuple(edges), base))
