# freegroups/union_find.py
from typing import List, NewType

Node = NewType('Node', int)


class UnionFind:
    """Disjunkte Mengen über Knoten 0..n-1 (Union by Size, Pfadkompression)"""

    def __init__(self, N: int):
        self.parents: List[Node] = [Node(-1)] * N

    def join(self, v1: Node, v2: Node) -> Node:
        """Vereinigt die Klassen; gibt die überlebende Wurzel zurück."""
        r1 = self.root(v1)
        r2 = self.root(v2)
        if r1 == r2:
            return r1

        d1 = self.parents[r1]
        d2 = self.parents[r2]
        if d1 <= d2:
            self.parents[r2] = r1
            self.parents[r1] = Node(d1 + d2)
            return r1
        else:
            self.parents[r1] = r2
            self.parents[r2] = Node(d1 + d2)
            return r2

    def root(self, v: Node) -> Node:
        path = []
        while self.parents[v] >= 0:
            path.append(v)
            v = self.parents[v]
        for w in path:
            self.parents[w] = v
        return v
