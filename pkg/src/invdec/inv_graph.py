"""Inversion graphs, modules and edge classes.

Edge classes are computed two ways: structurally from the substitution tree
(serial child pairs and prime external edge sets) and as the transitive
closure of the local triangle relation on the graph itself.  The two must
agree on every permutation graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .blocks import BlockKind, Interval, substitution_tree
from .perm_core import Pair, Permutation, inversion_set

__all__ = [
    "Graph", "ClassOrigin", "EdgeClass", "EdgeClassPartition",
    "inversion_graph", "is_module", "strong_modules", "connected_components",
    "edge_classes_structural", "edge_classes_closure",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the vertices ``1..n``."""

    n: int
    edges: frozenset[Pair]
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        edges = frozenset((min(e), max(e)) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in edges:
            if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"bad edge {(i, j)}")
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_adj", adj)

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    def complement(self) -> "Graph":
        return Graph(self.n, frozenset(combinations(range(1, self.n + 1), 2)) - self.edges)

    def induced_edges(self, vertices: Iterable[int]) -> frozenset[Pair]:
        vs = set(vertices)
        return frozenset(e for e in self.edges if e[0] in vs and e[1] in vs)


@dataclass(frozen=True)
class ClassOrigin:
    kind: str  # "serial-pair" | "prime-external"
    module: Interval
    pair: Optional[tuple[int, int]] = None  # 1-based child indices

    def as_dict(self) -> dict:
        d = {"kind": self.kind, "module": self.module.to_list()}
        if self.pair is not None:
            d["pair"] = list(self.pair)
        return d


@dataclass(frozen=True)
class EdgeClass:
    edges: frozenset[Pair]
    origin: Optional[ClassOrigin] = None

    def sorted_edges(self) -> list[Pair]:
        return sorted(self.edges)


@dataclass(frozen=True)
class EdgeClassPartition:
    """Edge classes in canonical order (by least edge)."""

    classes: tuple[EdgeClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def as_partition(self) -> frozenset[frozenset[Pair]]:
        """Origin-free view, for comparing partitions."""
        return frozenset(c.edges for c in self.classes)

    def class_of(self, edge: Pair) -> EdgeClass:
        edge = (min(edge), max(edge))
        for c in self.classes:
            if edge in c.edges:
                return c
        raise KeyError(edge)

    def as_dict(self) -> dict:
        out = []
        for c in self.classes:
            item: dict = {"edges": [list(e) for e in c.sorted_edges()]}
            if c.origin is not None:
                item["origin"] = c.origin.as_dict()
            out.append(item)
        return {"classes": out}


def _canonical(classes: Iterable[EdgeClass]) -> EdgeClassPartition:
    return EdgeClassPartition(tuple(sorted(classes, key=lambda c: min(c.edges))))


def inversion_graph(p: Permutation) -> Graph:
    return Graph(p.n, inversion_set(p).edges)


def is_module(graph: Graph, vertices: Iterable[int]) -> bool:
    """Every outside vertex sees all of ``vertices`` or none of them."""
    s = set(vertices)
    if not s:
        raise ValueError("modules are nonempty")
    if not s <= set(range(1, graph.n + 1)):
        raise ValueError(f"vertices {sorted(s)} outside [1, {graph.n}]")
    for v in range(1, graph.n + 1):
        if v in s:
            continue
        seen = graph.neighbors(v) & s
        if seen and len(seen) != len(s):
            return False
    return True


def strong_modules(p: Permutation) -> set[Interval]:
    return substitution_tree(p).intervals()


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def groups(self) -> list[set]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return list(out.values())


def connected_components(graph: Graph) -> list[frozenset[int]]:
    """Components sorted by least vertex."""
    uf = _UnionFind(range(1, graph.n + 1))
    for i, j in graph.edges:
        uf.union(i, j)
    return sorted((frozenset(g) for g in uf.groups()), key=min)


def edge_classes_structural(p: Permutation) -> EdgeClassPartition:
    classes = []
    graph = inversion_graph(p)
    for node in substitution_tree(p).preorder():
        if node.kind is BlockKind.SERIAL:
            kids = node.children
            for a, b in combinations(range(len(kids)), 2):
                edges = frozenset(
                    (i, j) for i in kids[a].interval for j in kids[b].interval
                )
                classes.append(EdgeClass(edges, ClassOrigin("serial-pair", node.interval, (a + 1, b + 1))))
        elif node.kind is BlockKind.PRIME:
            inner = set()
            for kid in node.children:
                inner |= graph.induced_edges(kid.interval)
            external = graph.induced_edges(node.interval) - inner
            classes.append(EdgeClass(frozenset(external), ClassOrigin("prime-external", node.interval)))
    return _canonical(classes)


def edge_classes_closure(graph: Graph) -> EdgeClassPartition:
    """Close ``ij ~ ik`` whenever ``jk`` is not an edge.

    Meant for permutation graphs; other graphs get some partition, unchecked.
    """
    uf = _UnionFind(graph.edges)
    for i in range(1, graph.n + 1):
        for j, k in combinations(sorted(graph.neighbors(i)), 2):
            if not graph.has_edge(j, k):
                uf.union((min(i, j), max(i, j)), (min(i, k), max(i, k)))
    return _canonical(EdgeClass(frozenset(g)) for g in uf.groups())
