"""Graphic and partition matroids over edge ids, and matroid intersection.

The intersection solver is the classic augmenting path scheme: build the
exchange digraph of the current common independent set, take a shortest path
from the elements addable in the first matroid to those addable in the
second, and flip membership along it.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

from .graph import EdgeColoredGraph, edges_within, require_connected


class UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, a):
        parent = self.parent
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


class Matroid:
    """Base class; subclasses supply ``ground`` and ``_independent``."""

    ground: frozenset

    def _check(self, s: Iterable[int]) -> list[int]:
        s = list(s)
        stray = [e for e in s if e not in self.ground]
        if stray:
            raise ValueError(f"elements {stray} are outside the ground set")
        return s

    def is_independent(self, s: Iterable[int]) -> bool:
        s = self._check(s)
        return len(set(s)) == len(s) and self._independent(s)

    def _independent(self, s: list[int]) -> bool:
        raise NotImplementedError

    def prepare(self, current: list[int]):
        """Return ``exchange(y) -> (free, swaps)`` for the independent set ``current``.

        ``free`` says ``current + y`` is independent; otherwise ``swaps`` lists
        the ``x`` in ``current`` with ``current - x + y`` independent.
        """
        def exchange(y):
            if self._independent(current + [y]):
                return True, []
            return False, [x for x in current if self._independent([z for z in current if z != x] + [y])]
        return exchange

    def rank(self) -> int:
        best: list[int] = []
        for e in sorted(self.ground):
            if self._independent(best + [e]):
                best.append(e)
        return len(best)


class GraphicMatroid(Matroid):
    """Forests of ``graph`` among the ground edges."""

    def __init__(self, graph: EdgeColoredGraph, ground: Iterable[int] | None = None):
        self.graph = graph
        self.ground = frozenset(range(graph.m) if ground is None else ground)
        if any(not 0 <= e < graph.m for e in self.ground):
            raise ValueError("ground contains ids that are not edges of the graph")

    @classmethod
    def on_vertices(cls, graph: EdgeColoredGraph, vertices: Iterable[int]) -> GraphicMatroid:
        """Graphic matroid of the induced subgraph on ``vertices``."""
        return cls(graph, edges_within(graph, vertices))

    def __repr__(self):
        return f"GraphicMatroid(|ground|={len(self.ground)})"

    def restrict(self, x: Iterable[int]) -> GraphicMatroid:
        return GraphicMatroid(self.graph, self.ground & frozenset(x))

    def _independent(self, s):
        uf = UnionFind()
        return all(uf.union(*self.graph.ends(e)) for e in s)

    def prepare(self, current):
        g = self.graph
        adj: dict[int, list[tuple[int, int]]] = {}
        for e in current:
            u, v = g.ends(e)
            adj.setdefault(u, []).append((v, e))
            adj.setdefault(v, []).append((u, e))
        # root every tree of the forest
        parent: dict[int, tuple[int, int]] = {}
        depth: dict[int, int] = {}
        comp: dict[int, int] = {}
        for r in sorted(adj):
            if r in depth:
                continue
            depth[r] = 0
            comp[r] = r
            queue = deque([r])
            while queue:
                v = queue.popleft()
                for x, e in adj[v]:
                    if x not in depth:
                        depth[x] = depth[v] + 1
                        parent[x] = (v, e)
                        comp[x] = r
                        queue.append(x)

        def exchange(y):
            a, b = g.ends(y)
            if a not in comp or b not in comp or comp[a] != comp[b]:
                return True, []
            path = []
            while a != b:
                if depth[a] < depth[b]:
                    a, b = b, a
                a, e = parent[a]
                path.append(e)
            return False, path
        return exchange


class PartitionMatroid(Matroid):
    """At most one ground element per color and none of a forbidden color.

    Contraction by a set ``F`` is represented by forbidding the colors of ``F``.
    """

    def __init__(self, colors: Mapping[int, int], ground: Iterable[int] | None = None,
                 forbidden: Iterable[int] = ()):
        self.colors = dict(colors)
        self.ground = frozenset(self.colors if ground is None else ground)
        if any(e not in self.colors for e in self.ground):
            raise ValueError("every ground element needs a color")
        self.forbidden = frozenset(forbidden)

    @classmethod
    def of_graph(cls, graph: EdgeColoredGraph, ground: Iterable[int] | None = None,
                 forbidden: Iterable[int] = ()) -> PartitionMatroid:
        colors = {e: graph.color(e) for e in range(graph.m)}
        return cls(colors, range(graph.m) if ground is None else ground, forbidden)

    def __repr__(self):
        return f"PartitionMatroid(|ground|={len(self.ground)}, forbidden={sorted(self.forbidden)})"

    def restrict(self, x: Iterable[int]) -> PartitionMatroid:
        return PartitionMatroid(self.colors, self.ground & frozenset(x), self.forbidden)

    def contract(self, f: Iterable[int]) -> PartitionMatroid:
        f = set(f)
        if not self.is_independent(f):
            raise ValueError("can only contract by an independent set")
        return PartitionMatroid(self.colors, self.ground - f, self.forbidden | {self.colors[e] for e in f})

    def _independent(self, s):
        cols = [self.colors[e] for e in s]
        return len(set(cols)) == len(cols) and not (set(cols) & self.forbidden)

    def prepare(self, current):
        used = {self.colors[e]: e for e in current}

        def exchange(y):
            c = self.colors[y]
            if c in self.forbidden:
                return False, []
            if c not in used:
                return True, []
            return False, [used[c]]
        return exchange


def max_common_independent(m1: Matroid, m2: Matroid, check: bool = True) -> list[int]:
    """Largest set independent in both matroids, as ascending edge ids.

    Deterministic: sources and arcs are scanned in ascending element order,
    so among shortest augmenting paths the BFS picks smallest ids first.
    """
    if m1.ground != m2.ground:
        raise ValueError("matroids must share a ground set")
    ground = sorted(m1.ground)
    current: list[int] = []
    while True:
        inset = set(current)
        ex1, ex2 = m1.prepare(current), m2.prepare(current)
        sources = []
        sinks = set()
        arcs: dict[int, list[int]] = {}
        for y in ground:
            if y in inset:
                continue
            free1, swaps1 = ex1(y)
            free2, swaps2 = ex2(y)
            if free1 and free2:
                sources = [y]
                sinks = {y}
                break
            if free1:
                sources.append(y)
            else:
                for x in swaps1:
                    arcs.setdefault(x, []).append(y)
            if free2:
                sinks.add(y)
            else:
                arcs.setdefault(y, []).extend(swaps2)
        path = _shortest_path(sources, sinks, arcs)
        if path is None:
            break
        flip = set(path)
        current = sorted((inset - flip) | (flip - inset))
    if check and not (m1.is_independent(current) and m2.is_independent(current)):
        raise AssertionError("intersection result is not common independent")
    return current


def _shortest_path(sources, sinks, arcs):
    if not sources or not sinks:
        return None
    prev = {s: None for s in sources}
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        if v in sinks:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path
        for w in sorted(arcs.get(v, ())):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    return None


def rainbow_forest_matroids(g: EdgeColoredGraph, vertices: Iterable[int] | None = None,
                            forbidden: Iterable[int] = ()) -> tuple[GraphicMatroid, PartitionMatroid]:
    """Graphic and one-per-color matroids on the edges of ``g[vertices]``."""
    ground = range(g.m) if vertices is None else edges_within(g, vertices)
    graphic = GraphicMatroid(g, ground)
    return graphic, PartitionMatroid.of_graph(g, graphic.ground, forbidden)


def has_rainbow_spanning_tree(g: EdgeColoredGraph) -> bool:
    require_connected(g)
    if g.n <= 1:
        return True
    return len(max_common_independent(*rainbow_forest_matroids(g))) == g.n - 1
