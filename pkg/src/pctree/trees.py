from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .graph import EdgeColoredGraph


class Mode(str, enum.Enum):
    RAINBOW = "rainbow"
    PROPER = "proper"


@dataclass(frozen=True)
class ColoredTree:
    """A tree in some graph, given by its vertex set and edge ids."""

    vertices: frozenset
    edges: tuple
    mode: Mode = Mode.PROPER

    @property
    def order(self) -> int:
        return len(self.vertices)

    @classmethod
    def from_edges(cls, g: EdgeColoredGraph, eids: Iterable[int], mode: Mode = Mode.PROPER,
                   root: int | None = None) -> ColoredTree:
        eids = tuple(sorted(eids))
        verts = {v for e in eids for v in g.ends(e)}
        if root is not None:
            verts.add(root)
        return cls(frozenset(verts), eids, mode)

    def with_mode(self, mode: Mode) -> ColoredTree:
        return ColoredTree(self.vertices, self.edges, mode)

    def mapped(self, g_from: EdgeColoredGraph) -> ColoredTree:
        """Translate edge ids through ``g_from.origin`` (vertex ids are shared)."""
        return ColoredTree(self.vertices, tuple(sorted(g_from.origin[e] for e in self.edges)), self.mode)


def tree_defect(g: EdgeColoredGraph, t: ColoredTree, mode: Mode | None = None) -> str | None:
    """Reason ``t`` is not a valid tree of the requested mode in ``g``, or None."""
    mode = Mode(mode or t.mode)
    if not t.vertices:
        return "empty vertex set"
    if any(not 0 <= v < g.n for v in t.vertices):
        return "vertex out of range"
    if any(not 0 <= e < g.m for e in t.edges):
        return "edge id out of range"
    if len(set(t.edges)) != len(t.edges):
        return "repeated edge"
    if len(t.edges) != len(t.vertices) - 1:
        return "edge count is not order - 1"
    parent = {v: v for v in t.vertices}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in t.edges:
        u, v = g.ends(e)
        if u not in parent or v not in parent:
            return "edge leaves the vertex set"
        ru, rv = find(u), find(v)
        if ru == rv:
            return "cycle"
        parent[ru] = rv
    # n - 1 edges, acyclic, so connected
    colors = [g.color(e) for e in t.edges]
    if mode is Mode.RAINBOW:
        if len(set(colors)) != len(colors):
            return "repeated color"
    else:
        seen = set()
        for e in t.edges:
            u, v, c = g.edges[e]
            for end in (u, v):
                if (end, c) in seen:
                    return f"two edges of color {c} meet at vertex {end}"
                seen.add((end, c))
    return None


def verify_tree(g: EdgeColoredGraph, t: ColoredTree, mode: Mode | None = None) -> bool:
    return tree_defect(g, t, mode) is None
