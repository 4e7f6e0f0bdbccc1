"""Large rainbow trees in connected star-colored graphs.

The tree grows greedily while some boundary edge brings a new color. When
that stalls, the current vertex set is re-spanned by a rainbow tree that
avoids the color of one boundary edge (one-edge exchange) or drops one vertex
and avoids the colors of a boundary edge plus a pendant edge behind it
(two-edge exchange). Both re-spans are matroid intersection problems.
"""
from __future__ import annotations

import logging

from .errors import InternalGuaranteeViolation, NotStarColored
from .graph import EdgeColoredGraph, boundary, edges_within, is_star_colored, min_color_degree, require_connected
from .matroid import UnionFind, max_common_independent, rainbow_forest_matroids
from .trees import ColoredTree, Mode, tree_defect

log = logging.getLogger(__name__)


def rainbow_target(g: EdgeColoredGraph) -> int:
    return min(g.n, 2 * min_color_degree(g) + 1)


def spanning_rainbow_tree(g: EdgeColoredGraph, vertices, forbidden=()) -> list[int] | None:
    """Rainbow spanning tree of ``g[vertices]`` avoiding ``forbidden`` colors, if one exists."""
    vertices = set(vertices)
    if len(vertices) <= 1:
        return []
    forbidden = set(forbidden)
    allowed = [e for e in edges_within(g, vertices) if g.color(e) not in forbidden]
    uf = UnionFind()
    pieces = len(vertices)
    for e in allowed:
        if uf.union(*g.ends(e)):
            pieces -= 1
    if pieces > 1:
        return None
    graphic, partition = rainbow_forest_matroids(g, vertices, forbidden)
    f = max_common_independent(graphic, partition, check=False)
    return f if len(f) == len(vertices) - 1 else None


def build_rainbow_tree(g: EdgeColoredGraph, root: int = 0, check: bool = True) -> ColoredTree:
    """Rainbow tree of order at least ``min(n, 2*delta+1)`` whenever ``g`` has one.

    On every valid input the order is at least ``min(n, 2*delta)``.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    require_connected(g)
    if not is_star_colored(g):
        raise NotStarColored("a color class of the input is not a star")
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    target = rainbow_target(g)
    tree: set[int] = set()
    verts = {root}
    while len(verts) < target:
        used = {g.color(e) for e in tree}
        bd = boundary(g, verts)
        step = next((e for e in bd if g.color(e) not in used), None)
        if step is not None:
            tree.add(step)
            verts.update(g.ends(step))
            continue
        grown = _one_edge_exchange(g, verts, bd) or _two_edge_exchange(g, verts, bd)
        if grown is None:
            break
        new_verts, new_tree = grown
        if check:
            t = ColoredTree(frozenset(new_verts), tuple(sorted(new_tree)), Mode.RAINBOW)
            bad = tree_defect(g, t)
            if bad or len(new_verts) <= len(verts):
                raise InternalGuaranteeViolation(f"exchange produced an invalid tree: {bad}")
        verts, tree = new_verts, set(new_tree)
    log.debug("rainbow tree of order %d (target %d)", len(verts), target)
    return ColoredTree(frozenset(verts), tuple(sorted(tree)), Mode.RAINBOW)


def _one_edge_exchange(g, verts, bd):
    cache = {}
    for e in bd:
        c = g.color(e)
        if c not in cache:
            cache[c] = spanning_rainbow_tree(g, verts, (c,))
        f = cache[c]
        if f is not None:
            u, x = g.ends(e)
            return verts | {u, x}, f + [e]
    return None


def _two_edge_exchange(g, verts, bd):
    cache = {}
    for e0 in bd:
        u, x = g.ends(e0)
        if x in verts:
            u, x = x, u
        for y, e, c in sorted(g.adj[x], key=lambda item: item[1]):
            if y in verts or c == g.color(e0):
                continue
            cols = frozenset((c, g.color(e0)))
            for v in sorted(verts - {u}):
                key = (v, cols)
                if key not in cache:
                    cache[key] = spanning_rainbow_tree(g, verts - {v}, cols)
                f = cache[key]
                if f is not None:
                    return (verts - {v}) | {x, y}, f + [e0, e]
    return None
