"""Exhaustive reference routines for cross-checking at desk scale.

Nothing here is used on the solving path.
"""
from __future__ import annotations

import itertools
import os

from .errors import BoundExceeded
from .graph import EdgeColoredGraph, connected_components, require_connected
from .trees import ColoredTree, Mode

DEFAULT_BOUND = 12


def default_bound() -> int:
    return int(os.environ.get("PCTREE_ORACLE_BOUND", DEFAULT_BOUND))


def max_colored_tree(g: EdgeColoredGraph, mode: Mode = Mode.PROPER,
                     bound: int | None = None) -> tuple[int, ColoredTree]:
    """Exact maximum order of a rainbow / properly colored tree.

    Trees are grown leaf by leaf from their smallest vertex. Partial trees are
    deduplicated by vertex set plus the color constraints that can still
    matter, and branches whose optimistic size cannot beat the incumbent are
    cut.
    """
    mode = Mode(mode)
    bound = default_bound() if bound is None else bound
    if g.n > bound:
        raise BoundExceeded(f"{g.n} vertices exceeds the oracle bound {bound}")
    if g.n == 0:
        raise ValueError("empty graph")
    require_connected(g)
    proper = mode is Mode.PROPER
    best_order, best_edges, best_root = 1, (), 0

    for r in range(g.n):
        if g.n - r <= best_order:
            break
        seen = set()

        def optimistic(mask, used):
            # vertices still attachable, ignoring colors, plus a color count cap for rainbow trees
            reach = mask
            frontier = [v for v in range(r, g.n) if mask >> v & 1]
            spare = set()
            while frontier:
                v = frontier.pop()
                for x, _, c in g.adj[v]:
                    if x > r and not reach >> x & 1:
                        reach |= 1 << x
                        frontier.append(x)
                    if not proper and x > r and c not in used and not (mask >> v & 1 and mask >> x & 1):
                        spare.add(c)
            size = bin(reach).count("1")
            if not proper:
                size = min(size, bin(mask).count("1") + len(spare))
            return size

        def key(mask, used):
            if proper:
                live = []
                for v, cols in used.items():
                    out = {c for x, _, c in g.adj[v] if x > r and not mask >> x & 1}
                    live.extend((v, c) for c in cols & out)
                return mask, frozenset(live)
            out = {c for v in range(r, g.n) if mask >> v & 1
                   for x, _, c in g.adj[v] if x > r and not mask >> x & 1}
            return mask, frozenset(used & out)

        def grow(mask, used, edges):
            nonlocal best_order, best_edges, best_root
            k = key(mask, used)
            if k in seen:
                return
            seen.add(k)
            size = len(edges) + 1
            if size > best_order:
                best_order, best_edges, best_root = size, tuple(edges), r
            if best_order == g.n or optimistic(mask, used) <= best_order:
                return
            for v in range(r, g.n):
                if not mask >> v & 1:
                    continue
                for x, e, c in g.adj[v]:
                    if x < r or mask >> x & 1:
                        continue
                    if proper:
                        if c in used.get(v, ()):
                            continue
                        nxt = dict(used)
                        nxt[v] = used.get(v, frozenset()) | {c}
                        nxt[x] = frozenset((c,))
                    else:
                        if c in used:
                            continue
                        nxt = used | {c}
                    edges.append(e)
                    grow(mask | 1 << x, nxt, edges)
                    edges.pop()
                    if best_order == g.n:
                        return

        grow(1 << r, {} if proper else frozenset(), [])
    verts = {best_root} | {v for e in best_edges for v in g.ends(e)}
    return best_order, ColoredTree(frozenset(verts), tuple(sorted(best_edges)), mode)


def brute_matroid_intersection(m1, m2, limit: int = 16) -> int:
    """Size of a largest common independent set by subset enumeration."""
    if m1.ground != m2.ground:
        raise ValueError("matroids must share a ground set")
    ground = sorted(m1.ground)
    if len(ground) > limit:
        raise BoundExceeded(f"ground of size {len(ground)} exceeds {limit}")
    for size in range(len(ground), 0, -1):
        for s in itertools.combinations(ground, size):
            if m1.is_independent(s) and m2.is_independent(s):
                return size
    return 0


def max_sat_brute(f, limit: int = 20) -> int:
    """Most clauses satisfiable by one assignment, over all ``2**s`` assignments."""
    if f.s > limit:
        raise BoundExceeded(f"{f.s} variables exceeds {limit}")
    best = 0
    for bits in itertools.product((False, True), repeat=f.s):
        sat = sum(any(bits[abs(l) - 1] == (l > 0) for l in clause) for clause in f.clauses)
        best = max(best, sat)
    return best


def naive_cut_edges(g: EdgeColoredGraph) -> list[int]:
    """Edges whose removal increases the number of components."""
    base = max(connected_components(g), default=-1)
    return [e for e in range(g.m) if max(connected_components(g.without_edges([e])), default=-1) > base]
