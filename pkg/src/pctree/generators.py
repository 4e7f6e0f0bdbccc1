"""Seeded instance generators: random graphs, bridge instances, repair fixtures."""
from __future__ import annotations

import random

from .extremal import FamilyInstance, _proper_clique_coloring, generate, realize
from .graph import EdgeColoredGraph, is_connected


def random_connected(n: int, p: float, colors: int, seed: int = 0, tries: int = 1000) -> EdgeColoredGraph:
    """Connected G(n, p) with uniform colors from ``1..colors``, by rejection."""
    if n < 1 or not 0 < p <= 1 or colors < 1:
        raise ValueError("need n >= 1, 0 < p <= 1, colors >= 1")
    rng = random.Random(seed)
    for _ in range(tries):
        edges = [(u, v, rng.randint(1, colors)) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = EdgeColoredGraph(n, edges)
        if is_connected(g):
            return g
    raise ValueError(f"no connected sample in {tries} tries")


def random_star_colored(n: int, p: float, seed: int = 0, tries: int = 1000) -> EdgeColoredGraph:
    """Connected graph in which every color class is one star.

    Each vertex owns one to three colors; an edge takes a color owned by one
    of its endpoints.
    """
    rng = random.Random(seed)
    for _ in range(tries):
        owned = {}
        nxt = 1
        for v in range(n):
            owned[v] = list(range(nxt, nxt + rng.randint(1, 3)))
            nxt += len(owned[v])
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    center = u if rng.random() < 0.5 else v
                    edges.append((u, v, rng.choice(owned[center])))
        g = EdgeColoredGraph(n, edges)
        if is_connected(g):
            return g
    raise ValueError(f"no connected sample in {tries} tries")


def relabel(g: EdgeColoredGraph, perm) -> EdgeColoredGraph:
    """Rename vertex ``v`` to ``perm[v]``, keeping edge ids."""
    return EdgeColoredGraph(g.n, [(perm[u], perm[v], c) for u, v, c in g.edges])


def bridge_instance(delta: int, wide: bool, seed: int = 0) -> tuple[EdgeColoredGraph, int]:
    """Two cliques joined by a bridge ``vw`` whose color also appears inside both.

    With ``wide`` the side of ``v`` has ``delta + 2`` vertices, so ``v`` sees
    ``delta + 1`` colors there; otherwise both sides are ``K_{delta+1}`` and
    every vertex has color degree exactly ``delta``.
    Returns the graph and the bridge id.
    """
    if delta < 2:
        raise ValueError("delta must be at least 2")
    rng = random.Random(seed)
    p1 = delta + 2 if wide else delta + 1
    p2 = delta + 1
    side1 = _proper_clique_coloring(p1)
    side2 = _proper_clique_coloring(p2)
    # shuffle both palettes, keep them disjoint, then make the edge at each
    # bridge end carry the shared color alpha
    pal1 = sorted(set(side1.values()))
    pal2 = sorted(set(side2.values()))
    fresh1 = rng.sample(range(2, 2 + len(pal1)), len(pal1))
    fresh2 = rng.sample(range(2 + len(pal1), 2 + len(pal1) + len(pal2)), len(pal2))
    ren1 = dict(zip(pal1, fresh1))
    ren2 = dict(zip(pal2, fresh2))
    # v is vertex 0 of side 1, w is vertex 0 of side 2
    u = rng.randrange(1, p1)
    x = rng.randrange(1, p2)
    ren1[side1[(0, u)]] = 1
    ren2[side2[(0, x)]] = 1
    edges = [(a, b, ren1[c]) for (a, b), c in side1.items()]
    edges += [(p1 + a, p1 + b, ren2[c]) for (a, b), c in side2.items()]
    edges.append((0, p1, 1))
    n = p1 + p2
    perm = list(range(n))
    rng.shuffle(perm)
    g = EdgeColoredGraph(n, [(perm[a], perm[b], c) for a, b, c in edges])
    return g, len(edges) - 1


def _with_first_edge(inst: FamilyInstance, a_role: str, b_role: str, color: int) -> tuple[EdgeColoredGraph, dict]:
    """Realize ``inst`` plus one edge, relabelled so the extra edge joins vertices 0 and 1.

    The extra edge then comes first in every canonical edge order, so the
    preprocessing scan meets it before anything else.
    """
    base = realize(inst)
    a, b = inst.vertex_of[a_role], inst.vertex_of[b_role]
    order = [a, b] + [v for v in range(base.n) if v not in (a, b)]
    perm = {v: i for i, v in enumerate(order)}
    edges = [(perm[u], perm[v], c) for u, v, c in base.edges] + [(0, 1, color)]
    g = EdgeColoredGraph(base.n, sorted((min(u, v), max(u, v), c) for u, v, c in edges))
    return g, {role: perm[v] for role, v in inst.vertex_of.items()}


def repair_fixture(name: str) -> EdgeColoredGraph:
    return repair_instance(name)[0]


def repair_instance(name: str) -> tuple[EdgeColoredGraph, dict]:
    """Inputs that thin down to an extremal family member and must be repaired.

    ``g6-chord``: G6 with m=3, k=1 plus u1u4. ``g4-shared-color``: G4 with m=2, k=1 whose
    clique edge v0v1 shares a color with v2's spokes, plus v0u1 in that color.
    ``g4-chord``: G4 with m=2, k=1 plus u1u3. ``g1-chord``/``g1-spoke``: G1 with m=5,
    k=2 plus u1u2 or u1v3. Returns the graph and the vertex of every role.
    """
    if name == "g6-chord":
        _, inst = generate("G6", 3, 1)
        return _with_first_edge(inst, "u1", "u4", inst.colors["c1"])
    if name == "g4-shared-color":
        _, inst = generate("G4", 2, 1)
        inst.clique_colors[(0, 1)] = inst.colors["c2"]
        return _with_first_edge(inst, "v0", "u1", inst.colors["c2"])
    if name == "g4-chord":
        _, inst = generate("G4", 2, 1)
        return _with_first_edge(inst, "u1", "u3", inst.colors["c1"])
    if name == "g1-chord":
        _, inst = generate("G1", 5, 2)
        inst.attach = {1: [1, 2, 3], 2: [1, 4, 5]}
        return _with_first_edge(inst, "u1", "u2", inst.colors["c1"])
    if name == "g1-spoke":
        _, inst = generate("G1", 5, 2)
        inst.attach = {1: [1, 2, 5], 2: [1, 2, 3, 4, 5]}
        return _with_first_edge(inst, "u1", "v3", inst.colors["c2"])
    raise ValueError(f"unknown fixture {name!r}")


REPAIR_FIXTURES = ("g6-chord", "g4-shared-color", "g4-chord", "g1-chord", "g1-spoke")


def sweep_instance(index: int, base_seed: int = 0) -> EdgeColoredGraph:
    """The ``index``-th graph of the standard random sweep: n in [4, 10], p in [0.3, 0.7], at most 5 colors."""
    rng = random.Random(base_seed * 1_000_003 + index)
    n = rng.randint(4, 10)
    p = rng.uniform(0.3, 0.7)
    colors = rng.randint(1, 5)
    return random_connected(n, p, colors, seed=rng.randrange(2**32))
