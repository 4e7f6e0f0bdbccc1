"""Edge-colored simple graphs and the structural primitives built on them.

Vertices are the dense ids ``0..n-1``. Edges are identified by their index in
``g.edges``; every derived graph keeps ``origin`` so edge ids can be mapped
back to the graph it was derived from.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from typing import Iterable, Sequence

from .errors import NotConnected

Edge = tuple[int, int, int]


class EdgeColoredGraph:
    """Immutable simple undirected graph with a positive integer color per edge."""

    __slots__ = ("n", "edges", "adj", "origin", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], origin: Sequence[int] | None = None):
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        self.n = n
        self.edges: tuple[Edge, ...] = tuple((int(u), int(v), int(c)) for u, v, c in edges)
        self.adj: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
        self._index: dict[tuple[int, int], int] = {}
        for eid, (u, v, c) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {eid} ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if c < 1:
                raise ValueError(f"edge {eid} has non-positive color {c}")
            key = (u, v) if u < v else (v, u)
            if key in self._index:
                raise ValueError(f"parallel edge between {u} and {v}")
            self._index[key] = eid
            self.adj[u].append((v, eid, c))
            self.adj[v].append((u, eid, c))
        if origin is None:
            origin = range(len(self.edges))
        self.origin: tuple[int, ...] = tuple(origin)
        if len(self.origin) != len(self.edges):
            raise ValueError("origin must map every edge")

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self.n == other.n and self.edge_dict() == other.edge_dict()

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edge_dict().items())))

    def edge_dict(self) -> dict[tuple[int, int], int]:
        """Map from sorted endpoint pair to color."""
        return {key: self.edges[eid][2] for key, eid in self._index.items()}

    def edge_id(self, u: int, v: int) -> int | None:
        return self._index.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_id(u, v) is not None

    def color(self, eid: int) -> int:
        return self.edges[eid][2]

    def ends(self, eid: int) -> tuple[int, int]:
        u, v, _ = self.edges[eid]
        return u, v

    def other_end(self, eid: int, v: int) -> int:
        a, b, _ = self.edges[eid]
        return b if a == v else a

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return [x for x, _, _ in self.adj[v]]

    def colors_at(self, v: int) -> set[int]:
        return {c for _, _, c in self.adj[v]}

    def color_counts(self, v: int) -> Counter:
        return Counter(c for _, _, c in self.adj[v])

    def palette(self) -> set[int]:
        return {c for _, _, c in self.edges}

    def edge_subgraph(self, eids: Iterable[int]) -> EdgeColoredGraph:
        """Same vertex set, only the listed edges (ids ascending); origin points at ``self``."""
        keep = sorted(set(eids))
        return EdgeColoredGraph(self.n, [self.edges[e] for e in keep], origin=keep)

    def without_edges(self, eids: Iterable[int]) -> EdgeColoredGraph:
        drop = set(eids)
        return self.edge_subgraph(e for e in range(self.m) if e not in drop)

    def recolored(self, colors: Sequence[int]) -> EdgeColoredGraph:
        """Same edges and ids with new colors; origin is inherited unchanged."""
        if len(colors) != self.m:
            raise ValueError("need one color per edge")
        return EdgeColoredGraph(
            self.n, [(u, v, c) for (u, v, _), c in zip(self.edges, colors)], origin=self.origin
        )


def check_vertex(g: EdgeColoredGraph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")


def color_degree(g: EdgeColoredGraph, v: int) -> int:
    """Number of distinct colors on edges incident to ``v``."""
    check_vertex(g, v)
    return len(g.colors_at(v))


def min_color_degree(g: EdgeColoredGraph) -> int:
    if g.n < 1:
        raise ValueError("minimum color degree of the empty graph is undefined")
    return min(len(g.colors_at(v)) for v in range(g.n))


def boundary(g: EdgeColoredGraph, x: Iterable[int]) -> list[int]:
    """Edge ids with exactly one endpoint in ``x``, ascending."""
    inside = set(x)
    for v in inside:
        check_vertex(g, v)
    return [eid for eid, (u, v, _) in enumerate(g.edges) if (u in inside) != (v in inside)]


def edges_within(g: EdgeColoredGraph, x: Iterable[int]) -> list[int]:
    """Edge ids with both endpoints in ``x``, ascending."""
    inside = set(x)
    return [eid for eid, (u, v, _) in enumerate(g.edges) if u in inside and v in inside]


def induced_subgraph(g: EdgeColoredGraph, x: Iterable[int]) -> tuple[EdgeColoredGraph, list[int]]:
    """``g[x]`` relabelled to ``0..|x|-1`` in ascending order of original id.

    Returns the subgraph and the list mapping new vertex ids to old ones; the
    subgraph's ``origin`` maps its edges to edge ids of ``g``.
    """
    verts = sorted(set(x))
    for v in verts:
        check_vertex(g, v)
    pos = {v: i for i, v in enumerate(verts)}
    eids = edges_within(g, verts)
    edges = [(pos[g.edges[e][0]], pos[g.edges[e][1]], g.edges[e][2]) for e in eids]
    return EdgeColoredGraph(len(verts), edges, origin=eids), verts


def monochromatic_components(g: EdgeColoredGraph) -> list[tuple[int, list[int]]]:
    """Connected components of every color class as ``(color, edge ids)``.

    Components are listed by their smallest edge id; edge ids inside a
    component are ascending.
    """
    parent = list(range(g.m))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for v in range(g.n):
        first: dict[int, int] = {}
        for _, eid, c in g.adj[v]:
            if c in first:
                ra, rb = find(first[c]), find(eid)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            else:
                first[c] = eid
    groups: dict[int, list[int]] = defaultdict(list)
    for eid in range(g.m):
        groups[find(eid)].append(eid)
    return [(g.color(comp[0]), comp) for _, comp in sorted(groups.items(), key=lambda kv: kv[1][0])]


def star_centers(g: EdgeColoredGraph, comp: Sequence[int]) -> list[int]:
    """Vertices shared by every edge of ``comp`` (ascending); empty if not a star."""
    if not comp:
        raise ValueError("empty edge set has no star structure")
    common = set(g.ends(comp[0]))
    for eid in comp[1:]:
        common &= set(g.ends(eid))
        if not common:
            return []
    return sorted(common)


def is_star(g: EdgeColoredGraph, comp: Sequence[int]) -> tuple[bool, int | None]:
    """Whether all edges share an endpoint; the center reported is the lowest admissible id."""
    centers = star_centers(g, comp)
    return (True, centers[0]) if centers else (False, None)


def components_are_stars(g: EdgeColoredGraph) -> bool:
    """Every monochromatic component is a star (the same color may repeat elsewhere)."""
    return all(star_centers(g, comp) for _, comp in monochromatic_components(g))


def is_star_colored(g: EdgeColoredGraph) -> bool:
    """Every color class is a single star."""
    classes: dict[int, list[int]] = defaultdict(list)
    for eid, (_, _, c) in enumerate(g.edges):
        classes[c].append(eid)
    return all(star_centers(g, comp) for comp in classes.values())


def connected_components(g: EdgeColoredGraph) -> list[int]:
    """Component label per vertex; labels are ``0, 1, ...`` in order of the smallest vertex."""
    label = [-1] * g.n
    nxt = 0
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = nxt
        stack = [s]
        while stack:
            v = stack.pop()
            for x, _, _ in g.adj[v]:
                if label[x] < 0:
                    label[x] = nxt
                    stack.append(x)
        nxt += 1
    return label


def is_connected(g: EdgeColoredGraph) -> bool:
    return g.n <= 1 or max(connected_components(g)) == 0


def require_connected(g: EdgeColoredGraph) -> None:
    if not is_connected(g):
        raise NotConnected(f"graph with {g.n} vertices is not connected")


def cut_edges(g: EdgeColoredGraph) -> list[int]:
    """Bridges by iterative lowpoint DFS, ascending edge ids."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = []
    t = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        # frame: vertex, edge id used to enter it, iterator position
        stack = [(root, -1, 0)]
        while stack:
            v, via, i = stack[-1]
            if i < len(g.adj[v]):
                stack[-1] = (v, via, i + 1)
                x, eid, _ = g.adj[v][i]
                if eid == via:
                    continue
                if disc[x] < 0:
                    disc[x] = low[x] = t
                    t += 1
                    stack.append((x, eid, 0))
                else:
                    low[v] = min(low[v], disc[x])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.append(via)
    return sorted(bridges)
