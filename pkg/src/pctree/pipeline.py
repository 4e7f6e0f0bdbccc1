"""Properly colored trees of order ``min(n, 2*delta+1)`` in edge-colored graphs.

Small color degree is settled by exhaustive search. Otherwise the graph is
checked against the extremal families, thinned by deleting edges that no
endpoint needs for its color degree, recolored so that every monochromatic
star gets its own color, and handed to the rainbow tree builder. A rainbow
tree in the recolored graph is a properly colored tree in the original.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from .errors import (InternalGuaranteeViolation, InvalidParameters, NonStarComponent,
                     NoValidRepair, PreconditionViolated)
from .extremal import FamilyInstance, recognize, verify_membership
from .graph import (EdgeColoredGraph, components_are_stars, connected_components, cut_edges,
                    is_connected, min_color_degree, monochromatic_components, require_connected,
                    star_centers)
from .rainbow import build_rainbow_tree
from .trees import ColoredTree, Mode, tree_defect

log = logging.getLogger(__name__)

DEFAULT_DELTA0 = 3
INPUT_TAGS = ("G1", "G2", "G3", "G5")
RECOLORED_TAGS = ("G1", "G2", "G4", "G6")


@dataclass(frozen=True)
class SmallDeltaExhausted:
    """Exhaustive search found no properly colored tree of ``target`` vertices."""

    delta: int
    delta0: int
    target: int

    kind = "exhaustive"


@dataclass(frozen=True)
class ExtremalFamily:
    instance: FamilyInstance

    kind = "extremal"


@dataclass
class SolveOutcome:
    tree: ColoredTree | None = None
    witness: SmallDeltaExhausted | ExtremalFamily | None = None
    report: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.tree is not None


@dataclass(frozen=True)
class RecolorMap:
    """Fresh color -> edge ids of the monochromatic star it replaces, plus the source graph."""

    classes: dict
    source: EdgeColoredGraph

    @property
    def original(self) -> tuple:
        return tuple(c for _, _, c in self.source.edges)

    def fresh_color(self) -> list[int]:
        out = [0] * self.source.m
        for c, eids in self.classes.items():
            for e in eids:
                out[e] = c
        return out


@dataclass(frozen=True)
class Repair:
    """A repaired, recolored graph together with the edges that produced it (ids of the input graph)."""

    graph: EdgeColoredGraph
    recolor: RecolorMap
    added: int
    removed: tuple


def target_order(g: EdgeColoredGraph) -> int:
    return min(g.n, 2 * min_color_degree(g) + 1)


# ------------------------------------------------------------ small delta

def exhaustive_threshold_search(g: EdgeColoredGraph, t: int) -> ColoredTree | None:
    """A properly colored tree on exactly ``t`` vertices, or None.

    Every subtree is produced once: trees are rooted at their smallest
    vertex, and each pending boundary edge is either taken or banned for the
    rest of the branch.
    """
    if t <= 1:
        return ColoredTree(frozenset((0,)), ()) if g.n and t == 1 else None
    for r in range(g.n):
        if g.n - r < t:
            break
        found = _grow(g, r, t)
        if found is not None:
            return found
    return None


def _grow(g, r, t):
    verts = {r}
    at = {r: set()}
    tree: list[int] = []
    banned: set[int] = set()

    def pending(v):
        return [e for x, e, _ in g.adj[v] if x > r]

    def search(queue):
        if len(verts) == t:
            return True
        # skip edges whose far end was absorbed meanwhile
        while queue:
            e = queue[0]
            a, b = g.ends(e)
            if a in verts and b in verts:
                queue = queue[1:]
                continue
            break
        if not queue:
            return False
        e, rest = queue[0], queue[1:]
        a, b = g.ends(e)
        v, x = (a, b) if a in verts else (b, a)
        c = g.color(e)
        if c not in at[v]:
            verts.add(x)
            at[v].add(c)
            at[x] = {c}
            tree.append(e)
            if search(rest + [f for f in pending(x) if f not in banned and g.other_end(f, x) not in verts]):
                return True
            tree.pop()
            del at[x]
            at[v].discard(c)
            verts.discard(x)
        banned.add(e)
        try:
            return search(rest)
        finally:
            banned.discard(e)

    if search(sorted(pending(r))):
        return ColoredTree.from_edges(g, tree, Mode.PROPER, root=r)
    return None


# ------------------------------------------------------------ preprocessing

def _removable(g: EdgeColoredGraph, e: int) -> bool:
    u, v, c = g.edges[e]
    return g.color_counts(u)[c] >= 2 and g.color_counts(v)[c] >= 2


def preprocess_removable_edges(g: EdgeColoredGraph) -> tuple[EdgeColoredGraph, list[int], int | None]:
    """Delete edges both of whose endpoints keep their color degree without them.

    Edges are scanned by ascending id of ``g`` and the scan restarts after
    every deletion. Returns the thinned graph (its ``origin`` holds ids of
    ``g``), the deleted ids of ``g`` in deletion order, and, if the scan hit a
    removable cut edge, that edge's id in the thinned graph.
    """
    cur = g.edge_subgraph(range(g.m))
    deleted: list[int] = []
    while True:
        bridges = None
        for e in range(cur.m):
            if not _removable(cur, e):
                continue
            if bridges is None:
                bridges = set(cut_edges(cur))
            if e in bridges:
                return cur, deleted, e
            deleted.append(cur.origin[e])
            keep = [f for f in range(cur.m) if f != e]
            cur = EdgeColoredGraph(cur.n, [cur.edges[f] for f in keep], origin=[cur.origin[f] for f in keep])
            break
        else:
            return cur, deleted, None


def bridge_certificate(g0: EdgeColoredGraph, e: int, delta: int | None = None) -> ColoredTree:
    """Properly colored tree on ``2*delta+1`` vertices through a removable cut edge ``e``."""
    delta = min_color_degree(g0) if delta is None else delta
    if not 0 <= e < g0.m:
        raise PreconditionViolated(f"edge {e} out of range")
    v, w, alpha = g0.edges[e]
    rest = g0.without_edges([e])
    side = connected_components(rest)
    if side[v] == side[w]:
        raise PreconditionViolated("edge is not a cut edge")
    if not _removable(g0, e):
        raise PreconditionViolated("deleting the edge lowers an endpoint's color degree")

    def pick(center):
        """One neighbor per color at ``center`` away from ``e``; the same-colored witness first."""
        by_color: dict[int, int] = {}
        for x, f, c in sorted(g0.adj[center], key=lambda item: (item[0], item[1])):
            if f != e and c not in by_color:
                by_color[c] = x
        witness = by_color.pop(alpha)
        return witness, [by_color[c] for c in sorted(by_color, key=lambda c: by_color[c])]

    u, others_v = pick(v)
    x, others_w = pick(w)
    if min(len(others_v), len(others_w)) + 1 < delta:
        raise PreconditionViolated("an endpoint has color degree below delta")
    edges = [e]
    if len(others_v) >= delta or len(others_w) >= delta:
        big, small = (others_v, others_w) if len(others_v) >= delta else (others_w, others_v)
        big_c, small_c = (v, w) if big is others_v else (w, v)
        edges += [g0.edge_id(big_c, a) for a in big[:delta]]
        edges += [g0.edge_id(small_c, b) for b in small[:delta - 1]]
    else:
        edges += [g0.edge_id(v, a) for a in others_v] + [g0.edge_id(w, b) for b in others_w]
        b_set = set(others_v) | {v}
        extra = None
        for y in others_v:
            cy = g0.color(g0.edge_id(y, v))
            blocked = b_set - {y}
            for z, f, c in sorted(g0.adj[y]):
                if z not in blocked and z != v and c != cy and side[z] == side[v]:
                    extra = f
                    break
            if extra is not None:
                break
        if extra is None:
            raise PreconditionViolated("no vertex of A_v has a usable extra leaf")
        edges.append(extra)
    t = ColoredTree.from_edges(g0, edges, Mode.PROPER)
    bad = tree_defect(g0, t)
    if bad or t.order != 2 * delta + 1:
        raise InternalGuaranteeViolation(f"bridge construction failed: {bad or t.order}")
    return t


# ------------------------------------------------------------ recoloring

def recolor_stars(g_prime: EdgeColoredGraph) -> tuple[EdgeColoredGraph, RecolorMap]:
    """Give every monochromatic star its own color, numbered above the palette."""
    comps = monochromatic_components(g_prime)
    base = max(g_prime.palette(), default=0)
    classes = {}
    colors = [0] * g_prime.m
    for i, (c, eids) in enumerate(comps, start=1):
        if not star_centers(g_prime, eids):
            raise NonStarComponent(f"color {c} has a component that is not a star")
        classes[base + i] = tuple(eids)
        for e in eids:
            colors[e] = base + i
    return g_prime.recolored(colors), RecolorMap(classes, g_prime)


def restore_colors(t: ColoredTree, rmap: RecolorMap) -> ColoredTree:
    """The same tree read in the source graph, checked to be properly colored there."""
    out = t.with_mode(Mode.PROPER)
    bad = tree_defect(rmap.source, out)
    if bad:
        raise InternalGuaranteeViolation(f"restored tree is not properly colored: {bad}")
    return out


# ------------------------------------------------------------ repair

def repair_candidates(g: EdgeColoredGraph, g_prime: EdgeColoredGraph, deleted):
    """Yield ``(e0, conflict)`` pairs in ids of ``g``, in the order they should be tried.

    For each deleted edge (ascending id) the conflict sets are listed by size,
    then lexicographically. Each is inclusion-minimal among valid choices.
    """
    delta = min_color_degree(g_prime)
    base = set(g_prime.origin)
    for e0 in sorted(deleted):
        cands = _conflict_sets(g, base, e0)
        for conflict in sorted(cands, key=lambda s: (len(s), sorted(s))):
            kept = sorted((base | {e0}) - conflict)
            h = g.edge_subgraph(kept)
            if components_are_stars(h) and min_color_degree(h) == delta and is_connected(h):
                yield e0, tuple(sorted(conflict))


def _conflict_sets(g, base, e0):
    """Edge sets whose removal makes the color class around ``e0`` a union of stars."""
    x, y, alpha = g.edges[e0]
    same = [f for f in sorted(base) if g.color(f) == alpha]
    # the alpha-component of e0 once it is added back
    comp = {e0}
    verts = {x, y}
    grew = True
    while grew:
        grew = False
        for f in same:
            if f not in comp and set(g.ends(f)) & verts:
                comp.add(f)
                verts.update(g.ends(f))
                grew = True
    s = comp - {e0}
    out = set()
    for z in (x, y):
        at_z = [f for f in s if z in g.ends(f)]
        far = {f: g.other_end(f, z) for f in at_z}
        # a leaf with no other alpha edge never forces a deletion, so it is always kept
        free = [f for f in at_z if not any(far[f] in g.ends(h) for h in s if h != f)]
        tied = [f for f in at_z if f not in free]
        for r in range(len(tied) + 1):
            for chosen in itertools.combinations(tied, r):
                keep = {e0, *free, *chosen}
                leaves = {g.other_end(f, z) for f in keep}
                conflict = {f for f in at_z if f not in keep}
                conflict |= {f for f in s if z not in g.ends(f) and set(g.ends(f)) & leaves}
                out.add(frozenset(conflict))
    return out


def repair_extremal(g: EdgeColoredGraph, g_prime: EdgeColoredGraph, deleted,
                    inst: FamilyInstance | None = None) -> Repair:
    """Add back one deleted edge, drop its conflicts, and recolor.

    ``inst`` is the recognized family of the recolored ``g_prime``; it only
    documents the call, the search itself is driven by colors.
    """
    if not deleted:
        raise NoValidRepair("no edge was deleted during preprocessing")
    for e0, conflict in repair_candidates(g, g_prime, deleted):
        kept = sorted((set(g_prime.origin) | {e0}) - set(conflict))
        g2 = g.edge_subgraph(kept)
        g_bar, rmap = recolor_stars(g2)
        log.debug("repair: add %d, drop %s", e0, conflict)
        return Repair(g_bar, rmap, e0, conflict)
    raise NoValidRepair(f"none of the {len(deleted)} deleted edges admits a valid conflict set")


# ------------------------------------------------------------ driver

def build_pc_tree(g: EdgeColoredGraph, delta0: int = DEFAULT_DELTA0, check: bool = True) -> SolveOutcome:
    """Properly colored tree of order ``min(n, 2*delta+1)`` if ``g`` has one, else a witness of NO."""
    if delta0 < 3:
        raise InvalidParameters("delta0 must be at least 3")
    if g.n == 0:
        raise ValueError("empty graph")
    require_connected(g)
    delta = min_color_degree(g)
    target = target_order(g)
    report = {"n": g.n, "m": g.m, "delta": delta, "delta0": delta0, "target": target}
    if delta <= delta0:
        report["branch"] = "exhaustive"
        t = exhaustive_threshold_search(g, target)
        if t is None:
            report["order"] = None
            return SolveOutcome(None, SmallDeltaExhausted(delta, delta0, target), report)
        return _finish(g, t, report, check)
    inst = recognize(g, INPUT_TAGS)
    if inst is not None:
        report.update(branch="extremal-no", family=inst.tag, order=None)
        return SolveOutcome(None, ExtremalFamily(inst), report)
    return solve_by_preprocessing(g, report, check)


def solve_by_preprocessing(g: EdgeColoredGraph, report: dict | None = None, check: bool = True) -> SolveOutcome:
    """The stages after extremal rejection, run on any color degree.

    The driver reaches this only for ``delta > delta0``; it is public so the
    repair stage can be exercised on small fixtures.
    """
    require_connected(g)
    report = {} if report is None else report
    report.setdefault("delta", min_color_degree(g))
    report.setdefault("target", target_order(g))
    delta = report["delta"]
    g_prime, deleted, cut = preprocess_removable_edges(g)
    report["deleted"] = len(deleted)
    if cut is not None:
        report["branch"] = "bridge"
        t = bridge_certificate(g_prime, cut, delta).mapped(g_prime)
        return _finish(g, t, report, check)
    if check:
        if not (components_are_stars(g_prime) and min_color_degree(g_prime) == delta and is_connected(g_prime)):
            raise InternalGuaranteeViolation("preprocessing broke an invariant")
    g_bar, rmap = recolor_stars(g_prime)
    inst = recognize(g_bar, RECOLORED_TAGS)
    if inst is None:
        report["branch"] = "plain"
        work, work_map = g_bar, rmap
    else:
        report["branch"] = f"repair({inst.tag})"
        rep = repair_extremal(g, g_prime, deleted, inst)
        report["e0"] = rep.added
        report["conflict"] = list(rep.removed)
        work, work_map = rep.graph, rep.recolor
    rt = build_rainbow_tree(work, check=check)
    t = restore_colors(rt, work_map).mapped(work)
    return _finish(g, t, report, check)


def _finish(g, t, report, check):
    report["order"] = t.order
    bad = tree_defect(g, t, Mode.PROPER)
    if bad or t.order < report["target"]:
        raise InternalGuaranteeViolation(
            f"{report.get('branch')} branch returned order {t.order} (target {report['target']}): {bad}")
    return SolveOutcome(t, None, report)


def witness_holds(g: EdgeColoredGraph, outcome: SolveOutcome) -> bool:
    """Re-check a NO outcome: family membership, or a fresh exhaustive search."""
    w = outcome.witness
    if isinstance(w, ExtremalFamily):
        return verify_membership(g, w.instance)
    if isinstance(w, SmallDeltaExhausted):
        return min_color_degree(g) == w.delta and exhaustive_threshold_search(g, w.target) is None
    return False
