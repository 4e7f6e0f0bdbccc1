"""The six extremal families G1..G6: realization, generation and recognition.

A ``FamilyInstance`` is a complete witness: it names the role of every vertex
and the actual color of every structural color, so re-realizing it must give
back the graph edge for edge. Recognizers never look at raw color values
beyond equality, so they work up to any renaming of colors.

Vertex roles are strings: ``v0..vm`` for clique vertices (``v0`` only in G3
and G4), ``u1..`` for the independent set, ``w`` for the hub of G3/G4, and
for G2 the two hubs ``u1``, ``u2`` with leaves ``v1..vk``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import InvalidParameters
from .graph import EdgeColoredGraph, is_connected, min_color_degree

TAGS = ("G1", "G2", "G3", "G4", "G5", "G6")
# G4 lies inside G3 and G6 inside G5 (a rainbow clique with fresh colors is
# also properly colored), so the narrower families are tried first.
SEARCH_ORDER = ("G4", "G6", "G3", "G5", "G1", "G2")


@dataclass
class FamilyInstance:
    tag: str
    m: int
    k: int
    vertex_of: dict = field(default_factory=dict)
    colors: dict = field(default_factory=dict)
    # G3-G6: color of clique edge between role indices (a, b), a < b
    clique_colors: dict = field(default_factory=dict)
    # G1: tournament arcs (i, j) and attachment sets U_j, as role indices
    arcs: list = field(default_factory=list)
    attach: dict = field(default_factory=dict)
    # G2: indices i with u1 v_i colored like u1 u2
    v1_part: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.vertex_of)

    def role_of(self) -> dict:
        return {v: r for r, v in self.vertex_of.items()}

    def to_json(self) -> dict:
        return {
            "tag": self.tag, "m": self.m, "k": self.k,
            "vertex_of": self.vertex_of,
            "colors": self.colors,
            "clique_colors": {f"{a}-{b}": c for (a, b), c in sorted(self.clique_colors.items())},
            "arcs": [list(a) for a in self.arcs],
            "attach": {str(j): sorted(us) for j, us in sorted(self.attach.items())},
            "v1_part": sorted(self.v1_part),
        }

    @classmethod
    def from_json(cls, data: dict) -> FamilyInstance:
        cc = {}
        for key, c in data.get("clique_colors", {}).items():
            a, b = key.split("-")
            cc[(int(a), int(b))] = c
        return cls(
            data["tag"], data["m"], data["k"], dict(data["vertex_of"]), dict(data.get("colors", {})), cc,
            [tuple(a) for a in data.get("arcs", [])],
            {int(j): list(us) for j, us in data.get("attach", {}).items()},
            list(data.get("v1_part", [])),
        )


def family_delta(tag: str, m: int, k: int | None = None) -> int:
    """Minimum color degree of every member with these parameters."""
    return {"G1": (m + 1) // 2, "G2": 2, "G3": m + 1, "G4": m + 1, "G5": m, "G6": m}[tag]


def family_order(tag: str, m: int, k: int) -> int:
    return {"G1": m + k, "G2": k + 2, "G3": 2 * m + k + 2, "G4": 2 * m + k + 2,
            "G5": 2 * m + k, "G6": 2 * m + k}[tag]


def _params_defect(tag, m, k):
    if tag not in TAGS:
        return f"unknown family {tag!r}"
    if tag == "G1":
        if m < 3 or m % 2 == 0:
            return "G1 needs odd m >= 3"
        if k < 2:
            return "G1 needs k >= 2"
    elif tag == "G2":
        if k < 3:
            return "G2 needs k >= 3"
    elif m < 1 or k < 1:
        return f"{tag} needs m >= 1 and k >= 1"
    return None


def _clique_range(tag, m):
    return range(0, m + 1) if tag in ("G3", "G4") else range(1, m + 1)


def _edges(inst: FamilyInstance):
    """Edges of the realization as (u, v, color), possibly with missing roles -> KeyError."""
    vx, col, tag, m, k = inst.vertex_of, inst.colors, inst.tag, inst.m, inst.k
    out = []
    if tag == "G1":
        for i, j in inst.arcs:
            out.append((vx[f"v{i}"], vx[f"v{j}"], col[f"c{i}"]))
        for j, us in inst.attach.items():
            for i in us:
                out.append((vx[f"v{i}"], vx[f"u{j}"], col[f"c{i}"]))
    elif tag == "G2":
        part = set(inst.v1_part)
        out.append((vx["u1"], vx["u2"], col["c1"]))
        for i in range(1, k + 1):
            out.append((vx["u2"], vx[f"v{i}"], col["c2"]))
            out.append((vx["u1"], vx[f"v{i}"], col["c1"] if i in part else col["c1'"]))
    else:
        for (a, b), c in inst.clique_colors.items():
            out.append((vx[f"v{a}"], vx[f"v{b}"], c))
        for i in range(1, m + 1):
            for j in range(1, m + k + 1):
                out.append((vx[f"v{i}"], vx[f"u{j}"], col[f"c{i}"]))
        if tag in ("G3", "G4"):
            out.append((vx["v0"], vx["w"], col["c"]))
            for j in range(1, m + k + 1):
                out.append((vx["w"], vx[f"u{j}"], col["c"]))
            for i in range(1, m + 1):
                out.append((vx[f"v{i}"], vx["w"], col[f"c{i}"]))
    return out


def realize(inst: FamilyInstance) -> EdgeColoredGraph:
    """The graph described by ``inst``; edges are listed in (u, v) order."""
    edges = [(min(u, v), max(u, v), c) for u, v, c in _edges(inst)]
    return EdgeColoredGraph(inst.n, sorted(edges))


def instance_defect(inst: FamilyInstance) -> str | None:
    """Why ``inst`` violates its family's definition, or None."""
    tag, m, k = inst.tag, inst.m, inst.k
    bad = _params_defect(tag, m, k)
    if bad:
        return bad
    if sorted(inst.vertex_of.values()) != list(range(inst.n)):
        return "vertex ids are not 0..n-1"
    if inst.n != family_order(tag, m, k):
        return f"{tag} with m={m}, k={k} has {family_order(tag, m, k)} vertices, roles give {inst.n}"
    col = inst.colors
    if tag == "G1":
        names = [f"c{i}" for i in range(1, m + 1)]
        if any(n not in col for n in names) or len({col[n] for n in names}) != m:
            return "colors c_i must be pairwise distinct"
        pairs = {frozenset(a) for a in inst.arcs}
        if len(pairs) != len(inst.arcs) or pairs != {frozenset(p) for p in itertools.combinations(range(1, m + 1), 2)}:
            return "arcs do not form a tournament"
        out = [0] * (m + 1)
        for i, _ in inst.arcs:
            out[i] += 1
        if any(out[i] != (m - 1) // 2 for i in range(1, m + 1)):
            return "tournament is not regular"
        if sorted(inst.attach) != list(range(1, k + 1)):
            return "every independent vertex needs an attachment set"
        for us in inst.attach.values():
            if len(set(us)) != len(us) or not set(us) <= set(range(1, m + 1)) or len(us) < (m + 1) // 2:
                return "attachment set too small or invalid"
        return None
    if tag == "G2":
        if any(n not in col for n in ("c1", "c1'", "c2")) or len({col["c1"], col["c1'"], col["c2"]}) != 3:
            return "colors c1, c1', c2 must be pairwise distinct"
        part = set(inst.v1_part)
        if not part <= set(range(1, k + 1)) or len(part) == k:
            return "V1' must be nonempty"
        return None
    idx = list(_clique_range(tag, m))
    expected = {(a, b) for a, b in itertools.combinations(idx, 2)}
    if set(inst.clique_colors) != expected:
        return "clique colors must cover the clique exactly"
    names = [f"c{i}" for i in range(1, m + 1)] + (["c"] if tag in ("G3", "G4") else [])
    if any(n not in col for n in names) or len({col[n] for n in names}) != len(names):
        return "structural colors must be pairwise distinct"
    at = {a: [] for a in idx}
    for (a, b), c in inst.clique_colors.items():
        at[a].append(c)
        at[b].append(c)
    own = {i: col[f"c{i}"] for i in range(1, m + 1)}
    if tag in ("G3", "G4"):
        own[0] = col["c"]
    if tag in ("G3", "G5"):
        if any(len(set(cs)) != len(cs) for cs in at.values()):
            return "clique is not properly colored"
        if any(own[a] in at[a] for a in idx):
            return "a structural color appears on the clique at its own vertex"
    else:
        cols = list(inst.clique_colors.values())
        if len(set(cols)) != len(cols):
            return "clique is not rainbow"
        if set(cols) & set(own.values()):
            return "clique colors overlap the structural colors"
    return None


def verify_membership(g: EdgeColoredGraph, inst: FamilyInstance) -> bool:
    if instance_defect(inst) is not None or g.n != inst.n:
        return False
    try:
        return realize(inst).edge_dict() == g.edge_dict()
    except (KeyError, ValueError):
        return False


# ---------------------------------------------------------------- generation

def _proper_clique_coloring(p: int) -> dict:
    """Round-robin proper coloring of K_p on 0..p-1 with colors from 1."""
    colors = {}
    if p <= 1:
        return colors
    q = p if p % 2 else p - 1
    for a, b in itertools.combinations(range(p), 2):
        if p % 2 == 0 and b == p - 1:
            colors[(a, b)] = (2 * a) % q + 1
        else:
            colors[(a, b)] = (a + b) % q + 1
    return colors


def generate(tag: str, m: int | None = None, k: int | None = None,
             seed: int | None = None) -> tuple[EdgeColoredGraph, FamilyInstance]:
    """Build a member of a family.

    Without a seed the layout is canonical (clique first, then hub, then the
    independent set; G1 attaches every independent vertex to the whole
    clique; G2 puts only ``v1`` in ``V1``). A seed permutes vertex labels and
    randomizes the free choices of the definition.
    """
    if tag == "G2" and k is None:
        m, k = None, m
    m = 0 if m is None else m
    bad = _params_defect(tag, m, k if k is not None else 0)
    if bad:
        raise InvalidParameters(bad)
    rng = random.Random(seed) if seed is not None else None
    inst = FamilyInstance(tag, m, k)
    if tag == "G1":
        roles = [f"v{i}" for i in range(1, m + 1)] + [f"u{j}" for j in range(1, k + 1)]
        inst.colors = {f"c{i}": i for i in range(1, m + 1)}
        half = (m - 1) // 2
        inst.arcs = [(i, (i - 1 + d) % m + 1) for i in range(1, m + 1) for d in range(1, half + 1)]
        for j in range(1, k + 1):
            if rng is None:
                inst.attach[j] = list(range(1, m + 1))
            else:
                size = rng.randint((m + 1) // 2, m)
                inst.attach[j] = sorted(rng.sample(range(1, m + 1), size))
    elif tag == "G2":
        roles = ["u1", "u2"] + [f"v{i}" for i in range(1, k + 1)]
        inst.colors = {"c1": 1, "c1'": 2, "c2": 3}
        if rng is None:
            inst.v1_part = [1]
        else:
            inst.v1_part = sorted(i for i in range(1, k + 1) if rng.random() < 0.5)
            if len(inst.v1_part) == k:
                inst.v1_part.pop(rng.randrange(k))
    else:
        idx = list(_clique_range(tag, m))
        roles = [f"v{i}" for i in idx] + (["w"] if tag in ("G3", "G4") else []) + \
            [f"u{j}" for j in range(1, m + k + 1)]
        if tag in ("G3", "G5"):
            base = _proper_clique_coloring(len(idx))
            palette = sorted(set(base.values()))
            if rng is not None:
                shuffled = palette[:]
                rng.shuffle(shuffled)
                rename = dict(zip(palette, shuffled))
                base = {key: rename[c] for key, c in base.items()}
            inst.clique_colors = {(idx[a], idx[b]): c for (a, b), c in base.items()}
        else:
            for n_, (a, b) in enumerate(itertools.combinations(idx, 2), start=1):
                inst.clique_colors[(a, b)] = n_
        top = max(inst.clique_colors.values(), default=0)
        inst.colors = {f"c{i}": top + i for i in range(1, m + 1)}
        if tag in ("G3", "G4"):
            inst.colors["c"] = top + m + 1
    ids = list(range(len(roles)))
    if rng is not None:
        rng.shuffle(ids)
    inst.vertex_of = dict(zip(roles, ids))
    bad = instance_defect(inst)
    if bad:
        raise AssertionError(f"generator produced an invalid {tag}: {bad}")
    return realize(inst), inst


# --------------------------------------------------------------- recognition

def recognize(g: EdgeColoredGraph, tags=TAGS) -> FamilyInstance | None:
    """A verified witness that ``g`` belongs to one of ``tags``, or None.

    Tags are tried in ``SEARCH_ORDER``.
    """
    if g.n == 0 or not is_connected(g):
        return None
    wanted = set(tags)
    unknown = wanted - set(TAGS)
    if unknown:
        raise ValueError(f"unknown family tags {sorted(unknown)}")
    universal = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    for tag in SEARCH_ORDER:
        if tag not in wanted:
            continue
        if tag == "G1":
            found = _recognize_g1(g)
        elif tag == "G2":
            found = _recognize_g2(g, universal)
        elif tag in ("G3", "G4"):
            found = _recognize_g34(g, universal, tag)
        else:
            found = _recognize_g56(g, universal, tag)
        if found is not None:
            return found
    return None


def _color(g, u, v):
    eid = g.edge_id(u, v)
    return None if eid is None else g.color(eid)


def _recognize_g56(g, universal, tag):
    m = len(universal)
    rest = [v for v in range(g.n) if v not in set(universal)]
    k = len(rest) - m
    if m < 1 or k < 1:
        return None
    inst = FamilyInstance(tag, m, k)
    inst.vertex_of = {f"v{i}": v for i, v in enumerate(universal, 1)}
    inst.vertex_of.update({f"u{j}": u for j, u in enumerate(rest, 1)})
    inst.colors = {f"c{i}": _color(g, v, rest[0]) for i, v in enumerate(universal, 1)}
    inst.clique_colors = {(a, b): _color(g, universal[a - 1], universal[b - 1])
                          for a, b in itertools.combinations(range(1, m + 1), 2)}
    return inst if verify_membership(g, inst) else None


def _recognize_g34(g, universal, tag):
    m = len(universal) - 1
    rest = [v for v in range(g.n) if v not in set(universal)]
    k = len(rest) - m - 1
    if m < 1 or k < 1:
        return None
    for w in universal:
        core = [v for v in universal if v != w]
        for v0 in rest:
            ind = [u for u in rest if u != v0]
            clique = [v0] + core
            inst = FamilyInstance(tag, m, k)
            inst.vertex_of = {f"v{i}": v for i, v in enumerate(clique)}
            inst.vertex_of["w"] = w
            inst.vertex_of.update({f"u{j}": u for j, u in enumerate(ind, 1)})
            inst.colors = {f"c{i}": _color(g, v, w) for i, v in enumerate(core, 1)}
            inst.colors["c"] = _color(g, v0, w)
            inst.clique_colors = {(a, b): _color(g, clique[a], clique[b])
                                  for a, b in itertools.combinations(range(m + 1), 2)}
            if verify_membership(g, inst):
                return inst
    return None


def _recognize_g2(g, universal):
    if len(universal) != 2:
        return None
    k = g.n - 2
    leaves = [v for v in range(g.n) if v not in set(universal)]
    if k < 3:
        return None
    for u1, u2 in (universal, universal[::-1]):
        c1 = _color(g, u1, u2)
        inst = FamilyInstance("G2", 0, k)
        inst.vertex_of = {"u1": u1, "u2": u2}
        inst.vertex_of.update({f"v{i}": v for i, v in enumerate(leaves, 1)})
        inst.v1_part = [i for i, v in enumerate(leaves, 1) if _color(g, u1, v) == c1]
        other = [_color(g, u1, v) for v in leaves if _color(g, u1, v) != c1]
        if not other:
            continue
        inst.colors = {"c1": c1, "c1'": other[0], "c2": _color(g, u2, leaves[0])}
        if verify_membership(g, inst):
            return inst
    return None


def split_partitions(g: EdgeColoredGraph, size: int):
    """Yield every ``(clique, independent)`` vertex partition with a clique of ``size`` vertices."""
    deg = [g.degree(v) for v in range(g.n)]
    forced_in = [v for v in range(g.n) if deg[v] > size]
    forced_out = [v for v in range(g.n) if deg[v] < size - 1]
    amb = [v for v in range(g.n) if size - 1 <= deg[v] <= size]
    if len(forced_in) > size:
        return
    if any(not g.has_edge(a, b) for a, b in itertools.combinations(forced_in, 2)):
        return
    if any(g.has_edge(a, b) for a, b in itertools.combinations(forced_out, 2)):
        return

    def extend(i, inside, outside):
        if len(inside) > size or len(inside) + len(amb) - i < size:
            return
        if i == len(amb):
            yield sorted(inside), sorted(outside)
            return
        v = amb[i]
        if all(g.has_edge(v, x) for x in inside):
            yield from extend(i + 1, inside + [v], outside)
        if not any(g.has_edge(v, x) for x in outside):
            yield from extend(i + 1, inside, outside + [v])

    yield from extend(0, forced_in, forced_out)


def _recognize_g1(g):
    delta = min_color_degree(g)
    m = 2 * delta - 1
    k = g.n - m
    if m < 3 or k < 2:
        return None
    half = (m - 1) // 2
    for clique, ind in split_partitions(g, m):
        pos = {v: i for i, v in enumerate(clique, 1)}
        attach = {j: sorted(pos[x] for x in g.neighbors(u)) for j, u in enumerate(ind, 1)}
        options = []
        for i, v in enumerate(clique, 1):
            spoke = {c for x, _, c in g.adj[v] if x not in pos}
            if len(spoke) > 1:
                break
            if spoke:
                options.append(sorted(spoke))
            else:
                counts = g.color_counts(v)
                options.append(sorted(c for c, n_ in counts.items() if n_ == half))
        else:
            for own in itertools.product(*options):
                if len(set(own)) != m:
                    continue
                arcs = []
                for a, b in itertools.combinations(range(1, m + 1), 2):
                    c = _color(g, clique[a - 1], clique[b - 1])
                    if c == own[a - 1]:
                        arcs.append((a, b))
                    elif c == own[b - 1]:
                        arcs.append((b, a))
                    else:
                        break
                else:
                    inst = FamilyInstance("G1", m, k)
                    inst.vertex_of = {f"v{i}": v for i, v in enumerate(clique, 1)}
                    inst.vertex_of.update({f"u{j}": u for j, u in enumerate(ind, 1)})
                    inst.colors = {f"c{i}": c for i, c in enumerate(own, 1)}
                    inst.arcs = arcs
                    inst.attach = attach
                    if verify_membership(g, inst):
                        return inst
    return None
