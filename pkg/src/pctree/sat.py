"""CNF formulas and their reduction to maximum rainbow trees in star-colored graphs.

Each variable ``x_i`` becomes a spine vertex ``y_i`` with two literal vertices
``a_i1`` (positive) and ``a_i2`` (negative) hanging off it in one shared
color. Each clause becomes a vertex joined, in the clause's own color, to the
literal vertices of its literals. Consecutive spine vertices are joined by
singly used colors. The best rainbow tree then has exactly ``2s`` more
vertices than the best assignment satisfies clauses.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import EdgeColoredGraph
from .trees import ColoredTree, Mode


@dataclass(frozen=True)
class CnfFormula:
    s: int
    clauses: tuple = ()
    allow_empty: bool = False

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.s < 0:
            raise ValueError("negative variable count")
        for j, clause in enumerate(self.clauses):
            if not clause and not self.allow_empty:
                raise ValueError(f"clause {j + 1} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.s:
                    raise ValueError(f"literal {lit} in clause {j + 1} is out of range")
            if len(set(clause)) != len(clause):
                raise ValueError(f"clause {j + 1} repeats a literal")

    @property
    def t(self) -> int:
        return len(self.clauses)

    def satisfied(self, assignment) -> int:
        """Number of clauses satisfied by a 0/1 sequence indexed by variable - 1."""
        return sum(any(bool(assignment[abs(l) - 1]) == (l > 0) for l in c) for c in self.clauses)


@dataclass
class ReductionMap:
    s: int
    t: int
    y: list = field(default_factory=list)
    a_pos: list = field(default_factory=list)
    a_neg: list = field(default_factory=list)
    clause: list = field(default_factory=list)
    b: list = field(default_factory=list)
    clause_color: list = field(default_factory=list)
    d: list = field(default_factory=list)
    clauses: list = field(default_factory=list)

    def formula(self) -> CnfFormula:
        return CnfFormula(self.s, self.clauses)

    def to_json(self) -> dict:
        return {
            "s": self.s, "t": self.t,
            "vertices": {"y": self.y, "a1": self.a_pos, "a2": self.a_neg, "c": self.clause},
            "colors": {"b": self.b, "C": self.clause_color, "d": self.d},
            "clauses": [list(c) for c in self.clauses],
        }

    @classmethod
    def from_json(cls, data: dict) -> ReductionMap:
        v, c = data["vertices"], data["colors"]
        return cls(data["s"], data["t"], v["y"], v["a1"], v["a2"], v["c"], c["b"], c["C"], c["d"],
                   [tuple(cl) for cl in data.get("clauses", [])])


def reduce(f: CnfFormula) -> tuple[EdgeColoredGraph, ReductionMap]:
    if f.s < 1:
        raise ValueError("need at least one variable")
    if any(not c for c in f.clauses):
        raise ValueError("empty clauses would leave isolated clause vertices")
    s, t = f.s, f.t
    rm = ReductionMap(s, t, clauses=list(f.clauses))
    rm.y = [3 * i for i in range(s)]
    rm.a_pos = [3 * i + 1 for i in range(s)]
    rm.a_neg = [3 * i + 2 for i in range(s)]
    rm.clause = [3 * s + j for j in range(t)]
    rm.b = [i + 1 for i in range(s)]
    rm.clause_color = [s + j + 1 for j in range(t)]
    rm.d = [s + t + i + 1 for i in range(s - 1)]
    edges = []
    for i in range(s):
        edges.append((rm.y[i], rm.a_pos[i], rm.b[i]))
        edges.append((rm.y[i], rm.a_neg[i], rm.b[i]))
    for j, clause in enumerate(f.clauses):
        for lit in sorted(clause, key=lambda l: (abs(l), l < 0)):
            i = abs(lit) - 1
            end = rm.a_pos[i] if lit > 0 else rm.a_neg[i]
            edges.append((rm.clause[j], end, rm.clause_color[j]))
    for i in range(s - 1):
        edges.append((rm.y[i], rm.y[i + 1], rm.d[i]))
    return EdgeColoredGraph(3 * s + t, edges), rm


def extract_assignment(g: EdgeColoredGraph, rm: ReductionMap, tree: ColoredTree) -> tuple[list[int], int]:
    """Read an assignment off the literal vertices a rainbow tree visits.

    Variables whose literal vertices are both absent default to 0.
    """
    if g.n != 3 * rm.s + rm.t or any(not 0 <= e < g.m for e in tree.edges):
        raise ValueError("tree is not over the reduced graph")
    alpha = [1 if rm.a_pos[i] in tree.vertices else 0 for i in range(rm.s)]
    return alpha, rm.formula().satisfied(alpha)


def build_tree_from_assignment(g: EdgeColoredGraph, rm: ReductionMap, alpha) -> ColoredTree:
    """Spine, chosen literal vertices, and one true literal per satisfied clause."""
    if len(alpha) != rm.s:
        raise ValueError("assignment must cover every variable")
    eids = [g.edge_id(rm.y[i], rm.y[i + 1]) for i in range(rm.s - 1)]
    for i in range(rm.s):
        eids.append(g.edge_id(rm.y[i], rm.a_pos[i] if alpha[i] else rm.a_neg[i]))
    for j, clause in enumerate(rm.clauses):
        true_lits = sorted((l for l in clause if bool(alpha[abs(l) - 1]) == (l > 0)), key=abs)
        if true_lits:
            lit = true_lits[0]
            i = abs(lit) - 1
            eids.append(g.edge_id(rm.clause[j], rm.a_pos[i] if lit > 0 else rm.a_neg[i]))
    return ColoredTree.from_edges(g, eids, Mode.RAINBOW, root=rm.y[0])
