"""Text formats for graphs, trees and CNF formulas.

Graph files::

    # comment
    p ecg <n> <m>
    e <u> <v> <c>        (1-indexed vertices)

Tree files use ``t <order>`` followed by the tree's ``e`` lines. A tree with
a single vertex has no edges, so it is written with one extra ``v <vertex>``
line.
"""
from __future__ import annotations

import io
import os
from pathlib import Path
from typing import TextIO, Union

from .errors import GraphFormatError
from .graph import EdgeColoredGraph

Source = Union[str, os.PathLike, TextIO]


def _lines(src: Source) -> list[str]:
    if hasattr(src, "read"):
        text = src.read()
    else:
        text = Path(src).read_text()
    return [ln.strip() for ln in text.splitlines()]


def _int(tok: str, line: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {tok!r} in line {line!r}") from None


def parse_graph(text: str) -> EdgeColoredGraph:
    return read_graph(io.StringIO(text))


def read_graph(src: Source) -> EdgeColoredGraph:
    n = m = None
    edges = []
    for line in _lines(src):
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "ecg":
                raise GraphFormatError(f"bad header {line!r}")
            if n is not None:
                raise GraphFormatError("duplicate header")
            n, m = _int(parts[2], line), _int(parts[3], line)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before header")
            if len(parts) != 4:
                raise GraphFormatError(f"bad edge line {line!r}")
            u, v, c = (_int(p, line) for p in parts[1:])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex out of range in {line!r}")
            edges.append((u - 1, v - 1, c))
        else:
            raise GraphFormatError(f"unrecognised line {line!r}")
    if n is None:
        raise GraphFormatError("missing 'p ecg' header")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        return EdgeColoredGraph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def _edge_lines(g: EdgeColoredGraph, eids) -> list[str]:
    rows = []
    for eid in eids:
        u, v, c = g.edges[eid]
        if u > v:
            u, v = v, u
        rows.append((u, v, c))
    return [f"e {u + 1} {v + 1} {c}" for u, v, c in sorted(rows)]


def format_graph(g: EdgeColoredGraph) -> str:
    lines = [f"p ecg {g.n} {g.m}"] + _edge_lines(g, range(g.m))
    return "\n".join(lines) + "\n"


def write_graph(g: EdgeColoredGraph, dest: Source) -> None:
    if hasattr(dest, "write"):
        dest.write(format_graph(g))
    else:
        Path(dest).write_text(format_graph(g))


def format_tree(g: EdgeColoredGraph, tree) -> str:
    lines = [f"t {tree.order}"]
    if not tree.edges:
        lines += [f"v {v + 1}" for v in sorted(tree.vertices)]
    lines += _edge_lines(g, tree.edges)
    return "\n".join(lines) + "\n"


def read_tree(src: Source, g: EdgeColoredGraph, mode):
    """Parse a tree file against ``g``; edges are matched by endpoints and color."""
    from .trees import ColoredTree

    order = None
    verts: set[int] = set()
    eids = []
    for line in _lines(src):
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "t" and len(parts) == 2:
            order = _int(parts[1], line)
        elif parts[0] == "v" and len(parts) == 2:
            verts.add(_int(parts[1], line) - 1)
        elif parts[0] == "e" and len(parts) == 4:
            u, v, c = (_int(p, line) - d for p, d in zip(parts[1:], (1, 1, 0)))
            eid = g.edge_id(u, v) if 0 <= u < g.n and 0 <= v < g.n and u != v else None
            if eid is None or g.color(eid) != c:
                raise GraphFormatError(f"tree edge {line!r} is not an edge of the graph")
            eids.append(eid)
            verts.update((u, v))
        else:
            raise GraphFormatError(f"unrecognised tree line {line!r}")
    if order is None:
        raise GraphFormatError("missing 't' line")
    if order != len(verts):
        raise GraphFormatError(f"tree announces order {order}, lists {len(verts)} vertices")
    return ColoredTree(frozenset(verts), tuple(eids), mode)


def read_cnf(src: Source):
    """DIMACS CNF: ``p cnf <vars> <clauses>`` then 0-terminated clause lines."""
    from .sat import CnfFormula

    s = t = None
    clauses: list[list[int]] = []
    pending: list[int] = []
    for line in _lines(src):
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphFormatError(f"bad problem line {line!r}")
            s, t = _int(parts[2], line), _int(parts[3], line)
            continue
        if s is None:
            raise GraphFormatError("clause before problem line")
        for tok in line.split():
            lit = _int(tok, line)
            if lit == 0:
                clauses.append(pending)
                pending = []
            else:
                pending.append(lit)
    if s is None:
        raise GraphFormatError("missing 'p cnf' header")
    if pending:
        raise GraphFormatError("last clause is not terminated by 0")
    if len(clauses) != t:
        raise GraphFormatError(f"header announces {t} clauses, found {len(clauses)}")
    return CnfFormula(s, [tuple(c) for c in clauses])


def format_cnf(f) -> str:
    lines = [f"p cnf {f.s} {len(f.clauses)}"]
    lines += [" ".join(str(lit) for lit in clause) + " 0" for clause in f.clauses]
    return "\n".join(lines) + "\n"
