import itertools
import json

import pytest
from hypothesis import given, strategies as st

from pctree.graph import is_connected, is_star_colored
from pctree.oracle import max_colored_tree, max_sat_brute
from pctree.sat import CnfFormula, ReductionMap, build_tree_from_assignment, extract_assignment, reduce
from pctree.trees import ColoredTree, Mode, verify_tree

SMALL = CnfFormula(3, [(1, 2), (1, -2), (-1, 3), (-1, -3)])


@st.composite
def formulas(draw, max_s=4, max_t=6):
    s = draw(st.integers(1, max_s))
    t = draw(st.integers(0, max_t))
    clauses = []
    for _ in range(t):
        vs = draw(st.lists(st.integers(1, s), min_size=1, max_size=min(3, s), unique=True))
        clauses.append(tuple(v if draw(st.booleans()) else -v for v in vs))
    return CnfFormula(s, clauses)


def test_small_formula_graph():
    g, rm = reduce(SMALL)
    assert g.n == 13
    assert is_star_colored(g) and is_connected(g)
    c4 = rm.clause[3]
    assert sorted(g.neighbors(c4)) == sorted([rm.a_neg[0], rm.a_neg[2]])


def test_small_formula_optimum():
    g, rm = reduce(SMALL)
    order, t = max_colored_tree(g, Mode.RAINBOW, bound=13)
    assert order == 9 == max_sat_brute(SMALL) + 2 * 3
    tree = build_tree_from_assignment(g, rm, [1, 0, 1])
    assert tree.order == 9 and verify_tree(g, tree, Mode.RAINBOW)
    alpha, sat = extract_assignment(g, rm, tree)
    assert alpha == [1, 0, 1] and sat == 3


def test_one_variable_no_clauses():
    g, rm = reduce(CnfFormula(1, []))
    assert g.n == 3 and g.m == 2 and g.color(0) == g.color(1) == rm.b[0]
    assert max_colored_tree(g, Mode.RAINBOW)[0] == 2


def test_polarity():
    g, rm = reduce(CnfFormula(2, [(1, -2)]))
    assert sorted(g.neighbors(rm.clause[0])) == sorted([rm.a_pos[0], rm.a_neg[1]])


def test_single_edge_tree():
    g, rm = reduce(SMALL)
    t = ColoredTree.from_edges(g, [g.edge_id(rm.y[0], rm.a_pos[0])], Mode.RAINBOW)
    alpha, sat = extract_assignment(g, rm, t)
    assert alpha == [1, 0, 0]
    assert sat >= t.order - 2 * 3


def test_all_false_on_positive_formula():
    f = CnfFormula(3, [(1, 2), (3,)])
    g, rm = reduce(f)
    assert build_tree_from_assignment(g, rm, [0, 0, 0]).order == 6


def test_rejections():
    with pytest.raises(ValueError):
        reduce(CnfFormula(0, []))
    with pytest.raises(ValueError):
        CnfFormula(2, [(3,)])
    with pytest.raises(ValueError):
        CnfFormula(2, [(1, 1)])
    with pytest.raises(ValueError):
        CnfFormula(2, [()])
    assert CnfFormula(2, [()], allow_empty=True).t == 1


def test_role_map_is_a_bijection_and_serializes():
    g, rm = reduce(SMALL)
    verts = rm.y + rm.a_pos + rm.a_neg + rm.clause
    assert sorted(verts) == list(range(g.n))
    assert sorted(rm.b + rm.clause_color + rm.d) == sorted(g.palette())
    assert ReductionMap.from_json(json.loads(json.dumps(rm.to_json()))) == rm


@given(formulas())
def test_opt_identity(f):
    g, rm = reduce(f)
    assert is_star_colored(g) and is_connected(g)
    order, t = max_colored_tree(g, Mode.RAINBOW, bound=3 * f.s + f.t)
    assert order == max_sat_brute(f) + 2 * f.s
    _, sat = extract_assignment(g, rm, t)
    assert sat >= order - 2 * f.s


@given(formulas(), st.data())
def test_tree_from_assignment_round_trip(f, data):
    g, rm = reduce(f)
    alpha = data.draw(st.lists(st.integers(0, 1), min_size=f.s, max_size=f.s))
    t = build_tree_from_assignment(g, rm, alpha)
    q = f.satisfied(alpha)
    assert verify_tree(g, t, Mode.RAINBOW) and t.order == 2 * f.s + q
    back, sat = extract_assignment(g, rm, t)
    assert sat >= q
