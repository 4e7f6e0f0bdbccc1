import pytest
from hypothesis import given

from conftest import path_graph, star_colored_graphs
from pctree.errors import NotConnected, NotStarColored
from pctree.extremal import generate
from pctree.graph import EdgeColoredGraph, min_color_degree
from pctree.oracle import max_colored_tree
from pctree.rainbow import build_rainbow_tree, rainbow_target, spanning_rainbow_tree
from pctree.trees import Mode, verify_tree


def test_star_with_distinct_colors():
    g = EdgeColoredGraph(4, [(0, 1, 1), (0, 2, 2), (0, 3, 3)])
    t = build_rainbow_tree(g)
    assert t.order >= 3
    assert verify_tree(g, t, Mode.RAINBOW)


def test_alternating_path_is_not_star_colored():
    # color 1 sits on two disjoint edges, so the class is not one star
    with pytest.raises(NotStarColored):
        build_rainbow_tree(path_graph([1, 2, 1, 2]))


def test_rainbow_path():
    g = path_graph([1, 2, 3, 4])
    assert build_rainbow_tree(g).order == 3  # target min(5, 2*1+1)


def test_g6_2_1_stops_at_four():
    g, _ = generate("G6", 2, 1)
    assert rainbow_target(g) == 5
    assert max_colored_tree(g, Mode.RAINBOW)[0] == 4
    assert build_rainbow_tree(g).order == 4


def test_preconditions():
    with pytest.raises(NotConnected):
        build_rainbow_tree(EdgeColoredGraph(3, [(0, 1, 1)]))
    with pytest.raises(ValueError):
        build_rainbow_tree(path_graph([1]), root=5)


def test_single_vertex():
    t = build_rainbow_tree(EdgeColoredGraph(1, []))
    assert t.order == 1 and t.edges == ()


def test_spanning_rainbow_tree_respects_forbidden_colors():
    g = EdgeColoredGraph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
    f = spanning_rainbow_tree(g, {0, 1, 2}, forbidden={1})
    assert sorted(f) == [1, 2]
    assert spanning_rainbow_tree(g, {0, 1, 2}, forbidden={1, 2}) is None


def test_deterministic():
    g, _ = generate("G4", 2, 2, seed=3)
    assert build_rainbow_tree(g) == build_rainbow_tree(g)


@given(star_colored_graphs())
def test_output_is_rainbow_and_at_least_two_delta(g):
    t = build_rainbow_tree(g)
    assert verify_tree(g, t, Mode.RAINBOW)
    assert t.order >= min(g.n, 2 * min_color_degree(g))


@given(star_colored_graphs(max_n=9))
def test_meets_target_whenever_oracle_does(g):
    t = build_rainbow_tree(g)
    best, _ = max_colored_tree(g, Mode.RAINBOW)
    if best >= rainbow_target(g):
        assert t.order >= rainbow_target(g)
