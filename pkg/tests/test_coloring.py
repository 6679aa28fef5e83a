import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_chromatic, brute_colorable, brute_is_proper
from tricolor.coloring import (
    COLOR_NAMES,
    Coloring,
    coloring_from_names,
    exact_chromatic,
    greedy_coloring,
    is_proper,
    paper_fixture_coloring,
    periodic_coloring,
    row_periodicity,
    row_vectors,
)
from tricolor.errors import DomainError, ResourceError
from tricolor.structure import AdjacencyMode, Graph, build_structure, to_graph

PATH, CLIQUE = AdjacencyMode.PATH, AdjacencyMode.CLIQUE


def graph(n, mode=PATH):
    return to_graph(build_structure(n), mode)


# -- fixture from the order-4 figure ------------------------------------------


def test_paper_fixture_by_name():
    c = paper_fixture_coloring(4)
    names = [COLOR_NAMES[k] for k in c.colors]
    assert names[0] == "red"
    assert names[1:5] == ["black", "blue", "green", "grey"]
    assert names[5:9] == ["blue", "red", "grey", "blue"]
    assert names[9:13] == ["black", "blue", "green", "grey"]
    assert c.palette_size == 5 and len(set(c.colors)) == 5


def test_paper_fixture_properties():
    c = paper_fixture_coloring(4)
    s = build_structure(4)
    assert is_proper(graph(4), c)
    assert row_periodicity(s, c)
    # C and J (row 2, columns 1 and 4) are both blue and collinear.
    assert c[5] == c[8]
    assert (5, 8) in set(graph(4, CLIQUE).edges)
    assert not is_proper(graph(4, CLIQUE), c)


@pytest.mark.parametrize("n", [3, 5, 6])
def test_paper_fixture_only_order_four(n):
    with pytest.raises(DomainError):
        paper_fixture_coloring(n)


# -- is_proper ------------------------------------------------------------------


def test_monochrome_is_improper():
    g = graph(3)
    assert not is_proper(g, Coloring((0,) * g.vertex_count))


def test_partial_coloring_rejected():
    g = graph(3)
    with pytest.raises(DomainError):
        is_proper(g, Coloring((0, 1, 2)))
    with pytest.raises(DomainError):
        Coloring.from_mapping({0: 0, 1: 1}, 3)


def test_coloring_indices_contiguous():
    with pytest.raises(DomainError):
        Coloring((0, 2))
    with pytest.raises(DomainError):
        Coloring((0, -1))
    assert Coloring(()).palette_size == 0


def test_color_names_roundtrip():
    c = paper_fixture_coloring(4)
    assert coloring_from_names(COLOR_NAMES[k] for k in c.colors) == c
    assert coloring_from_names(["red", "c1"]).colors == (0, 1)


# -- greedy -----------------------------------------------------------------------


def test_greedy_natural_order_order_four():
    c = greedy_coloring(graph(4))
    # first-fit by hand: apex, then rows left to right
    assert c.colors == (0, 1, 2, 1, 2, 0, 1, 0, 1, 1, 0, 1, 0)
    assert c.palette_size == 3


def test_greedy_edgeless_and_triangle():
    assert greedy_coloring(Graph(5, ()), [4, 2, 0, 1, 3]).palette_size == 1
    tri = graph(2)
    for order in ([0, 1, 2], [2, 1, 0], [1, 0, 2]):
        assert greedy_coloring(tri, order).palette_size == 3


@pytest.mark.parametrize("order", [[0, 1], [0, 1, 1], [0, 1, 3]])
def test_greedy_rejects_bad_order(order):
    with pytest.raises(DomainError):
        greedy_coloring(graph(2), order)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 10), st.randoms(use_true_random=False), st.sampled_from([PATH, CLIQUE]))
def test_greedy_random_orders(n, rnd, mode):
    g = graph(n, mode)
    order = list(range(g.vertex_count))
    rnd.shuffle(order)
    c = greedy_coloring(g, order)
    assert brute_is_proper(g.edges, c.colors)
    assert c.palette_size <= g.max_degree + 1


# -- exact search -----------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
def test_exact_matches_enumeration_path(n):
    g = graph(n)
    chi, witness = exact_chromatic(g)
    assert chi == brute_chromatic(g.vertex_count, g.edges) == 3
    assert is_proper(g, witness) and witness.palette_size == chi


@pytest.mark.parametrize("n", [2, 3])
def test_exact_matches_enumeration_clique(n):
    g = graph(n, CLIQUE)
    chi, _ = exact_chromatic(g)
    assert chi == brute_chromatic(g.vertex_count, g.edges) == n + 1


def test_exact_order_three_clique_needs_four():
    g = graph(3, CLIQUE)
    assert not brute_colorable(g.vertex_count, g.edges, 3)
    assert exact_chromatic(g)[0] == 4


@pytest.mark.parametrize("n", [5, 6])
def test_exact_path_larger(n):
    chi, w = exact_chromatic(graph(n))
    assert chi == 3 and is_proper(graph(n), w)


@pytest.mark.parametrize("n", [4, 5])
def test_exact_clique_larger(n):
    g = graph(n, CLIQUE)
    chi, w = exact_chromatic(g)
    assert chi == n + 1 and is_proper(g, w)


def test_exact_trivial_and_limits():
    assert exact_chromatic(Graph(1, ()))[0] == 1
    assert exact_chromatic(Graph(0, ()))[0] == 0
    assert exact_chromatic(graph(4), max_colors=2) is None
    assert exact_chromatic(graph(4), max_colors=3)[0] == 3
    with pytest.raises(ResourceError):
        exact_chromatic(graph(7))


def test_exact_deterministic():
    g = graph(5, CLIQUE)
    assert exact_chromatic(g) == exact_chromatic(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9).flatmap(
    lambda v: st.tuples(
        st.just(v),
        st.sets(st.tuples(st.integers(0, v - 1), st.integers(0, v - 1)).filter(lambda e: e[0] < e[1])),
    )
))
def test_exact_random_graphs_against_enumeration(case):
    v, edges = case
    g = Graph.from_edges(v, edges)
    chi, w = exact_chromatic(g)
    assert chi == brute_chromatic(v, g.edges)
    assert is_proper(g, w)
    assert chi <= greedy_coloring(g).palette_size <= g.max_degree + 1


# -- periodic scheme -------------------------------------------------------------


def test_periodic_order_four():
    s = build_structure(4)
    c = periodic_coloring(s)
    assert c[0] == 0
    assert row_vectors(s, c) == [(1, 2, 1, 2), (2, 1, 2, 1), (1, 2, 1, 2)]
    assert brute_is_proper(graph(4).edges, c.colors)


def test_periodic_order_two():
    s = build_structure(2)
    assert periodic_coloring(s).colors == (0, 1, 2)


def test_periodic_order_six_rows():
    s = build_structure(6)
    rows = row_vectors(s, periodic_coloring(s))
    assert rows[0] == rows[2] == rows[4]
    assert rows[1] == rows[3]
    assert row_periodicity(s, periodic_coloring(s))


@given(st.integers(2, 64))
def test_periodic_invariants(n):
    s = build_structure(n)
    c = periodic_coloring(s)
    assert is_proper(to_graph(s), c)
    assert c.palette_size == 3
    assert row_periodicity(s, c)


def test_row_periodicity_detects_change():
    s = build_structure(4)
    colors = list(periodic_coloring(s).colors)
    colors[9] = 0  # row 3, column 1
    assert not row_periodicity(s, Coloring(tuple(colors)))
    with pytest.raises(DomainError):
        row_periodicity(s, Coloring((0, 1)))


def test_greedy_need_not_be_periodic():
    s = build_structure(4)
    assert not row_periodicity(s, greedy_coloring(to_graph(s)))


def test_random_orders_seeded():
    rng = random.Random(7)
    g = graph(6)
    for _ in range(50):
        order = rng.sample(range(g.vertex_count), g.vertex_count)
        assert exact_chromatic(g)[0] <= greedy_coloring(g, order).palette_size
