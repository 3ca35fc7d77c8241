import pytest

from crownmagic.exceptions import InvalidInput, NotACrownShape
from crownmagic.graph_core import (
    CrownSpec,
    Digraph,
    Graph,
    build_crown,
    crown_shape,
    cycle_graph,
    directed_cycle,
    is_single_cycle,
    star_loop,
    underlying,
)


def test_directed_cycle_five_plus_arcs():
    d = directed_cycle(5, "+")
    assert set(d.arcs) == {(1, 4), (4, 2), (2, 5), (5, 3), (3, 1)}


def test_directed_cycle_minus_reverses_plus():
    plus = directed_cycle(5, "+")
    minus = directed_cycle(5, "-")
    assert set(minus.arcs) == {(b, a) for a, b in plus.arcs}


@pytest.mark.parametrize("m", [4, 2, 1, 0])
def test_directed_cycle_rejects_even_or_small(m):
    with pytest.raises(InvalidInput):
        directed_cycle(m, "+")


@pytest.mark.parametrize("m", [3, 5, 7, 9, 15, 21, 45])
@pytest.mark.parametrize("sign", ["+", "-"])
def test_directed_cycle_one_regular_strongly_connected(m, sign):
    d = directed_cycle(m, sign)
    assert d.is_one_regular()
    assert d.is_strongly_connected()
    assert is_single_cycle(underlying(d))


def test_star_loop_smallest():
    d = star_loop(1)
    assert d.vertex_count == 2
    assert set(d.arcs) == {(1, 1), (1, 2)}


def test_star_loop_three_leaves():
    d = star_loop(3)
    assert d.vertex_count == 4
    assert len(d.arcs) == 4
    for leaf in (2, 3, 4):
        assert d.in_neighbors(leaf) == [1]


def test_star_loop_rejects_zero():
    with pytest.raises(InvalidInput):
        star_loop(0)


def test_build_crown_smallest():
    d = build_crown(CrownSpec(3, 1), "+")
    assert d.vertex_count == 6
    assert len(d.arcs) == 6
    core = [(a, b) for a, b in d.arcs if a <= 3 and b <= 3]
    assert set(core) == set(directed_cycle(3, "+").arcs)


def test_build_crown_counts():
    d = build_crown(CrownSpec(15, 2), "+")
    assert d.vertex_count == 45
    assert len(d.arcs) == 45


def test_build_crown_degree_sequence():
    g = underlying(build_crown(CrownSpec(5, 1), "+"))
    assert sorted(g.degrees().values()) == [1] * 5 + [3] * 5


def test_build_crown_rejects_bad_spec():
    with pytest.raises(InvalidInput):
        CrownSpec(2, 1)
    with pytest.raises(InvalidInput):
        CrownSpec(5, 0)


def test_underlying_forgets_orientation():
    assert is_single_cycle(underlying(directed_cycle(5, "+")))
    star = underlying(star_loop(3))
    assert set(star.edges) == {(1, 1), (1, 2), (1, 3), (1, 4)}


def test_underlying_merges_opposite_arcs():
    g = underlying(Digraph(2, ((1, 2), (2, 1))))
    assert g.edges == ((1, 2),)


def test_digraph_rejects_parallel_arcs_and_bad_endpoints():
    with pytest.raises(InvalidInput):
        Digraph(3, ((1, 2), (1, 2)))
    with pytest.raises(InvalidInput):
        Digraph(3, ((1, 4),))


def test_graph_degree_sum_counts_loops_twice():
    g = Graph(3, ((1, 1), (1, 2), (2, 3)))
    assert sum(g.degrees().values()) == 2 * g.size
    assert g.degree(1) == 3


def test_crown_shape_round_trip():
    g = underlying(build_crown(CrownSpec(15, 1), "+"))
    shape = crown_shape(g)
    assert len(shape.core) == 15
    assert shape.n == 1
    assert shape.single_cycle


@pytest.mark.parametrize("m", [3, 5, 8, 9, 12, 15])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_crown_shape_round_trip_grid(m, n):
    shape = crown_shape(underlying(build_crown(CrownSpec(m, n), "+")))
    assert (len(shape.core), shape.n, shape.single_cycle) == (m, n, True)


def test_crown_shape_rejects_uneven_pendants():
    # 5-cycle with a single extra pendant on one vertex
    edges = list(cycle_graph(5).edges) + [(1, 6)]
    with pytest.raises(NotACrownShape):
        crown_shape(Graph(6, tuple(edges)))


def test_crown_shape_two_disjoint_cycles():
    edges = []
    for base in (0, 5):
        for i in range(5):
            edges.append((base + i + 1, base + (i + 1) % 5 + 1))
    for v in range(1, 11):
        edges.append((v, 10 + v))
    shape = crown_shape(Graph(20, tuple(edges)))
    assert len(shape.core) == 10
    assert shape.n == 1
    assert not shape.single_cycle


def test_crown_shape_loop_core():
    shape = crown_shape(Graph(2, ((1, 1), (1, 2))))
    assert shape.core == (1,)
    assert not shape.single_cycle


def test_crown_shape_rejects_leaf_leaf_edge():
    with pytest.raises(NotACrownShape):
        crown_shape(Graph(2, ((1, 2),)))
