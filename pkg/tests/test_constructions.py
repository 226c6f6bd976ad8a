import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edimlab import (
    BadParamsError,
    KOutOfRangeError,
    MTooSmallError,
    all_pairs_distances,
    build_graph,
    cartesian_path,
    construct_F,
    construct_H,
    is_edge_generator,
    join,
    max_degree,
    min_joint_cover,
    product_upper_witness,
    standard_family,
)
from edimlab.constructions import MAX_FK_K

from conftest import complete, connected_graphs, cycle, path


def test_construct_F1_is_a_path():
    got = construct_F(1)
    assert got.graph.edges == ((0, 2), (1, 2))
    assert got.labels == ("b1", "a{}", "a{1}")


def test_construct_F2_shape():
    got = construct_F(2)
    assert (got.graph.n, got.graph.m) == (6, 11)
    assert got.labels == ("b1", "b2", "a{}", "a{1}", "a{2}", "a{1,2}")
    assert max_degree(got.graph) == 5
    # a_B sits at the top index and is adjacent to everything
    assert got.graph.degree(5) == 5


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_construct_F_adjacency_rule(k):
    g = construct_F(k).graph
    assert g.n == k + (1 << k)
    for i in range(k):
        for j in range(k):
            if i != j:
                assert g.has_edge(i, j)
        for s in range(1 << k):
            assert g.has_edge(i, k + s) == bool(s >> i & 1)
    for s in range(1 << k):
        for t in range(s + 1, 1 << k):
            assert g.has_edge(k + s, k + t)


def test_construct_F_rejects_bad_k():
    with pytest.raises(KOutOfRangeError):
        construct_F(0)
    with pytest.raises(KOutOfRangeError):
        construct_F(MAX_FK_K + 1)


def test_construct_H_adds_universal_vertex():
    got = construct_H(1)
    assert got.graph.n == 4
    assert got.labels[-1] == "t"
    assert got.graph.degree(3) == 3
    h2 = construct_H(2).graph
    assert h2.n == 7
    assert h2.degree(6) == 6
    # a_B keeps full degree after the join
    assert h2.degree(5) == 6


def test_join_examples():
    k1 = build_graph(1, [])
    assert join(k1, k1) == complete(2)
    fan = join(path(3), k1)
    assert (fan.n, fan.m) == (4, 5)
    wheel = join(cycle(4), k1)
    assert (wheel.n, wheel.m) == (5, 8)
    assert wheel.degree(4) == 4


def test_join_shifts_second_operand():
    g = join(path(2), path(2))
    assert g.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def test_cartesian_path_examples():
    one = cartesian_path(build_graph(1, []), 4)
    assert one.graph == path(4)
    square = cartesian_path(path(2), 2)
    assert (square.graph.n, square.graph.m) == (4, 4)
    assert all(square.graph.degree(v) == 2 for v in range(4))
    grid = cartesian_path(path(3), 4)
    assert (grid.graph.n, grid.graph.m) == (12, 17)
    assert grid.labels[:4] == ("0(1)", "1(1)", "2(1)", "0(2)")


def test_cartesian_path_rejects_small_m():
    with pytest.raises(MTooSmallError):
        cartesian_path(path(3), 1)


@given(connected_graphs(max_n=5), st.integers(2, 4))
@settings(max_examples=30, deadline=None)
def test_cartesian_distance_law(g, m):
    prod = cartesian_path(g, m).graph
    dg = all_pairs_distances(g).d
    dp = all_pairs_distances(prod).d
    for i in range(m):
        for j in range(m):
            for v in range(g.n):
                for w in range(g.n):
                    assert dp[i * g.n + v][j * g.n + w] == dg[v][w] + abs(i - j)


def test_standard_families():
    assert path(1).n == 1
    assert cycle(3) == complete(3)
    assert standard_family("star", [4]).m == 4
    kb = standard_family("complete_bipartite", [2, 3])
    assert (kb.n, kb.m) == (5, 6)
    assert not kb.has_edge(0, 1) and kb.has_edge(0, 2)
    grid = standard_family("grid", [3, 4])
    assert grid == cartesian_path(path(4), 3).graph


def test_standard_family_rejects_bad_input():
    with pytest.raises(BadParamsError):
        standard_family("mystery", [3])
    with pytest.raises(BadParamsError):
        standard_family("cycle", [2])
    with pytest.raises(BadParamsError):
        standard_family("grid", [3])


def test_product_upper_witness_examples():
    assert product_upper_witness(path(3), 3) == {0, 6}
    assert product_upper_witness(complete(3), 2) == {0, 1, 3}


@given(connected_graphs(max_n=5), st.integers(2, 3))
@settings(max_examples=25, deadline=None)
def test_product_upper_witness_generates(g, m):
    k, _ = min_joint_cover(g)
    witness = product_upper_witness(g, m)
    assert len(witness) == k + 1
    assert is_edge_generator(cartesian_path(g, m).graph, witness)
