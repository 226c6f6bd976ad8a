import pytest

from edimlab import (
    KOutOfRangeError,
    MTooSmallError,
    build_graph,
    check_corollary_diam_triangle,
    check_edge_count_bound,
    check_Fk_theorem,
    check_Hk_theorem,
    check_join_K1_theorem,
    check_max_degree_lemmas,
    check_ncondition_theorem,
    check_product_theorem,
    check_vertex_count_bound,
    construct_F,
    full_edim_condition,
    join_K1_predicate,
    sweep_theorem,
)
from edimlab.theorems import HOLDS, NOT_APPLICABLE

from conftest import complete, cycle, path, star


def test_full_edim_condition_examples():
    assert full_edim_condition(complete(4)) == (True, None)
    ok, pair = full_edim_condition(path(3))
    assert not ok and pair == (0, 1)


def test_full_edim_condition_fails_on_F2_at_the_predicted_pair():
    g = construct_F(2).graph
    ok, _ = full_edim_condition(g)
    assert not ok
    # direct recheck for the empty-set / full-set clique pair (indices 2 and 5):
    # a hub must be adjacent to 2, to 5, and to every non-mutual neighbour
    need = set(g.adjacency[2]) ^ set(g.adjacency[5])
    hubs = [
        u for u in range(g.n)
        if g.has_edge(u, 2) and g.has_edge(u, 5) and need <= set(g.adjacency[u])
    ]
    assert hubs == []


def test_ncondition_checker():
    assert check_ncondition_theorem(complete(4)).verdict == HOLDS
    assert check_ncondition_theorem(path(4)).verdict == HOLDS
    report = check_ncondition_theorem(path(2))
    assert report.verdict == NOT_APPLICABLE
    assert report.certificate["reason"]


def test_corollary_checker():
    assert check_corollary_diam_triangle(complete(4)).verdict == HOLDS
    assert check_corollary_diam_triangle(cycle(5)).verdict == HOLDS
    assert check_corollary_diam_triangle(build_graph(1, [])).verdict == NOT_APPLICABLE


def test_vertex_count_bound_checker():
    assert check_vertex_count_bound(path(5)).verdict == HOLDS
    assert check_vertex_count_bound(construct_F(2).graph).verdict == HOLDS
    assert check_vertex_count_bound(build_graph(1, [])).verdict == NOT_APPLICABLE


def test_edge_count_bound_checker():
    assert check_edge_count_bound(complete(4)).verdict == HOLDS
    assert check_edge_count_bound(path(5)).verdict == HOLDS
    assert check_edge_count_bound(path(2)).verdict == HOLDS  # edim 0, bound 1
    assert check_edge_count_bound(build_graph(1, [])).verdict == NOT_APPLICABLE


def test_max_degree_lemma_checker():
    assert check_max_degree_lemmas(star(4)).verdict == HOLDS
    assert check_max_degree_lemmas(complete(4)).verdict == HOLDS
    assert check_max_degree_lemmas(cycle(5)).verdict == HOLDS  # no universal vertex
    assert check_max_degree_lemmas(path(2)).verdict == NOT_APPLICABLE


def test_fk_hk_checkers():
    for k in (1, 2, 3):
        assert check_Fk_theorem(k).verdict == HOLDS
    for k in (1, 2):
        assert check_Hk_theorem(k).verdict == HOLDS
    with pytest.raises(KOutOfRangeError):
        check_Fk_theorem(5)
    with pytest.raises(KOutOfRangeError):
        check_Hk_theorem(4)


def test_join_predicate_examples():
    assert join_K1_predicate(complete(2))
    assert join_K1_predicate(complete(5))
    assert join_K1_predicate(cycle(4))
    # the centre of a 3-path neighbours both leaves, so the predicate holds
    assert join_K1_predicate(path(3))
    assert not join_K1_predicate(path(4))
    assert not join_K1_predicate(cycle(6))


def test_join_checker():
    assert check_join_K1_theorem(cycle(4)).verdict == HOLDS
    assert check_join_K1_theorem(path(3)).verdict == HOLDS
    assert check_join_K1_theorem(path(4)).verdict == HOLDS
    assert check_join_K1_theorem(build_graph(1, [])).verdict == NOT_APPLICABLE


def test_product_checker():
    assert check_product_theorem(path(3), 4).verdict == HOLDS
    assert check_product_theorem(complete(3), 2).verdict == HOLDS
    with pytest.raises(MTooSmallError):
        check_product_theorem(path(3), 1)


def test_reports_carry_graph_id_and_record_shape():
    report = check_ncondition_theorem(complete(4), graph_id="K_4")
    assert report.graph == "K_4"
    assert report.to_record() == "ncondition\tK_4\tholds\t{}"
    na = check_ncondition_theorem(path(2))
    assert "reason" in na.certificate


def test_small_sweeps_all_hold():
    for theorem in ("ncondition", "corollary", "vertex_bound", "edge_bound",
                    "degree_lemmas", "join"):
        summary = sweep_theorem(theorem, 5)
        assert summary.ok, summary
        assert summary.failures == ()
        assert summary.holds + summary.not_applicable == summary.graphs
    summary = sweep_theorem("product", 3, m=2)
    assert summary.ok and summary.graphs == 5


def test_sweep_counts_are_deterministic_across_threads():
    a = sweep_theorem("ncondition", 5, threads=1)
    b = sweep_theorem("ncondition", 5, threads=3)
    assert a == b
