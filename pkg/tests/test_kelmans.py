from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from kelmans_turan.families import s_graph, w_graph
from kelmans_turan.graph import (
    GraphError,
    complete,
    cycle,
    from_upper_mask,
    is_connected,
    path,
    relabel,
    star,
)
from kelmans_turan.kelmans import (
    KelmansStep,
    KelmansTrace,
    ThresholdError,
    bad_pairs,
    clique_number,
    disintegration,
    eko_reduce,
    eko_shape,
    is_threshold,
    kelmans_op,
    maximal_cliques,
    threshold_graph,
    threshold_step_bound,
    threshold_structure_violations,
)
from kelmans_turan.enumeration import EnumerationSpec, stream_representatives
from kelmans_turan.structure import Connectivity




def test_ko_on_four_cycle():
    # a-b-c-d-a with a=0, b=1, c=2, d=3: d moves from a to b
    g = kelmans_op(cycle(4), 0, 1)
    assert g.num_edges == 4
    assert sorted(g.edges()) == sorted([(0, 1), (1, 2), (2, 3), (1, 3)])


def test_ko_identity_cases():
    assert kelmans_op(path(3), 0, 1) == path(3)
    assert kelmans_op(complete(5), 2, 4) == complete(5)
    with pytest.raises(GraphError):
        kelmans_op(path(3), 1, 1)


def test_eko_moves_neighbours_across_non_edge():
    g = kelmans_op(path(4), 0, 3)
    assert g.degree(0) == 0 and g.degree(3) == 2


@given(graphs(min_n=2, max_n=8), st.data())
def test_ko_preserves_edges_and_simplicity(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
    h = kelmans_op(g, x, y)
    assert h.num_edges == g.num_edges
    assert h.has_edge(x, y) == g.has_edge(x, y)
    assert set(h.neighbors(y)) >= set(g.neighbors(y))


def test_edge_preservation_exhaustive_small():
    for n in range(2, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = from_upper_mask(n, mask)
            for x, y in itertools.permutations(range(n), 2):
                assert kelmans_op(g, x, y).num_edges == g.num_edges


def test_bad_pair_examples():
    assert bad_pairs(path(4)) == [(1, 2)]
    assert bad_pairs(star(4)) == []
    assert sorted(bad_pairs(cycle(5))) == sorted(cycle(5).edges())


def test_is_threshold_examples():
    for n in range(3, 9):
        for k in range(1, n):
            assert is_threshold(s_graph(n, k))
    assert not is_threshold(cycle(5))
    assert is_threshold(complete(6))


def test_threshold_examples():
    tr = threshold_graph(path(4))
    assert len(tr.steps) == 1
    assert tr.result.degrees() == [1, 3, 1, 1]
    assert threshold_graph(star(4)).steps == ()
    c4 = threshold_graph(cycle(4))
    assert is_threshold(c4.result) and c4.result.num_edges == 4


@settings(max_examples=150)
@given(graphs(min_n=1, max_n=9))
def test_threshold_fixpoint_properties(g):
    tr = threshold_graph(g)
    h = tr.result
    assert is_threshold(h)
    assert h.num_edges == g.num_edges
    assert tr.replay() == h
    assert len(tr.steps) <= threshold_step_bound(g.n)
    assert all(s.kind == "KO" for s in tr.steps)
    if is_connected(g):
        assert is_connected(h)


@given(graphs(min_n=2, max_n=9))
def test_square_degree_sum_increases_each_round(g):
    tr = threshold_graph(g)
    cur = g
    for step in tr.steps:
        before = sum(d * d for d in cur.degrees())
        cur = kelmans_op(cur, step.source, step.target)
        assert sum(d * d for d in cur.degrees()) > before


@pytest.mark.parametrize("n", range(2, 8))
def test_threshold_structure_exhaustive(n):
    for g in stream_representatives(EnumerationSpec(n, Connectivity.CONNECTED)):
        found = threshold_structure_violations(threshold_graph(g).result)
        assert not any(found.values()), found


def test_trace_replay_rejects_mislabelled_steps():
    tr = KelmansTrace(path(3), (KelmansStep(0, 1, "EKO"),), path(3))
    with pytest.raises(GraphError):
        tr.replay()


def test_disintegration_examples():
    assert disintegration(cycle(5), 2).n == 0
    assert disintegration(complete(5), 3) == complete(5)
    h = disintegration(w_graph(9, 6, 2), 2)
    assert h == complete(4)


def test_maximal_cliques():
    assert maximal_cliques(path(4)) == [(0, 1), (1, 2), (2, 3)]
    assert clique_number(w_graph(9, 6, 2)) == 4
    assert maximal_cliques(complete(4)) == [(0, 1, 2, 3)]


def test_eko_examples():
    for n, k in [(6, 2), (8, 3), (5, 1)]:
        tr = eko_reduce(s_graph(n, k))
        assert tr.steps == () and tr.result == s_graph(n, k)
    assert eko_reduce(complete(6)).steps == ()
    h = threshold_graph(cycle(4)).result
    tr = eko_reduce(h)
    shape = eko_shape(h)
    assert shape.contains(tr.result)


def test_eko_rejects_bad_input():
    with pytest.raises(GraphError):
        eko_reduce(cycle(5))
    from kelmans_turan.graph import disjoint_union

    with pytest.raises(GraphError):
        eko_reduce(disjoint_union(complete(2), complete(2)))


def _check_eko(g):
    shape = eko_shape(g)
    tr = eko_reduce(g)
    assert all(s.kind == "EKO" for s in tr.steps)
    assert tr.replay() == tr.result
    assert tr.result.num_edges == g.num_edges
    assert shape.contains(tr.result)
    # the target is K_{p-1} v (K_{s-p+1} u (n-s)K_1)
    t = shape.target(g.n)
    assert t.num_edges == (shape.p - 1) * (shape.p - 2) // 2 + (shape.p - 1) * (g.n - shape.p + 1) + (
        shape.s - shape.p + 1
    ) * (shape.s - shape.p) // 2
    if tr.result == t:
        assert tr.steps == () and g == t


@pytest.mark.parametrize("n", range(2, 9))
def test_eko_reduce_on_every_threshold_class(n):
    for g in stream_representatives(EnumerationSpec(n, Connectivity.CONNECTED)):
        if is_threshold(g):
            _check_eko(g)


@settings(max_examples=100)
@given(graphs(min_n=2, max_n=9), st.randoms(use_true_random=False))
def test_eko_reduce_after_relabel(g, rnd):
    if not is_connected(g):
        return
    h = threshold_graph(g).result
    perm = list(range(g.n))
    rnd.shuffle(perm)
    _check_eko(relabel(h, perm))


def test_threshold_error_is_runtime_error():
    assert issubclass(ThresholdError, RuntimeError)
