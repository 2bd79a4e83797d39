from __future__ import annotations

from math import comb

import pytest

from kelmans_turan.families import (
    HypothesisError,
    candidate_members,
    degree_power_argmax,
    degree_power_w_closed,
    extremal_value,
    family,
    lambda_s_closed,
    matching_edge_formula_as_printed,
    matching_extremal_edges,
    padded_clique,
    path_t,
    s_graph,
    s_plus_graph,
    w_edge_count,
    w_graph,
)
from kelmans_turan.graph import complete, is_2_connected, is_connected, is_isomorphic, remove_edge
from kelmans_turan.parameters import ParameterKind, degree_power, evaluate, spectral_radius
from kelmans_turan.structure import (
    Connectivity,
    ExtremalProblem,
    circumference,
    long_cycle_free,
    longest_path_order,
    matching_free,
    matching_number,
    path_free,
)


def test_w_partition():
    n, k, s = 10, 7, 2
    g = w_graph(n, k, s)
    X, Y, Z = range(s), range(s, k - s), range(k - s, n)
    assert all(g.has_edge(a, b) for a in [*X, *Y] for b in [*X, *Y] if a < b)
    assert all(g.has_edge(x, z) for x in X for z in Z)
    assert not any(g.has_edge(y, z) for y in Y for z in Z)
    assert not any(g.has_edge(a, b) for a in Z for b in Z if a < b)


def test_w_examples():
    g = w_graph(7, 5, 2)
    assert g.num_edges == 11 == comb(2, 2) + 2 * 5 + comb(1, 2)
    assert is_isomorphic(g, s_graph(7, 2))
    # boundary n = k
    for k in range(5, 10):
        h = w_graph(k, k, 2)
        assert h.n == k and h.degrees()[-2:] == [2, 2]


@pytest.mark.parametrize("n", range(1, 13))
def test_w_edge_count_grid(n):
    for k in range(0, 2 * n + 1):
        for s in range(1, k // 2 + 1):
            if n >= k - s:
                assert w_graph(n, k, s).num_edges == w_edge_count(n, k, s)


def test_w_errors():
    for args in [(5, 5, 0), (5, 3, 2), (3, 7, 2)]:
        with pytest.raises(HypothesisError):
            w_graph(*args)


def test_s_graphs():
    g = s_graph(8, 3)
    assert g.num_edges == comb(3, 2) + 3 * 5
    assert s_plus_graph(8, 3).num_edges == g.num_edges + 1
    assert all(s_plus_graph(8, 3).has_edge(u, v) for u, v in g.edges())
    for n in range(3, 11):
        for k in range(1, n):
            assert is_isomorphic(s_graph(n, k), w_graph(n, 2 * k + 1, k))
    with pytest.raises(HypothesisError):
        s_graph(4, 4)
    with pytest.raises(HypothesisError):
        s_plus_graph(4, 3)


def test_family_examples():
    g1 = family("G1", 7, 5)
    assert [s for s, _ in g1.members] == [2] and g1.graphs[0] == w_graph(7, 5, 2)
    g2 = family("G2", 7, 6)
    assert [s for s, _ in g2.members] == [1, 2]
    g3 = family("G3", 8, 2)
    assert [g.num_edges for g in g3.graphs] == [10, 13]
    assert all(g.n == 8 for g in g3.graphs)
    assert family("G3", 7, 3).graphs == [complete(7)]
    for which, n, k in [("G1", 6, 4), ("G2", 3, 4), ("G3", 4, 2)]:
        with pytest.raises(HypothesisError):
            family(which, n, k)


@pytest.mark.parametrize("n", range(4, 11))
def test_members_avoid_their_pattern(n):
    for k in range(5, n + 1):
        for g in family("G1", n, k).graphs:
            assert is_2_connected(g) and circumference(g) <= k - 1
    for k in range(4, n + 1):
        for g in family("G2", n, k).graphs:
            assert is_connected(g) and longest_path_order(g) <= k - 1
    for k in range(1, (n - 1) // 2 + 1):
        for g in family("G3", n, k).graphs:
            assert is_connected(g) and matching_number(g) <= k


@pytest.mark.parametrize("n", range(4, 13))
def test_degree_power_closed_form(n):
    for k in range(4, n + 1):
        for s in range(1, path_t(k) + 1):
            for p in (2, 3):
                assert degree_power(w_graph(n, k - 1, s), p) == degree_power_w_closed(n, k, s, p)


@pytest.mark.parametrize("n", range(6, 13))
def test_degree_power_convex_in_s(n):
    for k in range(8, n + 1):
        for p in (2, 3):
            d = [degree_power_w_closed(n, k, s, p) for s in range(1, path_t(k) + 1)]
            for a, b, c in zip(d, d[1:], d[2:]):
                assert a + c > 2 * b


def test_spectral_radius_grows_with_n():
    for k in (6, 7, 8):
        for s in range(1, path_t(k) + 1):
            vals = [spectral_radius(w_graph(n, k - 1, s)) for n in range(k, 16)]
            assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))


def test_s_closed_form_used_in_sweeps():
    assert lambda_s_closed(8, 3) == 5.0
    assert lambda_s_closed(7, 2) == pytest.approx((1 + 41**0.5) / 2)


def test_extremal_value_examples():
    best, winners = extremal_value(
        ExtremalProblem(matching_free(3), Connectivity.CONNECTED), ParameterKind.edges(), 8
    )
    assert best == 13 and len(winners) == 1 and winners[0][1].num_edges == 13
    # Kopylov edge count is attained at one of the two ends of the range
    for n in range(5, 13):
        for k in range(5, n + 1):
            best, _ = extremal_value(
                ExtremalProblem(long_cycle_free(k), Connectivity.TWO_CONNECTED), ParameterKind.edges(), n
            )
            assert best == max(w_edge_count(n, k, 2), w_edge_count(n, k, (k - 1) // 2))
    best, winners = extremal_value(ExtremalProblem(path_free(6)), ParameterKind.spectral(), 20)
    assert [s for s, _ in winners] == [2]
    assert best == pytest.approx(spectral_radius(w_graph(20, 5, 2)))


def test_any_connectivity_variants():
    prob = ExtremalProblem(path_free(6), Connectivity.ANY)
    labels = [s for s, _ in candidate_members(prob, ParameterKind.spectral(), 7)]
    assert labels == [1, 2, "K"]
    # with few vertices the padded clique wins
    best, winners = extremal_value(prob, ParameterKind.spectral(), 6)
    assert [s for s, _ in winners] == ["K"] and winners[0][1] == padded_clique(6, 5)
    assert best == pytest.approx(4.0)
    prob = ExtremalProblem(matching_free(3), Connectivity.ANY)
    best, _ = extremal_value(prob, ParameterKind.edges(), 8)
    assert best == matching_extremal_edges(8, 2)
    with pytest.raises(HypothesisError):
        extremal_value(ExtremalProblem(path_free(6), Connectivity.ANY), ParameterKind.edges(), 8)
    with pytest.raises(HypothesisError):
        extremal_value(ExtremalProblem(path_free(6)), ParameterKind.edges(), 8, k=5)


def test_dedupe_of_coinciding_members():
    # k=5 in G2: W_{n,4,1} is the only member, t = 1
    assert len(family("G2", 8, 5).members) == 1
    best, winners = extremal_value(ExtremalProblem(path_free(4)), ParameterKind.edges(), 6)
    assert len(winners) == 1


def test_matching_formula_discrepancy():
    assert matching_edge_formula_as_printed(8, 2) == 16
    assert matching_extremal_edges(8, 2) == 13 == s_graph(8, 2).num_edges


def test_degree_power_argmax_examples():
    assert degree_power_argmax(12, 6, 2) == w_graph(12, 5, 2)
    assert evaluate(w_graph(12, 5, 2), ParameterKind.degree_power(2)) > evaluate(
        w_graph(12, 5, 1), ParameterKind.degree_power(2)
    )
    for n in range(4, 12):
        assert degree_power_argmax(n, 4, 2) == w_graph(n, 3, 1)
    for n in range(5, 12):
        assert is_isomorphic(w_graph(n, 4, 1), degree_power_argmax(n, 5, 3))
    with pytest.raises(HypothesisError):
        degree_power_argmax(8, 3, 2)
    with pytest.raises(HypothesisError):
        degree_power_argmax(8, 5, 1.5)


def test_family_members_are_edge_maximal():
    # removing any edge keeps the pattern avoided, so the sweep compares real candidates
    g = w_graph(9, 6, 2)
    assert circumference(remove_edge(g, 0, 1)) <= 5
