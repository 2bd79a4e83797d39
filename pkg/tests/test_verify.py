from __future__ import annotations

import json
import math

import pytest

from conftest import brute_circumference
from kelmans_turan.enumeration import EnumerationSpec, stream_labeled
from kelmans_turan.families import HypothesisError, s_graph, w_graph
from kelmans_turan.graph import canonical_form, complete
from kelmans_turan.io import from_graph6
from kelmans_turan.parameters import ParameterKind
from kelmans_turan.verify import (
    bondy_chvatal_suite,
    duality_suite,
    kelmans_monotonicity_suite,
    kopylov_suite,
    two_path_suite,
    run_lemma_suite,
    threshold_structure_suite,
    verify_classical,
    verify_feasibility,
    verify_theorem,
)


def _canon(g6: str):
    return canonical_form(from_graph6(g6))


def test_main2_edges_example():
    r = verify_theorem("Main2", 7, 6, ParameterKind.edges())
    assert r.passed and r.brute_value == 11
    assert [_canon(m["graph6"]) for m in r.maximizers] == [canonical_form(w_graph(7, 5, 2))]
    assert r.maximizers[0]["s"] == 2


def test_main1_spectral_example():
    r = verify_theorem("Main1", 7, 5, ParameterKind.spectral())
    assert r.passed
    assert r.brute_value == pytest.approx((1 + math.sqrt(41)) / 2, abs=1e-9)
    assert _canon(r.maximizers[0]["graph6"]) == canonical_form(s_graph(7, 2))


def test_matching_complete_case():
    r = verify_theorem("Matching", 7, 3, ParameterKind.edges())
    assert r.passed and r.brute_value == 21
    assert [_canon(m["graph6"]) for m in r.maximizers] == [canonical_form(complete(7))]


def test_weakly_feasible_kind_checks_value_only():
    r = verify_theorem("Main2", 7, 6, ParameterKind.cliques(3))
    assert r.passed and r.values_agree


def test_hypotheses_enforced():
    with pytest.raises(HypothesisError):
        verify_theorem("Main1", 7, 4, ParameterKind.edges())
    with pytest.raises(HypothesisError):
        verify_theorem("Main2", 5, 6, ParameterKind.edges())
    with pytest.raises(HypothesisError):
        verify_theorem("Matching", 6, 3, ParameterKind.edges())
    with pytest.raises(ValueError):
        verify_theorem("Main9", 6, 3, ParameterKind.edges())


def test_report_is_deterministic_across_jobs():
    a = verify_theorem("Main2", 7, 5, ParameterKind.signless(), jobs=1).to_dict()
    b = verify_theorem("Main2", 7, 5, ParameterKind.signless(), jobs=2).to_dict()
    assert json.dumps(a) == json.dumps(b)
    assert "runtime" not in a


@pytest.mark.parametrize(
    "kind",
    [ParameterKind.degree_power(2), ParameterKind.spectral(), ParameterKind.cliques(3)],
)
def test_feasibility_examples(kind):
    r = verify_feasibility(kind, 6)
    assert r.violations == 0 and r.checked > 0
    assert r.rows[-1]["graphs"] == 26704


def test_feasibility_budget():
    with pytest.raises(ValueError):
        verify_feasibility(ParameterKind.edges(), 7)


def test_classical_examples():
    r = verify_classical("ErdosGallaiCycles", 6, 4)
    assert r.rows == [{"k": 4, "brute": 7, "bound": 7, "bound_holds": True, "equal": True}]
    r = verify_classical("ErdosGallaiMatching", 8, 2)
    assert r.rows[0]["brute"] == 13 and r.passed
    assert r.rows[0]["printed_formula"] == 16 and r.notes
    assert verify_classical("SunDas", 6).violations == 0
    assert verify_classical("KopylovEdges", 7).passed


def test_cycle_bound_is_not_attained_at_five_vertices():
    # independent count: most edges on 5 vertices without a Hamilton cycle
    brute = max(g.num_edges for g in stream_labeled(EnumerationSpec(5)) if brute_circumference(g) < 5)
    r = verify_classical("ErdosGallaiCycles", 5, 5)
    assert r.rows[0]["brute"] == brute == 7
    assert r.rows[0]["bound"] == 8 and r.rows[0]["bound_holds"]
    assert not r.passed


def test_lemma_suites_small():
    for report in [
        threshold_structure_suite(5, 6),
        kelmans_monotonicity_suite(6),
        kopylov_suite(samples=60, seed=3),
        two_path_suite(samples=60, seed=3),
        bondy_chvatal_suite(6),
        duality_suite(5),
    ]:
        assert report.passed, report.to_dict()
        assert report.checked > 0


def test_run_lemma_suite_names():
    assert run_lemma_suite("path-cycle-duality", n_max=4).passed
    with pytest.raises(ValueError):
        run_lemma_suite("nope")
