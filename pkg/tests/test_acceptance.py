"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

from __future__ import annotations

import time


from conftest import record_criterion
from kelmans_turan.families import (
    degree_power_argmax,
    degree_power_w_closed,
    lambda_s_closed,
    path_t,
    s_graph,
    w_graph,
)
from kelmans_turan.graph import complete, disjoint_union, empty, is_isomorphic, join
from kelmans_turan.io import from_graph6
from kelmans_turan.parameters import ParameterKind, degree_power, spectral_radius
from kelmans_turan.verify import (
    bondy_chvatal_suite,
    duality_suite,
    kelmans_monotonicity_suite,
    kopylov_suite,
    two_path_suite,
    threshold_structure_suite,
    verify_classical,
    verify_feasibility,
    verify_theorem,
)

FEASIBLE = [ParameterKind.edges(), ParameterKind.degree_power(2), ParameterKind.spectral(), ParameterKind.signless()]


def _theorem_grid(theorem: str, cases) -> tuple[bool, list[str], float]:
    start = time.perf_counter()
    failures = []
    for n, k in cases:
        for kind in FEASIBLE:
            r = verify_theorem(theorem, n, k, kind)
            if not r.passed:
                failures.append(f"n={n} k={k} {kind}: brute {r.brute_value} family {r.family_value} {r.notes}")
    return not failures, failures, time.perf_counter() - start


def test_criterion_01_counterexample_values():
    start = time.perf_counter()
    graphs = [
        (join(complete(3), empty(5)), 5.0),
        (join(complete(1), disjoint_union(complete(5), empty(2))), 5.0695),
        (join(complete(4), empty(5)), 6.2170),
        (join(complete(2), disjoint_union(complete(5), empty(2))), 6.1970),
    ]
    got = [spectral_radius(g) for g, _ in graphs]
    elapsed = time.perf_counter() - start
    ok = all(abs(v - want) <= 1e-3 for v, (_, want) in zip(got, graphs)) and elapsed < 1.0
    record_criterion(1, "spectral values of the four-graph counterexample", ok, ", ".join(f"{v:.4f}" for v in got) + f"; {elapsed:.3f}s")
    assert ok


def test_criterion_02_star_closed_form():
    start = time.perf_counter()
    worst = 0.0
    for n in range(3, 51):
        for t in range(2, n):
            worst = max(worst, abs(spectral_radius(s_graph(n, t)) - lambda_s_closed(n, t)))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and elapsed < 10
    record_criterion(2, "closed form of lambda(S_{n,t}), 2 <= t < n <= 50", ok, f"max err {worst:.2e}; {elapsed:.1f}s")
    assert ok


def test_criterion_03_feasibility_sweeps():
    start = time.perf_counter()
    kinds = FEASIBLE + [
        ParameterKind.degree_power(3),
        ParameterKind.cliques(3),
        ParameterKind.cliques(4),
        ParameterKind.stars(2),
        ParameterKind.stars(3),
    ]
    bad = {}
    for kind in kinds:
        r = verify_feasibility(kind, 6)
        if r.violations:
            bad[str(kind)] = (r.violations, r.witness)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 600
    record_criterion(3, "Kelmans and edge-addition sweeps, labeled connected n <= 6", ok, f"{bad or 'no violations'}; {elapsed:.1f}s")
    assert ok


def test_criterion_04_main1():
    cases = [(n, k) for n in range(5, 9) for k in range(5, n + 1)]
    ok, failures, elapsed = _theorem_grid("Main1", cases)
    record_criterion(4, "2-connected C>=k-free maximisers in G1, 5 <= k <= n <= 8", ok, f"{len(cases) * 4} runs; {elapsed:.1f}s; {failures[:3]}")
    assert ok


def test_criterion_05_main2():
    cases = [(n, k) for n in range(4, 9) for k in range(4, n + 1)]
    ok, failures, elapsed = _theorem_grid("Main2", cases)
    record_criterion(5, "connected P_k-free maximisers in G2, 4 <= k <= n <= 8", ok, f"{len(cases) * 4} runs; {elapsed:.1f}s; {failures[:3]}")
    assert ok


def test_criterion_06_matching():
    cases = [(n, k) for n in range(4, 9) for k in range(1, n) if 2 * k + 2 <= n]
    ok, failures, elapsed = _theorem_grid("Matching", cases)
    odd = []
    for k in range(1, 4):
        n = 2 * k + 1
        for kind in FEASIBLE:
            r = verify_theorem("Matching", n, k, kind)
            sole = len(r.maximizers) == 1 and is_isomorphic(
                complete(n), from_graph6(r.maximizers[0]["graph6"])
            )
            if not (r.passed and sole):
                odd.append(f"n={n} {kind}")
    ok = ok and not odd
    record_criterion(6, "connected M_{k+1}-free maximisers in G3, K_n when n = 2k+1", ok, f"{len(cases) * 4} + 12 runs; {elapsed:.1f}s; {failures[:3]} {odd}")
    assert ok


def test_criterion_07_kopylov_edges():
    rows = []
    for n in range(5, 9):
        rows += verify_classical("KopylovEdges", n).rows
    ok = all(r["equal"] for r in rows)
    record_criterion(7, "Kopylov edge bound, 5 <= k <= n <= 8", ok, f"{sum(r['equal'] for r in rows)}/{len(rows)} exact")
    assert ok


def test_criterion_08_erdos_gallai_cycles():
    rows = []
    for n in range(3, 8):
        rows += [dict(r, n=n) for r in verify_classical("ErdosGallaiCycles", n).rows]
    mismatched = [f"(n={r['n']},k={r['k']}): {r['brute']} vs {r['bound']}" for r in rows if not r["equal"]]
    holds = all(r["bound_holds"] for r in rows)
    ok = not mismatched
    detail = f"floor((k-1)(n-1)/2) upper bound holds everywhere: {holds}; not attained at {', '.join(mismatched)}"
    record_criterion(8, "Erdos-Gallai cycle maximum equals floor((k-1)(n-1)/2), 3 <= k <= n <= 7", ok, detail)
    assert holds
    assert ok, detail


def test_criterion_09_degree_power_argmax():
    checks = []
    for k in (4, 5, 6):
        t = path_t(k)
        for n in (2 * k, 2 * k + 2):
            for p in (2, 3):
                top, low = w_graph(n, k - 1, t), w_graph(n, k - 1, 1)
                dt, d1 = degree_power(top, p), degree_power(low, p)
                assert isinstance(dt, int) and dt == degree_power_w_closed(n, k, t, p)
                won = dt > d1 or (k in (4, 5) and is_isomorphic(top, low))
                checks.append(won and degree_power_argmax(n, k, p) == top)
    ok = all(checks)
    record_criterion(9, "degree-power argmax W_{n,k-1,t} for n in {2k, 2k+2}", ok, f"{sum(checks)}/{len(checks)}")
    assert ok


def test_criterion_10_sun_das():
    r = verify_classical("SunDas", 6)
    record_criterion(10, "Sun-Das inequality, labeled connected n <= 6", r.passed, f"{r.checked} vertex checks, {r.violations} violations")
    assert r.passed


def test_criterion_11_lemma_suites():
    reports = [
        threshold_structure_suite(6, 7),
        kelmans_monotonicity_suite(7),
        kopylov_suite(500, 9, seed=0),
        two_path_suite(500, 9, seed=0),
        bondy_chvatal_suite(7),
        duality_suite(6),
    ]
    ok = all(r.passed for r in reports)
    detail = "; ".join(f"{r.name} {r.violations}/{r.checked}" for r in reports)
    record_criterion(11, "lemma suites", ok, detail)
    assert ok
