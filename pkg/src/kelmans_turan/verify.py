"""Brute-force checks of the extremal theorems, the classical bounds and the lemma suites."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .enumeration import EnumerationSpec, argmax_over, labeled_mask_array, representative_mask_array
from .families import (
    HypothesisError,
    dedupe,
    erdos_gallai_cycle_bound,
    family,
    matching_edge_formula_as_printed,
    matching_extremal_edges,
    w_edge_count,
    cycle_t,
)
from .graph import Graph, canonical_form, from_edges, from_upper_mask, is_2_connected, is_connected
from .io import to_graph6
from .kelmans import ThresholdError, threshold_graph, threshold_structure_violations
from .parameters import REL_TOL, ParameterKind, evaluate, values_close
from .structure import (
    Connectivity,
    ExtremalProblem,
    circumference,
    long_cycle_free,
    longest_path,
    longest_path_order,
    matching_free,
    path_free,
)

FEASIBILITY_MAX_N = 6

# theorem name -> (connectivity, pattern builder, family name)
THEOREMS = {
    "main1": (Connectivity.TWO_CONNECTED, long_cycle_free, "G1"),
    "main2": (Connectivity.CONNECTED, path_free, "G2"),
    "matching": (Connectivity.CONNECTED, lambda k: matching_free(k + 1), "G3"),
}
CLASSICAL = ("KopylovEdges", "ErdosGallaiCycles", "ErdosGallaiMatching", "SunDas")


def canonical_label(g: Graph) -> str:
    c = canonical_form(g)
    return f"{c.n}:{c.bits:x}"


def _theorem_key(theorem: str) -> str:
    key = theorem.lower()
    if key not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from Main1, Main2, Matching")
    return key


def theorem_problem(theorem: str, k: int) -> ExtremalProblem:
    conn, pattern, _ = THEOREMS[_theorem_key(theorem)]
    return ExtremalProblem(pattern(k), conn)


def check_hypotheses(theorem: str, n: int, k: int) -> None:
    key = _theorem_key(theorem)
    if key == "main1" and not 5 <= k <= n:
        raise HypothesisError("Main1 needs 5 <= k <= n")
    if key == "main2" and not 4 <= k <= n:
        raise HypothesisError("Main2 needs 4 <= k <= n")
    if key == "matching" and not (k >= 1 and n >= 2 * k + 1):
        raise HypothesisError("Matching needs k >= 1 and n >= 2k + 1")


@dataclass
class VerificationReport:
    theorem: str
    n: int
    k: int
    kind: str
    brute_value: float | int
    family_value: float | int
    values_agree: bool
    maximizers: list[dict]
    family: list[dict]
    scanned: int
    admitted: int
    passed: bool
    runtime: float = 0.0
    notes: list[str] = field(default_factory=list)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "n": self.n,
            "k": self.k,
            "kind": self.kind,
            "brute_value": self.brute_value,
            "family_value": self.family_value,
            "values_agree": self.values_agree,
            "maximizers": self.maximizers,
            "family": self.family,
            "scanned": self.scanned,
            "admitted": self.admitted,
            "passed": self.passed,
            "notes": self.notes,
        }
        if timing:
            out["runtime"] = self.runtime
        return out


def verify_theorem(
    theorem: str, n: int, k: int, kind: ParameterKind, jobs: int | None = None
) -> VerificationReport:
    """Compare the brute-force maximum over the theorem's graph class with its family.

    Feasible kinds also need every brute-force maximiser to be isomorphic to
    a family member; weakly-feasible kinds only need the values to agree.
    """
    start = time.perf_counter()
    key = _theorem_key(theorem)
    check_hypotheses(key, n, k)
    problem = theorem_problem(key, k)
    fam = family(THEOREMS[key][2], n, k)
    members = [(s, g, evaluate(g, kind)) for s, g in fam.members]
    family_value = max(v for _, _, v in members)
    member_forms = {}
    for s, g, _ in members:
        member_forms.setdefault(canonical_form(g), s)

    spec = EnumerationSpec(n, problem.connectivity, problem.pattern)
    res = argmax_over(spec, kind, jobs=jobs)
    agree = values_close(res.value, family_value, kind.exact, REL_TOL)
    maximizers = []
    for g in res.maximizers:
        c = canonical_form(g)
        maximizers.append(
            {
                "graph6": to_graph6(g),
                "canonical": f"{c.n}:{c.bits:x}",
                "in_family": c in member_forms,
                "s": member_forms.get(c),
            }
        )
    passed = agree and (not kind.feasible or all(m["in_family"] for m in maximizers))
    notes = []
    distinct = len(dedupe([(s, g) for s, g, _ in members]))
    if distinct < len(members):
        notes.append(f"{len(members)} family members but only {distinct} isomorphism classes")
    if not agree:
        notes.append("brute-force maximum differs from the family maximum")
    outside = [m["graph6"] for m in maximizers if not m["in_family"]]
    if outside:
        tag = "fail" if kind.feasible else "allowed for a weakly-feasible kind"
        notes.append(f"maximisers outside the family ({tag}): {', '.join(outside)}")
    return VerificationReport(
        theorem={"main1": "Main1", "main2": "Main2", "matching": "Matching"}[key],
        n=n,
        k=k,
        kind=str(kind),
        brute_value=res.value,
        family_value=family_value,
        values_agree=agree,
        maximizers=maximizers,
        family=[{"s": s, "graph6": to_graph6(g), "value": v} for s, g, v in members],
        scanned=res.scanned,
        admitted=res.admitted,
        passed=passed,
        runtime=time.perf_counter() - start,
        notes=notes,
    )


@dataclass
class SweepReport:
    """Outcome of an exhaustive or randomised property sweep."""

    name: str
    params: dict
    checked: int
    violations: int
    rows: list[dict] = field(default_factory=list)
    witness: dict | None = None
    notes: list[str] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "name": self.name,
            "params": self.params,
            "checked": self.checked,
            "violations": self.violations,
            "passed": self.passed,
            "rows": self.rows,
            "witness": self.witness,
            "notes": self.notes,
        }
        if timing:
            out["runtime"] = self.runtime
        return out


def _witness(n: int, mask: int, **extra) -> dict | None:
    if mask < 0:
        return None
    return {"graph6": to_graph6(from_upper_mask(n, int(mask))), **extra}


def _sweep_slack(kind: ParameterKind, n: int) -> float:
    # absolute slack scaled to the largest value the kind can take at this order
    return 0.0 if kind.exact else REL_TOL * max(1.0, 2.0 * (n - 1))


def verify_feasibility(kind: ParameterKind, n_max: int = FEASIBILITY_MAX_N) -> SweepReport:
    """Kelmans monotonicity and edge addition over every labeled connected graph with n <= n_max.

    The Kelmans sweep takes every ordered pair, adjacent or not.  Edge
    addition must increase feasible kinds strictly and must not decrease
    weakly-feasible ones.
    """
    if n_max > FEASIBILITY_MAX_N:
        raise ValueError(f"feasibility sweeps are limited to n <= {FEASIBILITY_MAX_N}")
    start = time.perf_counter()
    rows, witness = [], None
    checked = violations = 0
    for n in range(2, n_max + 1):
        masks = labeled_mask_array(n, Connectivity.CONNECTED)
        slack = _sweep_slack(kind, n)
        kb, kc, kw, ku, kv = K.kelmans_sweep(masks, n, kind.code, kind.kernel_arg, 1e-10, slack)
        eb, ec, ew, eu, ev = K.edge_addition_sweep(
            masks, n, kind.code, kind.kernel_arg, 1e-10, slack, kind.feasible
        )
        rows.append(
            {
                "n": n,
                "graphs": int(masks.shape[0]),
                "kelmans_pairs": int(kc),
                "kelmans_violations": int(kb),
                "edge_additions": int(ec),
                "edge_violations": int(eb),
            }
        )
        checked += int(kc) + int(ec)
        violations += int(kb) + int(eb)
        if witness is None and kb:
            witness = _witness(n, kw, test="kelmans", pair=[int(ku), int(kv)])
        if witness is None and eb:
            witness = _witness(n, ew, test="edge", pair=[int(eu), int(ev)])
    notes = [] if kind.feasible else ["weakly-feasible kind: edge addition checked as non-decreasing"]
    return SweepReport(
        "feasibility",
        {"kind": str(kind), "n_max": n_max},
        checked,
        violations,
        rows,
        witness,
        notes,
        time.perf_counter() - start,
    )


def _edge_scan(n: int, problem: ExtremalProblem) -> int:
    return argmax_over(EnumerationSpec(n, problem.connectivity, problem.pattern), ParameterKind.edges()).value


def verify_classical(which: str, n: int, k: int | None = None) -> SweepReport:
    """Confirm a classical bound exhaustively at order ``n`` (all admissible ``k`` unless given)."""
    start = time.perf_counter()
    names = {w.lower(): w for w in CLASSICAL}
    if which.lower() not in names:
        raise ValueError(f"unknown classical result {which!r}; choose from {', '.join(CLASSICAL)}")
    which = names[which.lower()]
    rows: list[dict] = []
    notes: list[str] = []
    witness = None
    if which == "SunDas":
        if n > 7:
            raise ValueError("SunDas is limited to n <= 7")
        checked = violations = 0
        for m in range(2, n + 1):
            masks = labeled_mask_array(m, Connectivity.CONNECTED)
            bad, cnt, wm, wv, worst = K.sun_das_sweep(masks, m, 1e-10, REL_TOL * max(1.0, m * m))
            rows.append({"n": m, "checked": int(cnt), "violations": int(bad), "max_gap": float(worst)})
            checked += int(cnt)
            violations += int(bad)
            if witness is None and bad:
                witness = _witness(m, wm, vertex=int(wv))
        return SweepReport(which, {"n": n}, checked, violations, rows, witness, notes, time.perf_counter() - start)

    if n > 8:
        raise ValueError(f"{which} is limited to n <= 8")
    if which == "KopylovEdges":
        ks = range(5, n + 1)
    elif which == "ErdosGallaiCycles":
        ks = range(3, n + 1)
    else:
        ks = range(1, (n - 1) // 2 + 1)
    if k is not None:
        if k not in ks:
            raise HypothesisError(f"k={k} outside the range of {which} at n={n}")
        ks = [k]
    violations = 0
    for kk in ks:
        if which == "KopylovEdges":
            brute = _edge_scan(n, ExtremalProblem(long_cycle_free(kk), Connectivity.TWO_CONNECTED))
            bound = max(w_edge_count(n, kk, 2), w_edge_count(n, kk, cycle_t(kk)))
            row = {"k": kk, "brute": brute, "bound": bound}
        elif which == "ErdosGallaiCycles":
            brute = _edge_scan(n, ExtremalProblem(long_cycle_free(kk), Connectivity.ANY))
            bound = erdos_gallai_cycle_bound(n, kk)
            row = {"k": kk, "brute": brute, "bound": bound, "bound_holds": brute <= bound}
        else:
            brute = _edge_scan(n, ExtremalProblem(matching_free(kk + 1), Connectivity.ANY))
            bound = matching_extremal_edges(n, kk)
            printed = matching_edge_formula_as_printed(n, kk)
            row = {"k": kk, "brute": brute, "bound": bound, "printed_formula": printed}
            if printed != bound:
                notes.append(
                    f"k={kk}: max{{C(2k+1,2), C(n,2)-k(n-k)}} = {printed} differs from the"
                    f" extremal edge count {bound}"
                )
        row["equal"] = brute == bound
        rows.append(row)
        if brute != bound:
            violations += 1
            if witness is None:
                witness = {"k": kk, "brute": brute, "bound": bound}
    return SweepReport(which, {"n": n}, len(rows), violations, rows, witness, notes, time.perf_counter() - start)


# -- lemma suites ----------------------------------------------------------------------
def threshold_structure_suite(labeled_n_max: int = 6, representative_n: int = 7) -> SweepReport:
    """Clique structure of threshold_graph results, edge count and connectivity preservation.

    Every labeled connected graph up to ``labeled_n_max`` is reduced, plus the
    degree-sorted representatives at ``representative_n``.
    """
    start = time.perf_counter()
    rows, witness = [], None
    checked = violations = 0
    orders = [(n, False) for n in range(2, labeled_n_max + 1)]
    if representative_n > labeled_n_max:
        orders.append((representative_n, True))
    for n, reps in orders:
        if reps:
            masks = representative_mask_array(EnumerationSpec(n, Connectivity.CONNECTED))
        else:
            masks = labeled_mask_array(n, Connectivity.CONNECTED)
        counts = {"nested": 0, "disjoint": 0, "cross": 0, "chain": 0, "edges": 0, "connectivity": 0, "cap": 0}
        for m in masks:
            g = from_upper_mask(n, int(m))
            try:
                h = threshold_graph(g).result
            except ThresholdError:
                counts["cap"] += 1
                bad = True
            else:
                found = threshold_structure_violations(h)
                found["edges"] = int(h.num_edges != g.num_edges)
                found["connectivity"] = int(not is_connected(h))
                for key, val in found.items():
                    counts[key] += val
                bad = any(found.values())
            if bad:
                violations += 1
                if witness is None:
                    witness = {"graph6": to_graph6(g)}
        checked += int(masks.shape[0])
        rows.append({"n": n, "stream": "representatives" if reps else "labeled", "graphs": int(masks.shape[0]), **counts})
    return SweepReport(
        "threshold-structure",
        {"labeled_n_max": labeled_n_max, "representative_n": representative_n},
        checked, violations, rows, witness, [], time.perf_counter() - start,
    )


def kelmans_monotonicity_suite(n_max: int = 7) -> SweepReport:
    """Circumference and longest path never grow under a Kelmans operation on an edge.

    Runs over degree-sorted representatives of every connected graph; all
    ordered adjacent pairs are tried, so every labeled graph is covered up to
    isomorphism.
    """
    start = time.perf_counter()
    rows, witness = [], None
    checked = violations = 0
    for n in range(2, n_max + 1):
        masks = representative_mask_array(EnumerationSpec(n, Connectivity.CONNECTED))
        bc, bp, cnt, wm, wu, wv = K.ko_structure_sweep(masks, n)
        rows.append({"n": n, "graphs": int(masks.shape[0]), "pairs": int(cnt), "cycle_violations": int(bc), "path_violations": int(bp)})
        checked += int(cnt)
        violations += int(bc) + int(bp)
        if witness is None and (bc or bp):
            witness = _witness(n, wm, pair=[int(wu), int(wv)])
    return SweepReport("kelmans-monotonicity", {"n_max": n_max}, checked, violations, rows, witness, [], time.perf_counter() - start)


def _random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return from_edges(n, edges)


def _random_path(rng: np.random.Generator, g: Graph, avoid: int = 0) -> list[int]:
    free = [v for v in range(g.n) if not avoid >> v & 1]
    if not free:
        return []
    path = [int(rng.choice(free))]
    used = avoid | 1 << path[0]
    while True:
        nxt = [u for u in range(g.n) if g.adj[path[-1]] >> u & 1 and not used >> u & 1]
        if not nxt or rng.random() < 0.15:
            return path
        u = int(rng.choice(nxt))
        path.append(u)
        used |= 1 << u


def _sample(rng: np.random.Generator, n_min: int, n_max: int, accept) -> Graph:
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        g = _random_graph(rng, n, float(rng.uniform(0.25, 0.8)))
        if accept(g):
            return g


def kopylov_suite(samples: int = 500, n_max: int = 9, seed: int = 0, paths_per_graph: int = 4) -> SweepReport:
    """Random 2-connected graphs: a path with m edges and ends x, y forces a cycle of length >= min(m+1, d_P(x)+d_P(y))."""
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    checked = violations = 0
    witness = None
    for _ in range(samples):
        g = _sample(rng, 4, n_max, is_2_connected)
        c = circumference(g)
        paths = [longest_path(g)] + [_random_path(rng, g) for _ in range(paths_per_graph)]
        for p in paths:
            if len(p) < 2:
                continue
            on = sum(1 << v for v in p)
            need = min(len(p), bin(g.adj[p[0]] & on).count("1") + bin(g.adj[p[-1]] & on).count("1"))
            checked += 1
            if c < need:
                violations += 1
                witness = witness or {"graph6": to_graph6(g), "path": p}
    return SweepReport("kopylov-cycle", {"samples": samples, "n_max": n_max, "seed": seed}, checked, violations, [], witness, [], time.perf_counter() - start)


def two_path_suite(samples: int = 500, n_max: int = 9, seed: int = 0, pairs_per_graph: int = 4) -> SweepReport:
    """Random connected graphs: disjoint paths P1, P2 with p vertices and ends x, y force a path of order >= min(p, d_F(x)+d_F(y)+1)."""
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    checked = violations = 0
    witness = None
    for _ in range(samples):
        g = _sample(rng, 3, n_max, is_connected)
        lp = longest_path_order(g)
        for _ in range(pairs_per_graph):
            p1 = _random_path(rng, g)
            p2 = _random_path(rng, g, sum(1 << v for v in p1))
            if not p2:
                continue
            x = p1[int(rng.integers(2)) * (len(p1) - 1)]
            y = p2[int(rng.integers(2)) * (len(p2) - 1)]
            on = sum(1 << v for v in p1 + p2)
            need = min(len(p1) + len(p2), bin(g.adj[x] & on).count("1") + bin(g.adj[y] & on).count("1") + 1)
            checked += 1
            if lp < need:
                violations += 1
                witness = witness or {"graph6": to_graph6(g), "paths": [p1, p2], "ends": [x, y]}
    return SweepReport("two-path", {"samples": samples, "n_max": n_max, "seed": seed}, checked, violations, [], witness, [], time.perf_counter() - start)


def bondy_chvatal_suite(n_max: int = 7) -> SweepReport:
    """Non-adjacent u, v with d(u)+d(v) >= 2k+1 and nu(G+uv) = k+1 already have nu(G) = k+1."""
    start = time.perf_counter()
    rows, witness = [], None
    checked = violations = 0
    for n in range(2, n_max + 1):
        masks = representative_mask_array(EnumerationSpec(n, Connectivity.CONNECTED))
        bad, cnt, wm, wu, wv = K.bondy_chvatal_sweep(masks, n)
        rows.append({"n": n, "graphs": int(masks.shape[0]), "pairs": int(cnt), "violations": int(bad)})
        checked += int(cnt)
        violations += int(bad)
        if witness is None and bad:
            witness = _witness(n, wm, pair=[int(wu), int(wv)])
    return SweepReport("bondy-chvatal", {"n_max": n_max}, checked, violations, rows, witness, [], time.perf_counter() - start)


def duality_suite(n_max: int = 6) -> SweepReport:
    """G has a path of order k iff G v K_1 has a cycle of length >= k+1, over all labeled graphs."""
    start = time.perf_counter()
    rows, witness = [], None
    checked = violations = 0
    for n in range(1, n_max + 1):
        masks = labeled_mask_array(n)
        bad, cnt, wm = K.duality_sweep(masks, n)
        rows.append({"n": n, "graphs": int(cnt), "violations": int(bad)})
        checked += int(cnt)
        violations += int(bad)
        if witness is None and bad:
            witness = _witness(n, wm)
    return SweepReport("path-cycle-duality", {"n_max": n_max}, checked, violations, rows, witness, [], time.perf_counter() - start)


LEMMA_SUITES = {
    "threshold-structure": threshold_structure_suite,
    "kelmans-monotonicity": kelmans_monotonicity_suite,
    "kopylov-cycle": kopylov_suite,
    "two-path": two_path_suite,
    "bondy-chvatal": bondy_chvatal_suite,
    "path-cycle-duality": duality_suite,
}


def run_lemma_suite(name: str, **kwargs) -> SweepReport:
    if name not in LEMMA_SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(LEMMA_SUITES)}")
    return LEMMA_SUITES[name](**kwargs)
