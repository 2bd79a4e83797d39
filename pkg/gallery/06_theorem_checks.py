"""
Theorem checks
==============

Brute-force maximisers over each graph class are compared with the matching
family; the classical bounds and the lemma suites run the same way.
"""

from __future__ import annotations

from kelmans_turan.parameters import ParameterKind
from kelmans_turan.verify import run_lemma_suite, verify_classical, verify_feasibility, verify_theorem

for theorem, n, k in [("Main1", 8, 6), ("Main2", 8, 6), ("Matching", 8, 2)]:
    for kind in map(ParameterKind.parse, ["edges", "lambda"]):
        r = verify_theorem(theorem, n, k, kind)
        print(f"{theorem:8} n={n} k={k} {kind!s:6} brute={r.brute_value!s:18} family={r.family_value!s:18} pass={r.passed}")

print(verify_feasibility(ParameterKind.signless(), 5).to_dict()["rows"][-1])

r = verify_classical("ErdosGallaiCycles", 7)
for row in r.rows:
    print(row)

for name in ("kelmans-monotonicity", "path-cycle-duality"):
    rep = run_lemma_suite(name)
    print(name, rep.checked, "checks,", rep.violations, "violations")
