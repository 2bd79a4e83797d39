"""
Extremal families
=================

W_{n,k,s} = K_s v ((n-k+s)K_1 u K_{k-2s}) and the three families built from
it.  Sweeping a parameter over a family gives the extremal value; for edges
and degree powers the maximum sits at one end of the s range.
"""

from __future__ import annotations

from kelmans_turan.families import degree_power_argmax, extremal_value, family, w_graph
from kelmans_turan.io import to_graph6
from kelmans_turan.parameters import ParameterKind, evaluate
from kelmans_turan.structure import Connectivity, ExtremalProblem, circumference, long_cycle_free, path_free

for which, n, k in [("G1", 10, 9), ("G2", 10, 8), ("G3", 10, 3)]:
    fam = family(which, n, k)
    print(which, [(s, g.num_edges) for s, g in fam.members])

# circumference of the cycle family stays below k
print("c(W_{10,9,s}):", [circumference(g) for g in family("G1", 10, 9).graphs])

kind = ParameterKind.spectral()
for n in (8, 12, 20, 30):
    best, winners = extremal_value(ExtremalProblem(path_free(8)), kind, n)
    print(f"n={n}: max lambda over G2 = {best:.6f} at s = {[s for s, _ in winners]}")

# two-connected cycle problem, edges: the Kopylov endpoints
best, winners = extremal_value(ExtremalProblem(long_cycle_free(9), Connectivity.TWO_CONNECTED), ParameterKind.edges(), 12)
print("edges:", best, [s for s, _ in winners])

g = degree_power_argmax(14, 7, 2)
print("degree-power argmax for n=14, k=7:", to_graph6(g), g == w_graph(14, 6, 2))
print([evaluate(w_graph(14, 6, s), ParameterKind.degree_power(2)) for s in (1, 2)])
