"""
Parameters and spectral radii
=============================

Every parameter goes through one descriptor, ParameterKind.  The spectral
radius comes from a shifted power iteration; here it is compared with a
dense eigensolver and with the closed form for K_t v (n-t)K_1.
"""

from __future__ import annotations

import numpy as np

from kelmans_turan.families import lambda_s_closed, s_graph
from kelmans_turan.graph import complete, disjoint_union, empty, join
from kelmans_turan.parameters import ParameterKind, evaluate

g1 = join(complete(3), empty(5))
g2 = join(complete(1), disjoint_union(complete(5), empty(2)))
for name, g in [("K3 v 5K1", g1), ("K1 v (K5 u 2K1)", g2)]:
    row = {str(k): evaluate(g, k) for k in map(ParameterKind.parse, ["edges", "dpow:2", "lambda", "q", "cliques:3", "stars:2"])}
    print(name, row)

# more edges does not mean a larger spectral radius
print("e:", g1.num_edges, g2.num_edges, " lambda:", evaluate(g1, ParameterKind.spectral()), evaluate(g2, ParameterKind.spectral()))

# power iteration against numpy on the same matrices
a = g2.adjacency_matrix().astype(float)
print("numpy lambda:", np.linalg.eigvalsh(a)[-1])
print("numpy q:", np.linalg.eigvalsh(a + np.diag(a.sum(1)))[-1])

worst = max(
    abs(evaluate(s_graph(n, t), ParameterKind.spectral()) - lambda_s_closed(n, t))
    for n in range(3, 41)
    for t in range(1, n)
)
print(f"closed form vs power iteration, n <= 40: max error {worst:.2e}")
