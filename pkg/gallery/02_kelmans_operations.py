"""
Kelmans operations and threshold graphs
=======================================

G[x -> y] moves every neighbour of x outside N[y] over to y.  Repeating it
on bad pairs ends in a threshold graph, and a further run of operations on
non-adjacent pairs pushes a connected threshold graph inside
K_{p-1} v (K_{s-p+1} u (n-s)K_1).
"""

from __future__ import annotations

from kelmans_turan.graph import cycle, from_edges, path
from kelmans_turan.io import to_graph6
from kelmans_turan.kelmans import (
    bad_pairs,
    disintegration,
    eko_reduce,
    eko_shape,
    is_threshold,
    kelmans_op,
    threshold_graph,
)
from kelmans_turan.families import w_graph

# one operation on the 4-cycle: a triangle with a pendant vertex
print("C4[0->1]:", kelmans_op(cycle(4), 0, 1).edges())

# P_4 has one bad pair, and one operation turns it into a star
print("bad pairs of P4:", bad_pairs(path(4)))
trace = threshold_graph(path(4))
print("threshold of P4:", trace.result.edges(), "after", len(trace.steps), "step")

# a larger example: the sum of squared degrees climbs at every step
g = from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (0, 4), (2, 6)])
trace = threshold_graph(g)
cur = g
for step in trace.steps:
    cur = kelmans_op(cur, step.source, step.target)
    print(f"  {step.source}->{step.target}  sum d^2 = {sum(d * d for d in cur.degrees())}")
h = trace.result
print("threshold graph:", to_graph6(h), "is_threshold:", is_threshold(h))

# clique data and the reduction into the target shape
shape = eko_shape(h)
reduced = eko_reduce(h)
print(f"s={shape.s} p={shape.p} core={shape.core}")
print("EKO steps:", [(st.source, st.target) for st in reduced.steps])
print("inside target:", shape.contains(reduced.result))

# alpha-disintegration strips the independent part of W_{9,6,2}
print("H(W_{9,6,2}; 2) has", disintegration(w_graph(9, 6, 2), 2).n, "vertices")
