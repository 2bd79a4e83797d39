"""
Graphs, graph6 and canonical forms
==================================

Graphs are immutable bit-row objects.  This script builds a few of them,
writes them out in the supported text formats and checks isomorphism.
"""

from __future__ import annotations

from kelmans_turan.graph import canonical_form, complete, cycle, disjoint_union, empty, is_isomorphic, join, relabel
from kelmans_turan.io import from_graph6, to_dot, to_edge_list, to_graph6

# K_2 joined with an independent set of four vertices
g = join(complete(2), empty(4))
print("edges:", g.edges())

code = to_graph6(g)
print("graph6:", code)
assert from_graph6(code) == g

print(to_edge_list(g))
print(to_dot(g, name="S_6_2"))

# relabelling never changes the canonical form
h = relabel(g, [5, 3, 1, 0, 2, 4])
print("same canonical form after relabel:", canonical_form(h) == canonical_form(g))

# C_6 and two disjoint triangles are both 2-regular but not isomorphic
print("C6 ~ 2K3:", is_isomorphic(cycle(6), disjoint_union(complete(3), complete(3))))
