"""Kelmans operations, threshold graphs, disintegration and the EKO reduction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .graph import Graph, GraphError, _bits, _popcount, induced_subgraph, is_connected, relabel


class ThresholdError(RuntimeError):
    """A fixpoint loop ran past its proven step bound."""


@dataclass(frozen=True)
class KelmansStep:
    source: int
    target: int
    kind: Literal["KO", "EKO"]


@dataclass(frozen=True)
class KelmansTrace:
    start: Graph
    steps: tuple[KelmansStep, ...] = field(default_factory=tuple)
    result: Graph | None = None

    def replay(self) -> Graph:
        g = self.start
        for step in self.steps:
            adjacent = g.has_edge(step.source, step.target)
            if adjacent != (step.kind == "KO"):
                raise GraphError(f"step {step} does not match the adjacency of its endpoints")
            g = kelmans_op(g, step.source, step.target)
        return g

    def to_dict(self) -> dict:
        return {
            "steps": [[s.source, s.target, s.kind] for s in self.steps],
            "num_steps": len(self.steps),
        }


def kelmans_op(g: Graph, x: int, y: int) -> Graph:
    """G[x -> y]: every neighbour of x outside N[y] is re-attached to y.

    Works for adjacent (KO) and non-adjacent (EKO) pairs.  The edge xy, when
    present, is kept, so the edge count never changes.
    """
    g._check_vertex(x)
    g._check_vertex(y)
    if x == y:
        raise GraphError("Kelmans operation needs two distinct vertices")
    moved = g.adj[x] & ~g.closed_row(y)
    if not moved:
        return g
    rows = list(g.adj)
    rows[x] &= ~moved
    rows[y] |= moved
    xbit, ybit = 1 << x, 1 << y
    for w in _bits(moved):
        rows[w] = (rows[w] & ~xbit) | ybit
    return Graph(g.n, tuple(rows))


def _nested(g: Graph, x: int, y: int) -> bool:
    a, b = g.closed_row(x), g.closed_row(y)
    return a & ~b == 0 or b & ~a == 0


def bad_pairs(g: Graph) -> list[tuple[int, int]]:
    """Adjacent pairs u < v whose closed neighbourhoods are not nested."""
    return [(u, v) for u, v in sorted(g.edges()) if not _nested(g, u, v)]


def is_threshold(g: Graph) -> bool:
    return all(_nested(g, u, v) for u, v in g.edges())


def threshold_step_bound(n: int) -> int:
    return n * (n - 1) ** 2 // 2


def threshold_graph(g: Graph) -> KelmansTrace:
    """Apply KO to bad pairs until none is left.

    Each round takes the lexicographically smallest bad pair and shifts into
    the endpoint of larger degree (smaller index on ties).  Every such move
    strictly increases the sum of squared degrees, which bounds the rounds.
    """
    cap = threshold_step_bound(g.n)
    steps: list[KelmansStep] = []
    cur = g
    while True:
        pairs = bad_pairs(cur)
        if not pairs:
            break
        if len(steps) >= cap:
            raise ThresholdError(f"threshold loop exceeded {cap} steps")
        u, v = pairs[0]
        du, dv = cur.degree(u), cur.degree(v)
        x, y = (u, v) if dv > du else (v, u)
        cur = kelmans_op(cur, x, y)
        steps.append(KelmansStep(x, y, "KO"))
    return KelmansTrace(g, tuple(steps), cur)


def disintegration_vertices(g: Graph, alpha: int) -> list[int]:
    """Vertices surviving repeated deletion of vertices of degree <= alpha."""
    alive = (1 << g.n) - 1
    while True:
        drop = 0
        for v in _bits(alive):
            if _popcount(g.adj[v] & alive) <= alpha:
                drop |= 1 << v
        if not drop:
            return list(_bits(alive))
        alive &= ~drop


def disintegration(g: Graph, alpha: int) -> Graph:
    """H(G; alpha); a 0-vertex graph when everything is deleted."""
    if alpha < 0:
        raise ValueError("alpha must be a natural number")
    return induced_subgraph(g, disintegration_vertices(g, alpha))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, largest first, ties in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(_bits(r)))
            return
        pivot_pool = p | x
        pivot = max(_bits(pivot_pool), key=lambda u: _popcount(g.adj[u] & p))
        for v in _bits(p & ~g.adj[pivot]):
            expand(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    out.sort(key=lambda c: (-len(c), c))
    return out


def clique_number(g: Graph) -> int:
    cliques = maximal_cliques(g)
    return len(cliques[0]) if cliques else 0


@dataclass(frozen=True)
class EkoShape:
    """Clique data that fixes the target K_{p-1} v (K_{s-p+1} u (n-s)K_1).

    ``core`` (size p-1) plays the K_{p-1}, ``clique`` (size s) is the maximum
    clique, and the target graph keeps exactly the edges inside ``clique`` plus
    all edges touching ``core``.
    """

    s: int
    p: int
    clique: tuple[int, ...]
    core: tuple[int, ...]

    def target(self, n: int) -> Graph:
        cm = sum(1 << v for v in self.core)
        xm = sum(1 << v for v in self.clique)
        full = (1 << n) - 1
        rows = []
        for v in range(n):
            if cm >> v & 1:
                r = full
            elif xm >> v & 1:
                r = xm | cm
            else:
                r = cm
            rows.append(r & ~(1 << v))
        return Graph(n, tuple(rows))

    def contains(self, g: Graph) -> bool:
        t = self.target(g.n)
        return all(row & ~trow == 0 for row, trow in zip(g.adj, t.adj))


def _eko_plan_sorted(g: Graph) -> tuple[EkoShape, list[tuple[int, int]]]:
    # expects vertices listed by non-increasing degree
    cliques = maximal_cliques(g)
    x_clique = cliques[0]
    s = len(x_clique)
    if len(cliques) == 1:
        return EkoShape(s, s, x_clique, x_clique[:-1]), []
    X = set(x_clique)
    others = cliques[1:]
    y1 = others[0]
    p = len(y1)
    # the clique meeting X the most contains every other intersection with X
    x_ref = min(others, key=lambda c: (-len(X & set(c)), c))
    inner = X & set(x_ref)
    common = X & set(y1)
    spare = sorted(X - common - inner)
    a1 = sorted(inner - common) + spare[: p - len(common) - 1 - len(inner - common)]
    core = tuple(sorted(set(a1) | common))
    plan: list[tuple[int, int]] = []
    b1 = sorted(set(y1) - common)
    plan += list(zip(b1[: p - len(common) - 1], a1))
    for y in others[1:]:
        movers = sorted(set(y) - inner)
        pool = [a for a in core if a not in y]
        plan += list(zip(movers[: len(movers) - 1], pool))
    return EkoShape(s, p, x_clique, core), plan


def _eko_plan(g: Graph) -> tuple[EkoShape, list[tuple[int, int]]]:
    # work on a degree-sorted copy so clique tie-breaks follow the nesting order
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    shape, plan = _eko_plan_sorted(relabel(g, perm))
    back = order.__getitem__
    shape = EkoShape(
        shape.s, shape.p, tuple(sorted(map(back, shape.clique))), tuple(sorted(map(back, shape.core)))
    )
    return shape, [(back(y), back(x)) for y, x in plan]


def eko_shape(g: Graph) -> EkoShape:
    return _eko_plan(g)[0]


def eko_reduce(g: Graph) -> KelmansTrace:
    """Turn a connected threshold graph into a subgraph of K_{p-1} v (K_{s-p+1} u (n-s)K_1).

    s is the clique number and p the order of a second-largest maximal
    clique.  Vertices of each non-maximum clique outside the reference
    intersection are shifted, all but one, into core vertices they miss.
    Steps that would not change the graph are left out of the trace.
    """
    if not is_connected(g):
        raise GraphError("eko_reduce needs a connected graph")
    if not is_threshold(g):
        raise GraphError("eko_reduce needs a threshold graph (no bad pairs)")
    shape, plan = _eko_plan(g)
    cur = g
    steps = []
    for y, x in plan:
        if cur.has_edge(y, x):
            raise ThresholdError(f"planned EKO {y}->{x} meets an adjacent pair")
        nxt = kelmans_op(cur, y, x)
        if nxt != cur:
            steps.append(KelmansStep(y, x, "EKO"))
            cur = nxt
    if not shape.contains(cur):
        raise ThresholdError("EKO reduction did not reach the target shape")
    return KelmansTrace(g, tuple(steps), cur)


def threshold_structure_violations(g: Graph) -> dict[str, int]:
    """Count failures of the four clique-structure properties of a threshold graph.

    ``nested``: edges whose closed neighbourhoods are not nested.
    ``disjoint``: pairs of maximal cliques with empty intersection.
    ``cross``: pairs of maximal cliques X, Y with an edge between X-Y and Y-X.
    ``chain``: a maximum clique S and cliques X, Y whose traces on S are incomparable.
    """
    cliques = [sum(1 << v for v in c) for c in maximal_cliques(g)]
    out = {"nested": len(bad_pairs(g)), "disjoint": 0, "cross": 0, "chain": 0}
    for i, a in enumerate(cliques):
        for b in cliques[i + 1 :]:
            if a & b == 0:
                out["disjoint"] += 1
            only_a, only_b = a & ~b, b & ~a
            if any(g.adj[v] & only_b for v in _bits(only_a)):
                out["cross"] += 1
    if cliques:
        omega = max(_popcount(c) for c in cliques)
        for s in cliques:
            if _popcount(s) != omega:
                continue
            traces = [c & s for c in cliques]
            for i, a in enumerate(traces):
                for b in traces[i + 1 :]:
                    if a & ~b and b & ~a:
                        out["chain"] += 1
    return out
