"""Immutable simple graphs stored as per-vertex neighbourhood bit rows."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_N = 62
CANONICAL_MAX_N = 10


class GraphError(ValueError):
    """Raised for invalid vertices, edges or graph sizes."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an integer whose bit ``u`` is set iff ``uv`` is an edge.
    ``n == 0`` is allowed and used as the empty-graph sentinel.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_N:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_N}")
        if len(self.adj) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise GraphError(f"row {v} references a vertex outside the graph")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- basic queries -------------------------------------------------
    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def num_edges(self) -> int:
        return sum(_popcount(r) for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return _popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [_popcount(r) for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self.adj[v]))

    def closed_row(self, v: int) -> int:
        """Bit row of the closed neighbourhood N[v]."""
        return self.adj[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.adj[v] & ((1 << v) - 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    def rows(self) -> np.ndarray:
        """Adjacency rows as an ``int64`` array (input format of the compiled kernels)."""
        return np.array(self.adj, dtype=np.int64)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def upper_mask(self) -> int:
        """Edge set as an integer; edge ``(i, j)``, i < j, is bit ``j(j-1)/2 + i``."""
        m = 0
        for i, j in self.edges():
            m |= 1 << (j * (j - 1) // 2 + i)
        return m

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} not in 0..{self.n - 1}")


# -- constructors ------------------------------------------------------
def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_N:
        raise GraphError(f"vertex count {n} outside 0..{MAX_N}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_upper_mask(n: int, mask: int) -> Graph:
    """Inverse of :meth:`Graph.upper_mask`."""
    rows = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            b += 1
    return Graph(n, tuple(rows))


def from_rows(rows: Sequence[int]) -> Graph:
    return Graph(len(rows), tuple(int(r) for r in rows))


def _check_n(n: int, low: int = 1) -> None:
    if not low <= n <= MAX_N:
        raise GraphError(f"n={n} outside supported range {low}..{MAX_N}")


def complete(n: int) -> Graph:
    _check_n(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    _check_n(n)
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    _check_n(n)
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _check_n(n, 3)
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    _check_n(n)
    return from_edges(n, ((0, i) for i in range(1, n)))


_CONSTRUCTORS = {"complete": complete, "empty": empty, "path": path, "cycle": cycle, "star": star}


def construct(kind: str, n: int) -> Graph:
    try:
        return _CONSTRUCTORS[kind](n)
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}; expected one of {sorted(_CONSTRUCTORS)}") from None


# -- combinations --------------------------------------------------------
def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_N:
        raise GraphError(f"union would have {g1.n + g2.n} > {MAX_N} vertices")
    return Graph(g1.n + g2.n, g1.adj + tuple(r << g1.n for r in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_N:
        raise GraphError(f"join would have {g1.n + g2.n} > {MAX_N} vertices")
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    rows = tuple(r | right for r in g1.adj) + tuple((r << g1.n) | left for r in g2.adj)
    return Graph(g1.n + g2.n, rows)


def disjoint_copies(g: Graph, times: int) -> Graph:
    out = Graph(0, ())
    for _ in range(times):
        out = disjoint_union(out, g)
    return out


# -- edits -----------------------------------------------------------------
def add_edge(g: Graph, u: int, v: int) -> Graph:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    if g.adj[u] >> v & 1:
        raise GraphError(f"edge ({u}, {v}) already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled in increasing order."""
    keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for u in _bits(g.adj[v]):
            if u in index:
                r |= 1 << index[u]
        rows.append(r)
    return Graph(len(keep), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm must be a permutation of the vertex set")
    rows = [0] * g.n
    for v in range(g.n):
        r = 0
        for u in _bits(g.adj[v]):
            r |= 1 << perm[u]
        rows[perm[v]] = r
    return Graph(g.n, tuple(rows))


# -- connectivity ------------------------------------------------------------
def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[list[int]]:
    left = (1 << g.n) - 1
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = _reach(g.adj, start, left)
        out.append(list(_bits(comp)))
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    full = (1 << g.n) - 1
    return _reach(g.adj, 0, full) == full


def articulation_points(g: Graph) -> list[int]:
    """Vertices whose deletion splits their own component."""
    full = (1 << g.n) - 1
    out = []
    for v in range(g.n):
        rest = _reach(g.adj, v, full) & ~(1 << v)
        if not rest:
            continue
        start = (rest & -rest).bit_length() - 1
        if _reach(g.adj, start, rest) != rest:
            out.append(v)
    return out


def is_2_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


# -- canonical form ------------------------------------------------------------
@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Minimal upper-triangular adjacency code over admissible vertex orders."""

    n: int
    bits: int


def _refine(g: Graph) -> list[int]:
    """Colour refinement starting from degrees; colours are canonical integers."""
    colour = g.degrees()
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in _bits(g.adj[v])))) for v in range(g.n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sig), key=lambda s: (-s[0], s)))}
        new = [ranking[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def canonical_form(g: Graph, max_n: int = CANONICAL_MAX_N) -> CanonicalForm:
    """Canonical code: equal for two graphs iff they are isomorphic.

    Vertex orders are restricted to those sorted by refined colour, and
    interchangeable twins are placed in index order; the code is the
    lexicographically smallest column-by-column upper-triangular bit string
    (graph6 column order) over the remaining orders.
    """
    n = g.n
    if n > max_n:
        raise GraphError(f"canonical form limited to n <= {max_n}, got {n}")
    if n == 0:
        return CanonicalForm(0, 0)
    colour = _refine(g)
    order_slots = sorted(colour)
    adj = g.adj
    twin_rep = []
    for v in range(n):
        rep = v
        for u in range(v):
            if colour[u] == colour[v] and (
                adj[u] & ~(1 << v) == adj[v] & ~(1 << u)
            ):
                rep = twin_rep[u]
                break
        twin_rep.append(rep)
    # frontier: list of placed vertex sequences sharing the minimal prefix
    frontier: list[tuple[int, ...]] = [()]
    code = 0
    for pos in range(n):
        want = order_slots[pos]
        best_col = None
        nxt: list[tuple[int, ...]] = []
        for placed in frontier:
            used = 0
            for v in placed:
                used |= 1 << v
            for v in range(n):
                if used >> v & 1 or colour[v] != want:
                    continue
                # twins are interchangeable: place them in index order only
                rep = twin_rep[v]
                if any(twin_rep[u] == rep and not used >> u & 1 for u in range(rep, v)):
                    continue
                # first placed vertex is the most significant bit of the column
                col = 0
                row = adj[v]
                for i, u in enumerate(placed):
                    if row >> u & 1:
                        col |= 1 << (pos - 1 - i)
                if best_col is None or col < best_col:
                    best_col = col
                    nxt = [placed + (v,)]
                elif col == best_col:
                    nxt.append(placed + (v,))
        code = (code << pos) | (best_col or 0)
        frontier = nxt
    return CanonicalForm(n, code)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges != g2.num_edges or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1, max_n=MAX_N) == canonical_form(g2, max_n=MAX_N)
