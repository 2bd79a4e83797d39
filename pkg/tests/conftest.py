from __future__ import annotations

import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from kelmans_turan.graph import Graph, from_edges, from_upper_mask


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def eig_top(g: Graph, signless: bool = False) -> float:
    """Largest eigenvalue of A or A + D by a dense symmetric solver."""
    a = g.adjacency_matrix().astype(float)
    if signless:
        a = a + np.diag(a.sum(axis=1))
    return float(np.linalg.eigvalsh(a)[-1]) if g.n else 0.0


def brute_longest_path(g: Graph) -> int:
    h = to_nx(g)
    best = 1 if g.n else 0
    for r in range(2, g.n + 1):
        for perm in itertools.permutations(range(g.n), r):
            if perm[0] < perm[-1] and all(h.has_edge(a, b) for a, b in zip(perm, perm[1:])):
                best = r
                break
    return best


def brute_circumference(g: Graph) -> int:
    cycles = nx.simple_cycles(to_nx(g))
    return max((len(c) for c in cycles if len(c) >= 3), default=0)


def brute_matching(g: Graph) -> int:
    return len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return from_upper_mask(n, mask)


@st.composite
def graphs_with_perm(draw, min_n: int = 1, max_n: int = 7):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    return from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
