"""Exact longest paths, longest cycles, matching numbers and freeness predicates."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import _kernels as K
from .graph import Graph, is_2_connected, is_connected


class Connectivity(str, Enum):
    ANY = "any"
    CONNECTED = "connected"
    TWO_CONNECTED = "2-connected"

    @property
    def code(self) -> int:
        return {"any": 0, "connected": 1, "2-connected": 2}[self.value]


def satisfies_connectivity(g: Graph, connectivity: Connectivity) -> bool:
    if connectivity is Connectivity.ANY:
        return True
    if connectivity is Connectivity.CONNECTED:
        return is_connected(g)
    return is_2_connected(g)


@dataclass(frozen=True)
class Pattern:
    """Forbidden structure.

    ``kind`` is ``"path"`` (no path of order ``size``), ``"cycle"`` (no cycle
    of length at least ``size``) or ``"matching"`` (no matching with ``size``
    edges).
    """

    kind: str
    size: int

    def __post_init__(self) -> None:
        if self.kind not in ("path", "cycle", "matching"):
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.size < 1:
            raise ValueError("pattern size must be positive")

    @property
    def column(self) -> int:
        """Column of the structural scan table holding the relevant invariant."""
        return {"path": 2, "cycle": 3, "matching": 4}[self.kind]

    def admits(self, invariant: int) -> bool:
        """Whether a graph with this invariant value avoids the pattern."""
        return invariant < self.size

    def __str__(self) -> str:
        name = {"path": "P", "cycle": "C>=", "matching": "M"}[self.kind]
        return f"{name}{self.size}-free"


def path_free(k: int) -> Pattern:
    return Pattern("path", k)


def long_cycle_free(k: int) -> Pattern:
    return Pattern("cycle", k)


def matching_free(m: int) -> Pattern:
    """No matching of ``m`` edges, i.e. matching number at most ``m - 1``."""
    return Pattern("matching", m)


@dataclass(frozen=True)
class ExtremalProblem:
    pattern: Pattern
    connectivity: Connectivity = Connectivity.CONNECTED

    def __str__(self) -> str:
        return f"{self.connectivity.value} {self.pattern}"


def longest_path_order(g: Graph) -> int:
    """Number of vertices of a longest path (1 for an edgeless graph)."""
    return int(K.longest_path_order(g.rows(), g.n))


def longest_path(g: Graph) -> list[int]:
    """Vertices of one longest path, in order (first found by a DFS from low indices)."""
    target = longest_path_order(g)
    adj = g.adj

    def grow(path: list[int], used: int) -> list[int] | None:
        if len(path) == target:
            return path
        r = adj[path[-1]] & ~used
        while r:
            u = (r & -r).bit_length() - 1
            r &= r - 1
            found = grow(path + [u], used | 1 << u)
            if found:
                return found
        return None

    for s in range(g.n):
        found = grow([s], 1 << s)
        if found:
            return found
    return []


def circumference(g: Graph) -> int:
    """Length of a longest cycle; 0 when the graph is acyclic."""
    return int(K.circumference(g.rows(), g.n))


def matching_number(g: Graph) -> int:
    return int(K.matching_number(g.rows(), g.n))


def pattern_invariant(g: Graph, pattern: Pattern) -> int:
    if pattern.kind == "path":
        return longest_path_order(g)
    if pattern.kind == "cycle":
        return circumference(g)
    return matching_number(g)


def is_free(g: Graph, problem: ExtremalProblem | Pattern) -> bool:
    if isinstance(problem, Pattern):
        problem = ExtremalProblem(problem, Connectivity.ANY)
    if not satisfies_connectivity(g, problem.connectivity):
        return False
    return problem.pattern.admits(pattern_invariant(g, problem.pattern))


def invariants(g: Graph) -> dict[str, int]:
    return {
        "longest_path": longest_path_order(g),
        "circumference": circumference(g),
        "matching_number": matching_number(g),
    }
