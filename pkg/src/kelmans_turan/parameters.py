"""Feasible and weakly-feasible graph parameters with a common descriptor."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import _kernels as K
from .graph import Graph

DEFAULT_TOL = 1e-10
REL_TOL = 1e-9


@dataclass(frozen=True)
class ParameterKind:
    """Which parameter to evaluate; ``arg`` is p, s or r where relevant."""

    tag: str
    arg: float | int | None = None

    def __post_init__(self) -> None:
        if self.tag not in _TAGS:
            raise ValueError(f"unknown parameter tag {self.tag!r}")
        if self.tag == "dpow" and (self.arg is None or self.arg < 2):
            raise ValueError("degree power needs p >= 2")
        if self.tag == "cliques" and (not isinstance(self.arg, int) or self.arg < 2):
            raise ValueError("clique count needs an integer s >= 2")
        if self.tag == "stars" and (not isinstance(self.arg, int) or self.arg < 1):
            raise ValueError("star count needs an integer r >= 1")

    @classmethod
    def edges(cls) -> ParameterKind:
        return cls("edges")

    @classmethod
    def degree_power(cls, p: float) -> ParameterKind:
        return cls("dpow", int(p) if float(p).is_integer() else float(p))

    @classmethod
    def spectral(cls) -> ParameterKind:
        return cls("lambda")

    @classmethod
    def signless(cls) -> ParameterKind:
        return cls("q")

    @classmethod
    def cliques(cls, s: int) -> ParameterKind:
        return cls("cliques", s)

    @classmethod
    def stars(cls, r: int) -> ParameterKind:
        return cls("stars", r)

    @classmethod
    def parse(cls, text: str) -> ParameterKind:
        """Parse ``edges``, ``dpow:p``, ``lambda``, ``q``, ``cliques:s`` or ``stars:r``."""
        name, _, arg = text.partition(":")
        if name in ("edges", "lambda", "q"):
            if arg:
                raise ValueError(f"{name} takes no argument")
            return cls(name)
        if name == "dpow":
            return cls.degree_power(float(arg))
        if name in ("cliques", "stars"):
            return cls(name, int(arg))
        raise ValueError(f"unknown parameter kind {text!r}")

    @property
    def feasible(self) -> bool:
        """Strictly increasing under edge addition (not just weakly feasible)."""
        return self.tag in ("edges", "dpow", "lambda", "q")

    @property
    def exact(self) -> bool:
        """Integer valued, compared without tolerance."""
        if self.tag == "dpow":
            return isinstance(self.arg, int)
        return self.tag in ("edges", "cliques", "stars")

    @property
    def code(self) -> int:
        return _TAGS[self.tag]

    @property
    def kernel_arg(self) -> float:
        return float(self.arg) if self.arg is not None else 0.0

    def __str__(self) -> str:
        return self.tag if self.arg is None else f"{self.tag}:{self.arg}"


_TAGS = {
    "edges": K.EDGES,
    "dpow": K.DEGREE_POWER,
    "lambda": K.SPECTRAL,
    "q": K.SIGNLESS,
    "cliques": K.CLIQUES,
    "stars": K.STARS,
}


def degree_power(g: Graph, p: float) -> int | float:
    """Sum of d(v)**p; exact integer arithmetic for integer p."""
    if p < 1:
        raise ValueError("degree power needs p >= 1")
    if float(p).is_integer():
        return sum(d ** int(p) for d in g.degrees())
    return sum(float(d) ** p for d in g.degrees() if d)


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Largest adjacency eigenvalue by shifted power iteration per component."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return float(K.spectral_radius(g.rows(), g.n, False, tol))


def signless_laplacian_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of A + D."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return float(K.spectral_radius(g.rows(), g.n, True, tol))


def clique_count(g: Graph, s: int) -> int:
    if s < 1:
        raise ValueError("s must be at least 1")
    return int(K.clique_count(g.rows(), g.n, s))


def star_count(g: Graph, r: int) -> int:
    """Number of K_{1,r} subgraphs, sum of C(d(v), r)."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return sum(comb(d, r) for d in g.degrees())


def evaluate(g: Graph, kind: ParameterKind, tol: float = DEFAULT_TOL) -> int | float:
    if g.n == 0:
        raise ValueError("parameters are undefined on the empty graph")
    if kind.tag == "edges":
        return g.num_edges
    if kind.tag == "dpow":
        return degree_power(g, kind.arg)
    if kind.tag == "lambda":
        return spectral_radius(g, tol)
    if kind.tag == "q":
        return signless_laplacian_radius(g, tol)
    if kind.tag == "cliques":
        return clique_count(g, kind.arg)
    return star_count(g, kind.arg)


def values_close(a: float, b: float, exact: bool, rel: float = REL_TOL) -> bool:
    """Equality for exact kinds, relative closeness otherwise."""
    if exact:
        return a == b
    return abs(a - b) <= rel * max(abs(a), abs(b), 1.0)
