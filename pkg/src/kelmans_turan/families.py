"""Extremal graphs W_{n,k,s}, S_{n,k}, S+_{n,k}, the three families and their extremal values."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, floor, sqrt

from .graph import (
    MAX_N,
    Graph,
    GraphError,
    canonical_form,
    complete,
    disjoint_union,
    empty,
    from_edges,
)
from .parameters import REL_TOL, ParameterKind, evaluate, values_close
from .structure import Connectivity, ExtremalProblem


class HypothesisError(ValueError):
    """Parameters outside the range where a family or theorem applies."""


def w_graph(n: int, k: int, s: int) -> Graph:
    """K_s v ((n-k+s)K_1 u K_{k-2s}).

    Vertices 0..s-1 form X, the next k-2s form Y and the rest Z; X u Y is a
    clique and X is joined to the independent set Z.
    """
    if s < 1 or k - 2 * s < 0 or n < k - s:
        raise HypothesisError(f"W_{{{n},{k},{s}}} needs s >= 1, k >= 2s and n >= k - s")
    if n > MAX_N:
        raise GraphError(f"n={n} exceeds {MAX_N}")
    xy = k - s
    edges = [(u, v) for v in range(xy) for u in range(v)]
    edges += [(x, z) for x in range(s) for z in range(xy, n)]
    return from_edges(n, edges)


def w_edge_count(n: int, k: int, s: int) -> int:
    return comb(k - s, 2) + s * (n - k + s)


def s_graph(n: int, k: int) -> Graph:
    """S_{n,k} = K_k v (n-k)K_1."""
    if not 1 <= k < n:
        raise HypothesisError("S_{n,k} needs 1 <= k < n")
    return w_graph(n, 2 * k + 1, k)


def s_plus_graph(n: int, k: int) -> Graph:
    """S+_{n,k} = K_k v ((n-k-2)K_1 u K_2)."""
    if not (k >= 1 and n >= k + 2):
        raise HypothesisError("S+_{n,k} needs k >= 1 and n >= k + 2")
    return w_graph(n, 2 * k + 2, k)


def padded_clique(n: int, order: int) -> Graph:
    """K_order plus isolated vertices up to n."""
    if order >= n:
        return complete(n)
    return disjoint_union(complete(order), empty(n - order))


def lambda_s_closed(n: int, t: int) -> float:
    """Closed-form spectral radius of S_{n,t}."""
    return ((t - 1) + sqrt((t - 1) ** 2 + 4 * (n - t) * t)) / 2


def degree_power_w_closed(n: int, k: int, s: int, p: float) -> int | float:
    """Degree power of W_{n,k-1,s} from its three degree classes."""
    return (n - k + s + 1) * s**p + s * (n - 1) ** p + (k - 2 * s - 1) * (k - s - 2) ** p


def luo_clique_bound(n: int, k: int, a: int, s: int) -> int:
    """f_s(n,k,a) = C(k-a,s) + (n-k+a) C(a,s-1), the s-clique count of W_{n,k,a}."""
    return comb(k - a, s) + (n - k + a) * comb(a, s - 1)


def matching_edge_formula_as_printed(n: int, k: int) -> int:
    """max{C(2k+1,2), C(n,2) - k(n-k)}, the matching bound in the form it is usually quoted here."""
    return max(comb(2 * k + 1, 2), comb(n, 2) - k * (n - k))


def matching_extremal_edges(n: int, k: int) -> int:
    """Edge count of the better of K_{2k+1} and S_{n,k}."""
    return max(comb(2 * k + 1, 2), comb(k, 2) + k * (n - k))


def cycle_t(k: int) -> int:
    return (k - 1) // 2


def path_t(k: int) -> int:
    return k // 2 - 1


@dataclass(frozen=True)
class FamilySpec:
    which: str
    n: int
    k: int
    members: tuple[tuple[int | None, Graph], ...]

    @property
    def graphs(self) -> list[Graph]:
        return [g for _, g in self.members]


def family(which: str, n: int, k: int) -> FamilySpec:
    """Members of G1 (2-connected, no long cycle), G2 (connected, no P_k) or G3 (connected, no M_{k+1}).

    For G3 with n = 2k+1 the only member is K_n, labelled ``None``.
    """
    which = which.upper()
    if which == "G1":
        if not n >= k >= 5:
            raise HypothesisError("G1 needs n >= k >= 5")
        members = [(s, w_graph(n, k, s)) for s in range(2, cycle_t(k) + 1)]
    elif which == "G2":
        if not n >= k >= 4:
            raise HypothesisError("G2 needs n >= k >= 4")
        members = [(s, w_graph(n, k - 1, s)) for s in range(1, path_t(k) + 1)]
    elif which == "G3":
        if k < 1 or n < 2 * k + 1:
            raise HypothesisError("G3 needs k >= 1 and n >= 2k + 1")
        if n == 2 * k + 1:
            members = [(None, complete(n))]
        else:
            members = [(s, w_graph(n, 2 * k + 1, s)) for s in range(1, k + 1)]
    else:
        raise ValueError(f"unknown family {which!r}")
    return FamilySpec(which, n, k, tuple(members))


def dedupe(members: list[tuple[object, Graph]]) -> list[tuple[object, Graph]]:
    """Drop members isomorphic to an earlier one."""
    seen = set()
    out = []
    for label, g in members:
        key = canonical_form(g, max_n=MAX_N)
        if key not in seen:
            seen.add(key)
            out.append((label, g))
    return out


def _candidates(problem: ExtremalProblem, kind: ParameterKind, n: int, k: int):
    pat, conn = problem.pattern, problem.connectivity
    if pat.kind == "cycle" and conn is Connectivity.TWO_CONNECTED:
        return list(family("G1", n, pat.size).members)
    if pat.kind == "path" and conn is Connectivity.CONNECTED:
        return list(family("G2", n, pat.size).members)
    if pat.kind == "matching" and conn is Connectivity.CONNECTED:
        return list(family("G3", n, pat.size - 1).members)
    if pat.kind == "path" and conn is Connectivity.ANY and kind.tag in ("lambda", "q"):
        return list(family("G2", n, pat.size).members) + [("K", padded_clique(n, pat.size - 1))]
    if pat.kind == "matching" and conn is Connectivity.ANY and kind.tag in ("lambda", "edges"):
        kk = pat.size - 1
        return list(family("G3", n, kk).members) + [("K", padded_clique(n, 2 * kk + 1))]
    raise HypothesisError(f"no extremal result for ({problem}, {kind})")


def candidate_members(problem: ExtremalProblem, kind: ParameterKind, n: int) -> list[tuple[object, Graph]]:
    """Graphs swept by extremal_value: the family, plus a padded clique for the 'any' variants."""
    size = problem.pattern.size
    return _candidates(problem, kind, n, size - 1 if problem.pattern.kind == "matching" else size)


def extremal_value(
    problem: ExtremalProblem, kind: ParameterKind, n: int, k: int | None = None
) -> tuple[float, list[tuple[object, Graph]]]:
    """Maximum of ``kind`` over the family attached to ``problem`` and all maximisers.

    ``k`` defaults to the pattern size: the path order, the cycle length, or
    one less than the number of matching edges.
    """
    size = problem.pattern.size
    expected = size - 1 if problem.pattern.kind == "matching" else size
    if k is not None and k != expected:
        raise HypothesisError(f"k={k} does not match the pattern {problem.pattern}")
    members = _candidates(problem, kind, n, expected)
    scored = [(label, g, evaluate(g, kind)) for label, g in members]
    best = max(v for _, _, v in scored)
    winners = [(label, g) for label, g, v in scored if values_close(v, best, kind.exact, REL_TOL)]
    return best, dedupe(winners)


def family_values(which: str, n: int, k: int, kind: ParameterKind) -> list[tuple[int | None, float]]:
    return [(s, evaluate(g, kind)) for s, g in family(which, n, k).members]


def degree_power_argmax(n: int, k: int, p: float) -> Graph:
    """Degree-power maximiser among connected P_k-free graphs on n vertices.

    For n >= 2k this is W_{n,k-1,t}; below that the two ends of the family
    are compared directly, by convexity in s.
    """
    if k < 4 or p < 2 or n < k:
        raise HypothesisError("needs k >= 4, p >= 2 and n >= k")
    t = path_t(k)
    top = w_graph(n, k - 1, t)
    if n >= 2 * k or t == 1:
        return top
    low = w_graph(n, k - 1, 1)
    kind = ParameterKind.degree_power(p)
    return top if evaluate(top, kind) >= evaluate(low, kind) else low


def erdos_gallai_cycle_bound(n: int, k: int) -> int:
    return floor((k - 1) * (n - 1) / 2)
