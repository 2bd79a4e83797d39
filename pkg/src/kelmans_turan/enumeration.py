"""Exhaustive scans over all graphs on a few vertices.

Two streams are available.  The labeled stream visits every upper-triangular
bitmask.  The representative stream keeps only labelings whose degree
sequence is non-increasing in vertex order; every isomorphism class has at
least one such labeling, so maxima of isomorphism-invariant parameters (and
their maximisers, up to isomorphism) are the same on both streams.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import _kernels as K
from .graph import Graph, canonical_form, from_upper_mask
from .parameters import DEFAULT_TOL, REL_TOL, ParameterKind
from .structure import Connectivity, Pattern

MAX_ENUM_N = 8
LONG_RUN_N = 8
COUNT_MAX_N = 7
CHUNKS = 64
JOBS_ENV = "KELMANS_TURAN_JOBS"


class BudgetError(ValueError):
    """Requested scan exceeds the exhaustive-enumeration budget."""


class EmptyStreamError(ValueError):
    """No graph passes the connectivity class and filter."""


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    connectivity: Connectivity = Connectivity.ANY
    filter: Pattern | None = None
    long_run: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ENUM_N:
            raise BudgetError(f"exhaustive scans are limited to 1 <= n <= {MAX_ENUM_N}, got {self.n}")
        object.__setattr__(self, "connectivity", Connectivity(self.connectivity))

    @property
    def bits(self) -> int:
        return self.n * (self.n - 1) // 2


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _chunks(n: int) -> list[tuple[int, int]]:
    total = 1 << (n * (n - 1) // 2)
    parts = min(CHUNKS, total)
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


@lru_cache(maxsize=None)
def _chunk_table(n: int, lo: int, hi: int, klass: int, reps: bool) -> tuple[np.ndarray, np.ndarray]:
    if reps:
        masks = K.sorted_degree_masks(n, lo, hi, klass)
    else:
        masks = K.labeled_masks(n, lo, hi, klass)
    return masks, K.structural_table(masks, n)


def _admitted(table: np.ndarray, pattern: Pattern | None) -> np.ndarray:
    if pattern is None:
        return np.ones(table.shape[0], bool)
    return table[:, pattern.column] < pattern.size


def _filtered(spec: EnumerationSpec, lo: int, hi: int, reps: bool) -> np.ndarray:
    masks, table = _chunk_table(spec.n, lo, hi, spec.connectivity.code, reps)
    return masks[_admitted(table, spec.filter)]


def _check_labeled_budget(spec: EnumerationSpec) -> None:
    if spec.n >= LONG_RUN_N and not spec.long_run:
        raise BudgetError(f"the labeled stream at n={spec.n} needs long_run=True")


def stream_masks(spec: EnumerationSpec, representatives: bool = False) -> Iterator[int]:
    if not representatives:
        _check_labeled_budget(spec)
    for lo, hi in _chunks(spec.n):
        if representatives:
            yield from (int(m) for m in _filtered(spec, lo, hi, True))
        else:
            # labeled chunks are not cached, they can be large
            masks = K.labeled_masks(spec.n, lo, hi, spec.connectivity.code)
            if spec.filter is not None:
                masks = masks[_admitted(K.structural_table(masks, spec.n), spec.filter)]
            yield from (int(m) for m in masks)


def stream_labeled(spec: EnumerationSpec) -> Iterator[Graph]:
    """Every labeled graph passing the spec, in increasing bitmask order."""
    for m in stream_masks(spec):
        yield from_upper_mask(spec.n, m)


def stream_representatives(spec: EnumerationSpec) -> Iterator[Graph]:
    """Degree-sorted labelings passing the spec; covers every isomorphism class."""
    for m in stream_masks(spec, representatives=True):
        yield from_upper_mask(spec.n, m)


def labeled_mask_array(n: int, connectivity: Connectivity = Connectivity.ANY) -> np.ndarray:
    """All labeled masks of one connectivity class, as an array (n <= 7)."""
    if n > COUNT_MAX_N:
        raise BudgetError(f"labeled mask arrays are limited to n <= {COUNT_MAX_N}")
    return K.labeled_masks(n, 0, 1 << (n * (n - 1) // 2), Connectivity(connectivity).code)


def representative_mask_array(spec: EnumerationSpec) -> np.ndarray:
    parts = [_filtered(spec, lo, hi, True) for lo, hi in _chunks(spec.n)]
    return np.concatenate(parts) if parts else np.zeros(0, np.int64)


def count_unlabeled(n: int, connectivity: Connectivity = Connectivity.ANY, filter: Pattern | None = None) -> int:
    """Number of isomorphism classes, by canonical deduplication of the representatives."""
    if n > COUNT_MAX_N:
        raise BudgetError(f"count_unlabeled is limited to n <= {COUNT_MAX_N}")
    spec = EnumerationSpec(n, connectivity, filter)
    return len({canonical_form(g) for g in stream_representatives(spec)})


@dataclass
class ArgmaxResult:
    value: float | int
    maximizers: list[Graph]
    scanned: int
    admitted: int
    representatives: bool = True
    candidates: list[int] = field(default_factory=list, repr=False)


def _close(a: float, b: float, exact: bool) -> bool:
    if exact:
        return a == b
    return abs(a - b) <= REL_TOL * max(1.0, abs(a), abs(b))


def _scan_chunk(args) -> tuple[float, list[tuple[int, float]], int, int]:
    n, lo, hi, klass, pattern, code, arg, exact, reps, tol = args
    masks, table = _chunk_table(n, lo, hi, klass, reps)
    keep = masks[_admitted(table, pattern)]
    if keep.shape[0] == 0:
        return -np.inf, [], int(masks.shape[0]), 0
    values = K.param_column(keep, n, code, arg, tol)
    best = float(values.max())
    near = [(int(m), float(v)) for m, v in zip(keep, values) if _close(float(v), best, exact)]
    return best, near, int(masks.shape[0]), int(keep.shape[0])


def _merge(parts, exact: bool) -> tuple[float, list[int]]:
    best = max(p[0] for p in parts)
    keep = [m for p in parts for m, v in p[1] if _close(v, best, exact)]
    return best, keep


def argmax_over(
    spec: EnumerationSpec,
    kind: ParameterKind,
    jobs: int | None = None,
    representatives: bool = True,
    tol: float = DEFAULT_TOL,
) -> ArgmaxResult:
    """Maximum of ``kind`` over the stream and every maximiser up to isomorphism.

    The mask range is cut into fixed chunks; each chunk reports its local
    maximum and the masks within tolerance of it, and chunk reports merge in
    chunk order, so the result does not depend on ``jobs``.
    """
    if not representatives:
        _check_labeled_budget(spec)
    jobs = default_jobs() if jobs is None else max(1, jobs)
    pattern = spec.filter
    tasks = [
        (spec.n, lo, hi, spec.connectivity.code, pattern, kind.code, kind.kernel_arg, kind.exact, representatives, tol)
        for lo, hi in _chunks(spec.n)
    ]
    if jobs == 1:
        parts = [_scan_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_chunk, tasks))
    admitted = sum(p[3] for p in parts)
    if admitted == 0:
        raise EmptyStreamError(f"no graph on {spec.n} vertices passes {spec.connectivity.value} / {pattern}")
    best, keep = _merge(parts, kind.exact)
    seen = {}
    for m in keep:
        g = from_upper_mask(spec.n, m)
        seen.setdefault(canonical_form(g), g)
    maximizers = [seen[c] for c in sorted(seen)]
    value = int(round(best)) if kind.exact else best
    return ArgmaxResult(value, maximizers, sum(p[2] for p in parts), admitted, representatives, keep)
