"""Chunked-by-node-range helpers for the heavier per-node passes.

All arithmetic in these passes is exact integer work, so results are
byte-identical for every worker count; threads only change wall time.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

WORKERS_ENV = "NETPATRIMONY_WORKERS"
_MIN_PARALLEL_ROWS = 10_000


def resolve_workers(requested: int | None) -> int:
    """Worker count from the explicit request, else the environment, else 1."""
    if requested is not None:
        value = int(requested)
    else:
        value = int(os.environ.get(WORKERS_ENV, "1"))
    if value < 1:
        raise ValueError(f"worker count must be >= 1, got {value}")
    return value


def _range_sums(indptr, indices, values, lo, hi, out):
    start, end = indptr[lo], indptr[hi]
    local = np.empty(end - start + 1, dtype=np.int64)
    local[0] = 0
    np.cumsum(values[indices[start:end]], dtype=np.int64, out=local[1:])
    out[lo:hi] = local[indptr[lo + 1 : hi + 1] - start] - local[indptr[lo:hi] - start]


def _edge_balanced_bounds(indptr: np.ndarray, n: int, workers: int) -> np.ndarray:
    targets = np.linspace(0, indptr[-1], workers + 1)
    bounds = np.searchsorted(indptr, targets, side="left").astype(np.int64)
    bounds[0], bounds[-1] = 0, n
    return np.maximum.accumulate(bounds)


def row_sums(
    indptr: np.ndarray,
    indices: np.ndarray,
    values: np.ndarray,
    workers: int = 1,
) -> np.ndarray:
    """Per-row sums of ``values[indices]`` for a CSR layout, as int64.

    ``values`` must be an integer array; sums are exact, so the result does
    not depend on ``workers`` or chunk boundaries.
    """
    n = len(indptr) - 1
    out = np.empty(n, dtype=np.int64)
    if workers <= 1 or n < _MIN_PARALLEL_ROWS:
        _range_sums(indptr, indices, values, 0, n, out)
        return out
    bounds = _edge_balanced_bounds(indptr, n, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_range_sums, indptr, indices, values, int(lo), int(hi), out)
            for lo, hi in zip(bounds[:-1], bounds[1:])
            if hi > lo
        ]
        for fut in futures:
            fut.result()
    return out
