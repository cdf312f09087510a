"""Deterministic evaluation of independent partition-count terms.

Results are combined by exact integer addition in input order, so the total
is bit-identical at any worker count; the pool is only engaged when there is
enough work to amortise it.
"""

from __future__ import annotations

import os
from typing import Callable, List, Sequence

_MIN_PARALLEL_ITEMS = 24


def effective_workers(threads: int | None) -> int:
    if threads is None:
        return os.cpu_count() or 1
    if threads < 1:
        raise ValueError("thread count must be >= 1")
    return threads


def map_counts(fn: Callable, items: Sequence, threads: int | None = None) -> List:
    """Map fn over items, in order, optionally on a process pool."""
    workers = effective_workers(threads)
    if workers <= 1 or len(items) < _MIN_PARALLEL_ITEMS:
        return [fn(x) for x in items]
    try:
        import multiprocessing

        ctx = multiprocessing.get_context("fork")
    except (ImportError, ValueError):
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * workers))
    with ctx.Pool(min(workers, len(items))) as pool:
        return pool.map(fn, items, chunksize=chunk)
