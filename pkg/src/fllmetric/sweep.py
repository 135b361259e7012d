"""Exhaustive sweeps over Z_m^n split into contiguous lexicographic chunks.

A sweep maps a picklable top-level function over ``(start, stop)`` index
ranges and hands the partial results back in chunk order, so every reduction
built on top of it is deterministic regardless of the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

import numpy as np

from .errors import CapacityError

T = TypeVar("T")

DEFAULT_MAX_SPACE = 2**24


def check_capacity(n: int, m: int, cap: int | None = DEFAULT_MAX_SPACE, parameter: str = "m^n") -> int:
    size = m**n
    if cap is not None and size > cap:
        raise CapacityError(f"{parameter} (m={m}, n={n})", size, cap)
    return size


def word_space(n: int, m: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows are the words of Z_m^n with indices in [start, stop), lexicographic."""
    if stop is None:
        stop = m**n
    idx = np.arange(start, stop, dtype=np.int64)
    cols = [(idx // m ** (n - 1 - j)) % m for j in range(n)]
    if not cols:
        return np.zeros((stop - start, 0), dtype=np.int8)
    return np.stack(cols, axis=1).astype(np.int8)


def chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out = []
    start = 0
    for p in range(parts):
        stop = start + step + (1 if p < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def parallel_map(fn: Callable[..., T], tasks: Sequence[tuple], workers: int = 1) -> list[T]:
    """Apply ``fn(*task)`` to every task; results come back in task order."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(*task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *task) for task in tasks]
        return [f.result() for f in futures]


def sweep(fn: Callable[..., T], n: int, m: int, workers: int = 1, extra: tuple = (),
          chunks_per_worker: int = 4) -> list[T]:
    """Run ``fn(n, m, start, stop, *extra)`` over a partition of Z_m^n."""
    total = m**n
    parts = 1 if workers <= 1 else workers * chunks_per_worker
    tasks = [(n, m, start, stop, *extra) for start, stop in chunk_ranges(total, parts)]
    return parallel_map(fn, tasks, workers)
