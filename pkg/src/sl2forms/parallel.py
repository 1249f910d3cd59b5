"""Order-preserving map over independent tasks, optionally in processes.

Sweep tasks here are pure functions of picklable arguments, so the only
thing parallelism may change is wall time: results come back in input
order and are aggregated identically for any worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

A = TypeVar("A")
B = TypeVar("B")


def default_jobs() -> int:
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[A], B], items: Iterable[A], jobs: int = 1) -> list[B]:
    """Map fn over items, preserving input order.

    jobs <= 1 runs in-process; otherwise a process pool is used (fn and
    items must be picklable, i.e. top-level functions / partials of them).
    """
    todo: Sequence[A] = list(items)
    if jobs <= 1 or len(todo) <= 1:
        return [fn(x) for x in todo]
    chunk = max(1, len(todo) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, todo, chunksize=chunk))
