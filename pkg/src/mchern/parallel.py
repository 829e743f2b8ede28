"""Order-preserving parallel map over worker processes."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional

ENV_VAR = "MCHERN_THREADS"

_default: Optional[int] = None


def set_workers(n: Optional[int]) -> None:
    """Process-wide default used when pmap gets no explicit worker count."""
    global _default
    if n is not None and n < 1:
        raise ValueError("worker count must be positive")
    _default = n


def workers(n: Optional[int] = None) -> int:
    if n is not None:
        return n
    if _default is not None:
        return _default
    env = os.environ.get(ENV_VAR)
    if env:
        try:
            val = int(env)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be a positive integer, got {env!r}") from None
        if val < 1:
            raise ValueError(f"{ENV_VAR} must be a positive integer, got {env!r}")
        return val
    return 1


def pmap(func: Callable, items: Iterable, threads: Optional[int] = None) -> list:
    """[func(x) for x in items], fanned out to worker processes when threads > 1."""
    items = list(items)
    n = workers(threads)
    if n == 1 or len(items) < 2:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(n, len(items))) as ex:
        return list(ex.map(func, items, chunksize=max(1, len(items) // (4 * n))))
