"""Small shared helpers."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

#: environment variable read by the sampling pool
THREADS_ENV_VAR = "APPROX_THREADS"


def pool_map(fn, items):
    """Map preserving order, threaded when APPROX_THREADS asks for workers.

    Each item is processed independently, so the result (including its
    floating-point bits) does not depend on the worker count.
    """
    items = list(items)
    workers = int(os.environ.get(THREADS_ENV_VAR, "1") or "1")
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]
