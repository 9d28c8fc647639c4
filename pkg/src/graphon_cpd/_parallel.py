"""Thread-pool helpers. GRAPHON_CPD_THREADS caps worker count (0 = auto)."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count() -> int:
    raw = os.environ.get("GRAPHON_CPD_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"GRAPHON_CPD_THREADS must be an integer, got {raw!r}")
    if value < 0:
        raise ValueError("GRAPHON_CPD_THREADS must be >= 0")
    return value if value > 0 else (os.cpu_count() or 1)


def ordered_map(fn, items):
    """Map fn over items with the configured worker count, preserving order.

    Results are assembled by index, so the output is identical for any
    worker count as long as fn is pure.
    """
    items = list(items)
    workers = min(thread_count(), max(1, len(items)))
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
