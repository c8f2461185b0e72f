import os
from concurrent.futures import ProcessPoolExecutor

THREADS_ENV = "PICARD_BOUNDARY_THREADS"


def default_workers():
    value = os.environ.get(THREADS_ENV)
    if value:
        n = int(value)
        if n < 1:
            raise ValueError(f"{THREADS_ENV} must be >= 1, got {n}")
        return n
    return os.cpu_count() or 1


def parallel_map(fn, items, workers=1):
    """Ordered map; a process pool only when it can help."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
