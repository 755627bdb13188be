"""
Runtime configuration for colorful-tverberg.

Values come from environment variables (a local .env file is honoured).
Every module imports the constants from here instead of calling os.getenv itself.
"""

import atexit
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from dotenv import load_dotenv

load_dotenv()

T = TypeVar("T")
R = TypeVar("R")

WORKERS = max(1, int(os.getenv("TVERBERG_WORKERS", "1")))
DEBUG = os.getenv("TVERBERG_DEBUG", "false").lower() in ("1", "true", "yes")
GD_VERTEX_CAP = int(os.getenv("GD_VERTEX_CAP", "100000"))
SGP_POINT_CAP = int(os.getenv("SGP_POINT_CAP", "8"))
SEARCH_LETTER_CAP = int(os.getenv("SEARCH_LETTER_CAP", "6"))


def log(tag: str, message: str) -> None:
    """Print a `[TAG] message` diagnostic to stderr when TVERBERG_DEBUG is on."""
    if DEBUG:
        print(f"[{tag}] {message}", file=sys.stderr)


_pool: Optional[ProcessPoolExecutor] = None
_pool_workers = 0


def worker_pool() -> ProcessPoolExecutor:
    """The shared process pool, rebuilt only when WORKERS changes."""
    global _pool, _pool_workers
    if _pool is None or _pool_workers != WORKERS:
        shutdown_pool()
        log("CONFIG", f"starting a pool of {WORKERS} workers")
        _pool = ProcessPoolExecutor(max_workers=WORKERS)
        _pool_workers = WORKERS
    return _pool


def shutdown_pool() -> None:
    global _pool
    if _pool is not None:
        _pool.shutdown()
        _pool = None


atexit.register(shutdown_pool)


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """Map `fn` over `items`, in input order, using WORKERS processes.

    `fn` must be a module-level function so it can be pickled.
    """
    items = list(items)
    if WORKERS <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    return list(worker_pool().map(fn, items))


def describe() -> dict:
    return {
        "workers": WORKERS,
        "debug": DEBUG,
        "gd_vertex_cap": GD_VERTEX_CAP,
        "sgp_point_cap": SGP_POINT_CAP,
        "search_letter_cap": SEARCH_LETTER_CAP,
    }


log("CONFIG", f"Workers: {WORKERS}")
log("CONFIG", f"G_d vertex cap: {GD_VERTEX_CAP}")
log("CONFIG", f"Strong general position point cap: {SGP_POINT_CAP}")
