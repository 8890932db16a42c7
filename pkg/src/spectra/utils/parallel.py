from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_in_order(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """Apply ``fn`` to every item, results in input order.

    With ``workers > 1`` the calls run in a process pool, so ``fn`` and the
    items must be picklable (module-level functions or ``functools.partial``).
    """
    work = list(items)
    if workers <= 1 or len(work) <= 1:
        return [fn(item) for item in work]
    logger.debug("Running %d task(s) on %d worker process(es)", len(work), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, work))
