#!/usr/bin/env python3

import logging
from concurrent import futures
from typing import Callable, Iterable, List, Optional

import psutil

from configVar import int_var

log = logging.getLogger(__name__)


def default_worker_count() -> int:
    physical = psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
    return max(1, min(physical, int_var("MAX_PARALLEL_TRIALS")))


def run_in_parallel(func: Callable, items: Iterable, max_workers: Optional[int] = None) -> List:
    """ map func over items on a thread pool, results keep the order of items """
    items = list(items)
    if max_workers is None:
        max_workers = default_worker_count()
    if max_workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    log.debug(f"running {len(items)} items on {max_workers} threads")
    with futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(func, items))
