from functools import partial
from multiprocessing import Pool
from typing import List, Optional
import logging

from ..config.loader import load_search_config
from ..search.coincidences import (
    CoincidenceGroup, validate_grouping, group_partition, merge_partials,
)
from ..search.enumeration import prefixes

logger = logging.getLogger(__name__)


class SearchManager:
    """Runs the coincidence search over a worker pool, one partition per first index"""

    def __init__(self, workers: Optional[int] = None):
        if workers is not None and workers < 1:
            raise ValueError(f"Worker count must be positive, got {workers}")
        # SIGSURF_THREADS caps explicit requests too
        cap = load_search_config()['threads']
        self.max_workers = cap if workers is None else min(workers, cap)

    def coincidences(self, n: int, m: int, by: str = "rq") -> List[CoincidenceGroup]:
        """Same result as search.coincidences for any worker count"""
        validate_grouping(by)
        firsts = prefixes(n, m)
        workers = min(self.max_workers, len(firsts))
        worker = partial(group_partition, n, m, by=by)

        if workers <= 1:
            partials = [worker(first) for first in firsts]
        else:
            logger.info(f"G({m},{n}): {len(firsts)} partitions on {workers} workers")
            with Pool(workers) as pool:
                partials = pool.map(worker, firsts)
        return merge_partials(n, m, partials, by)

    def search(self, n_max: int, m: int, by: str = "rq", n_min: Optional[int] = None) -> List[CoincidenceGroup]:
        """Coincidence groups of G(m,n) for every n in [n_min, n_max]"""
        n_min = m + 1 if n_min is None else max(n_min, m + 1)
        groups = []
        for n in range(n_min, n_max + 1):
            found = self.coincidences(n, m, by)
            if found:
                logger.info(f"G({m},{n}): {len(found)} groups")
            groups.extend(found)
        return groups
