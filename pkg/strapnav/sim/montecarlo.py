"""Parallel seed batches."""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from strapnav.utils.logger import get_logger

logger = get_logger("sim")

T = TypeVar("T")


def run_monte_carlo(fn: Callable[[int], T], seeds: Iterable[int], max_workers: Optional[int] = None) -> List[T]:
    """Evaluate fn(seed) for every seed; results come back in seed order."""
    seeds = list(seeds)
    logger.info(f"Monte-Carlo batch: {len(seeds)} runs")
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(fn, seeds))
