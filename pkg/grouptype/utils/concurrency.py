"""
Run independent blocking jobs (group enumerations) on worker threads.
"""

import asyncio
import logging
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger("GroupType.Concurrency")

T = TypeVar("T")


async def gather_jobs(jobs: Sequence[Callable[[], T]], max_workers: int = 4) -> List[T]:
    """Results come back in job order regardless of completion order."""
    semaphore = asyncio.Semaphore(max(1, max_workers))

    async def run(job: Callable[[], T]) -> T:
        async with semaphore:
            return await asyncio.to_thread(job)

    return list(await asyncio.gather(*(run(job) for job in jobs)))


def run_jobs(jobs: Sequence[Callable[[], T]], max_workers: int = 4) -> List[T]:
    if max_workers <= 1 or len(jobs) <= 1:
        return [job() for job in jobs]
    logger.debug(f"Running {len(jobs)} jobs on up to {max_workers} threads")
    return asyncio.run(gather_jobs(jobs, max_workers))
