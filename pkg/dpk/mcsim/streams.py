# dpk/mcsim/streams.py
"""
Reproducible parallel random streams.

Paths are cut into fixed-size blocks; block b of a run with seed s draws from
Philox keyed by SeedSequence([s, b]). Results depend only on (seed, block size),
never on how many threads ran the blocks.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, TypeVar

import numpy as np
from tqdm import tqdm

from ..config import get_settings

logger = logging.getLogger(__name__)

R = TypeVar("R")


def block_generator(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), int(block)])))


def block_sizes(total: int, block_paths: int = 0) -> List[int]:
    size = block_paths or get_settings().BLOCK_PATHS
    full, rest = divmod(int(total), size)
    return [size] * full + ([rest] if rest else [])


def run_blocks(
    work: Callable[[np.random.Generator, int, int], R],
    total: int,
    seed: int,
    desc: str = "paths",
) -> List[R]:
    """work(rng, count, block_index) over every block, returned in block order."""
    settings = get_settings()
    sizes = block_sizes(total)

    def one(block: int) -> R:
        return work(block_generator(seed, block), sizes[block], block)

    logger.debug("%s: %d paths in %d blocks on %d threads", desc, total, len(sizes), settings.THREADS)
    with ThreadPoolExecutor(max_workers=settings.THREADS) as pool:
        results = pool.map(one, range(len(sizes)))
        return list(tqdm(results, total=len(sizes), desc=desc, disable=not settings.PROGRESS))
