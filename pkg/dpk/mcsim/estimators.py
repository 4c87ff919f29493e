# dpk/mcsim/estimators.py
import logging
import math
from itertools import permutations
from typing import Tuple

import numpy as np

from ..corr import CorrelationRequest
from ..errors import ArgumentError, DomainError
from .models import CorrelationEstimate, PathEnsemble
from .streams import block_generator

logger = logging.getLogger(__name__)

MIN_NONZERO = 30
BOOTSTRAP_ROUNDS = 200


def _block_values(snapshot: np.ndarray, points, bandwidth: float) -> np.ndarray:
    """sum over ordered tuples of distinct particles of prod_j box(X_{i_j} - x_j), per path."""
    N = snapshot.shape[1]
    box = np.stack(
        [(np.abs(snapshot - x) <= bandwidth) / (2.0 * bandwidth) for x in points],
        axis=0,
    )  # (points, paths, particles)
    total = np.zeros(snapshot.shape[0])
    for combo in permutations(range(N), len(points)):
        term = np.ones(snapshot.shape[0])
        for j, i in enumerate(combo):
            term = term * box[j, :, i]
        total += term
    return total


def empirical_correlation(
    ensemble: PathEnsemble,
    request: CorrelationRequest,
    bandwidth: float,
    seed: int = 0,
) -> CorrelationEstimate:
    """Box-kernel estimate of the multitime product density, with bootstrap stderr."""
    if bandwidth <= 0:
        raise DomainError(f"bandwidth must be positive, got {bandwidth}")
    values = np.ones(ensemble.paths)
    for block in request.blocks:
        try:
            snapshot = ensemble.at(block.time)
        except KeyError:
            raise ArgumentError(f"time {block.time} is not among the simulated times") from None
        if len(block.points) > snapshot.shape[1]:
            raise ArgumentError("block has more points than particles")
        values = values * _block_values(snapshot, block.points, bandwidth)

    estimate = float(values.mean())
    rng = block_generator(seed, 0)
    picks = rng.integers(0, values.size, size=(BOOTSTRAP_ROUNDS, values.size))
    stderr = float(values[picks].mean(axis=1).std(ddof=1))
    nonzero = int(np.count_nonzero(values))
    warning = None
    if nonzero < MIN_NONZERO:
        warning = f"only {nonzero} paths contribute at bandwidth {bandwidth:g}"
        logger.warning(warning)
    return CorrelationEstimate(estimate, stderr, int(values.size), nonzero, warning)


def gap_frequency(samples: np.ndarray, interval: Tuple[float, float]) -> Tuple[float, float]:
    """Fraction of configurations with no point in [a, b], with its binomial stderr."""
    a, b = interval
    empty = ~np.any((samples >= a) & (samples <= b), axis=1)
    p = float(empty.mean())
    return p, math.sqrt(max(p * (1.0 - p), 0.0) / empty.size)
