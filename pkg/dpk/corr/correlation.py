# dpk/corr/correlation.py
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from ..errors import ArgumentError, NumericalConsistencyError
from ..kernels import HermiteFinite, KernelKind, kernel_matrix
from ..linalg import slogdet_lu

logger = logging.getLogger(__name__)

NEGATIVE_SLACK = 1e-10


@dataclass(frozen=True)
class CorrelationBlock:
    time: float
    points: Tuple[float, ...]


@dataclass(frozen=True)
class CorrelationRequest:
    """Points grouped by strictly increasing observation times."""

    kind: KernelKind
    blocks: Tuple[CorrelationBlock, ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ArgumentError("correlation request needs at least one block")
        times = [b.time for b in self.blocks]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ArgumentError(f"block times must be strictly increasing, got {times}")
        for block in self.blocks:
            if not block.points:
                raise ArgumentError(f"block at t={block.time} has no points")
            if isinstance(self.kind, HermiteFinite):
                if block.time <= 0:
                    raise ArgumentError(f"HermiteFinite needs positive times, got {block.time}")
                if len(block.points) > self.kind.N:
                    raise ArgumentError(
                        f"block at t={block.time} has {len(block.points)} points but N={self.kind.N}"
                    )

    @classmethod
    def of(cls, kind: KernelKind, blocks: Iterable[Tuple[float, Sequence[float]]]) -> "CorrelationRequest":
        return cls(kind, tuple(CorrelationBlock(float(t), tuple(float(x) for x in pts)) for t, pts in blocks))

    @property
    def size(self) -> int:
        return sum(len(b.points) for b in self.blocks)


def correlation_matrix(request: CorrelationRequest) -> np.ndarray:
    """Block matrix with entries K(t_m, x_j^(m); t_n, x_k^(n))."""
    rows = []
    for a in request.blocks:
        rows.append([kernel_matrix(request.kind, a.time, a.points, b.time, b.points) for b in request.blocks])
    return np.block(rows)


def multitime_correlation(request: CorrelationRequest) -> float:
    sign, logabs = slogdet_lu(correlation_matrix(request))
    value = 0.0 if sign == 0.0 else sign * math.exp(logabs)
    if value < -NEGATIVE_SLACK:
        raise NumericalConsistencyError(f"correlation determinant {value:.3e} is negative")
    if value < 0.0:
        logger.debug("clamped correlation %.2e to 0", value)
        return 0.0
    return value
