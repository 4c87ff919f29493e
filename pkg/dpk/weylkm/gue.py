# dpk/weylkm/gue.py
"""
GUE entrance law and the two Selberg-type integrals over the Weyl chamber.

    C_N  = (2 pi)^{N/2} prod_{j=1}^N Gamma(j)
    C'_N = 2^{N/2} prod_{j=1}^N Gamma(j/2)

    int_{W_N} e^{-|x|^2/2t} h_N(x)   dx = C'_N t^{N(N+1)/4}
    int_{W_N} e^{-|x|^2/2t} h_N(x)^2 dx = C_N  t^{N^2/2}
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.special import gammaln

from ..errors import DomainError, UnsupportedSizeError
from ..quadrature import dblquad, quad
from .chamber import PointsLike, log_abs_vandermonde, require_chamber


@dataclass(frozen=True)
class GueParams:
    N: int
    variance: float

    def __post_init__(self) -> None:
        if self.N < 1:
            raise DomainError("N must be positive")
        if self.variance <= 0:
            raise DomainError("GUE variance must be positive")


def log_gue_constant(N: int) -> float:
    return 0.5 * N * math.log(2.0 * math.pi) + float(np.sum(gammaln(np.arange(1, N + 1))))


def gue_constant(N: int) -> float:
    """C_N."""
    return math.exp(log_gue_constant(N))


def log_selberg_constant(N: int) -> float:
    return 0.5 * N * math.log(2.0) + float(np.sum(gammaln(0.5 * np.arange(1, N + 1))))


def selberg_constant(N: int) -> float:
    """C'_N."""
    return math.exp(log_selberg_constant(N))


def gue_density(params: GueParams, x: PointsLike) -> float:
    pts = require_chamber(x, closed=True)
    if pts.size != params.N:
        raise DomainError(f"expected {params.N} points, got {pts.size}")
    log_h = log_abs_vandermonde(pts)
    if not np.isfinite(log_h):
        return 0.0
    t0 = params.variance
    N = params.N
    log_value = (
        -log_gue_constant(N)
        - 0.5 * N * N * math.log(t0)
        - float(np.dot(pts, pts)) / (2.0 * t0)
        + 2.0 * log_h
    )
    return math.exp(log_value)


# Chamber integration of translation-structured integrands

def _gap_points(gaps) -> np.ndarray:
    return np.concatenate(([0.0], np.cumsum(gaps)))


def _chamber_gaussian_integral(N: int, t: float, power: int) -> float:
    """
    int_{W_N} e^{-|x|^2/2t} h(x)^power dx.

    Writing x = u + c(g) with c_1 = 0 and gaps g > 0, the u-integral is Gaussian
    and done in closed form; h depends on the gaps only.
    """
    if N == 1:
        return math.sqrt(2.0 * math.pi * t)

    def weight(gaps) -> float:
        c = _gap_points(gaps)
        spread = float(np.dot(c, c) - c.sum() ** 2 / N)
        diffs = c[None, :] - c[:, None]
        h = float(np.prod(diffs[np.triu_indices(N, k=1)]))
        return math.sqrt(2.0 * math.pi * t / N) * math.exp(-spread / (2.0 * t)) * h ** power

    reach = 14.0 * math.sqrt(t) * (1.0 + 0.25 * power)
    if N == 2:
        return quad(lambda g: weight([g]), 0.0, reach)
    if N == 3:
        return dblquad(lambda g1, g2: weight([g1, g2]), 0.0, reach, lambda _: 0.0, lambda _: reach)
    raise UnsupportedSizeError(f"chamber quadrature supports N <= 3, got {N}")


class SelbergCheck(NamedTuple):
    i1: float
    i2: float
    ref1: float
    ref2: float


def selberg_check(N: int, t: float) -> SelbergCheck:
    if N > 3:
        raise UnsupportedSizeError(f"selberg_check supports N <= 3, got {N}")
    if N < 1 or t <= 0:
        raise DomainError("selberg_check needs N >= 1 and t > 0")
    i1 = _chamber_gaussian_integral(N, t, 1)
    i2 = _chamber_gaussian_integral(N, t, 2)
    ref1 = selberg_constant(N) * t ** (N * (N + 1) / 4.0)
    ref2 = gue_constant(N) * t ** (N * N / 2.0)
    return SelbergCheck(i1, i2, ref1, ref2)
