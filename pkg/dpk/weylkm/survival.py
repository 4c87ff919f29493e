# dpk/weylkm/survival.py
"""
Survival probability N_N(t, x) = int_{W_N} f_N(t, y|x) dy.

Quadrature (N <= 3): the top coordinate is integrated in closed form against
the last row of the Karlin-McGregor matrix (a Gaussian tail), and for N = 3 the
bottom coordinate likewise (a Gaussian CDF), leaving a one-dimensional
adaptive quadrature over the remaining coordinate.
"""

import logging
import math
from typing import Optional

import numpy as np
from scipy.special import erfc

from ..errors import DomainError, UnsupportedSizeError
from ..linalg import det_lu
from ..quadrature import quad
from ..specfun import heat_kernel
from .chamber import PointsLike, require_chamber, vandermonde
from .gue import log_gue_constant, log_selberg_constant

logger = logging.getLogger(__name__)

QUADRATURE_MAX_N = 3


def _upper_tail(t: float, z: np.ndarray) -> np.ndarray:
    """P(B_t > z) for a standard BM started at 0."""
    return 0.5 * erfc(z / math.sqrt(2.0 * t))


def _lower_tail(t: float, z: np.ndarray) -> np.ndarray:
    return 0.5 * erfc(-z / math.sqrt(2.0 * t))


def _integrand(t: float, x: np.ndarray, y: float) -> float:
    rows = [heat_kernel(t, y, x), _upper_tail(t, y - x)]
    if x.size == 3:
        rows.insert(0, _lower_tail(t, y - x))
    return det_lu(np.vstack(rows))


def _survival_quadrature(t: float, x: np.ndarray, tol: Optional[float]) -> float:
    reach = 12.0 * math.sqrt(t)
    lo, hi = float(x[0]) - reach, float(x[-1]) + reach
    value = quad(lambda y: _integrand(t, x, y), lo, hi, tol=tol, points=list(x))
    if value < -1e-9 or value > 1.0 + 1e-9:
        logger.warning("survival quadrature out of [0, 1]: %.3e", value)
    return min(max(value, 0.0), 1.0)


def survival(
    t: float,
    x: PointsLike,
    method: str = "quadrature",
    tol: Optional[float] = None,
    dt: float = 1e-3,
    paths: int = 100_000,
    seed: int = 0,
) -> float:
    if t <= 0:
        raise DomainError(f"survival needs t > 0, got {t}")
    pts = require_chamber(x)
    if pts.size == 1:
        return 1.0
    if method == "quadrature":
        if pts.size > QUADRATURE_MAX_N:
            raise UnsupportedSizeError(
                f"quadrature survival supports N <= {QUADRATURE_MAX_N}; use method='montecarlo'"
            )
        return _survival_quadrature(t, pts, tol)
    if method == "montecarlo":
        from ..mcsim import survival_mc

        return survival_mc(t, pts, dt=dt, paths=paths, seed=seed).estimate
    raise DomainError(f"unknown survival method {method!r}")


def survival_asymptotic(t: float, x: PointsLike) -> float:
    """Leading behaviour (C'_N / C_N) t^{-N(N-1)/4} h_N(x) as |x|/sqrt(t) -> 0."""
    pts = require_chamber(x)
    N = pts.size
    log_ratio = log_selberg_constant(N) - log_gue_constant(N) - N * (N - 1) / 4.0 * math.log(t)
    return math.exp(log_ratio) * vandermonde(pts)
