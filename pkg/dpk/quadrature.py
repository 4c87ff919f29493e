# dpk/quadrature.py
"""
Quadrature plumbing shared by kernels, weylkm and corr.

Composite Gauss–Legendre panels are used wherever a whole matrix of integrals
shares one integration variable (kernel blocks); scipy's QUADPACK wrapper is
used for scalar integrals.
"""

import logging
import warnings
from functools import lru_cache
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate
from scipy.special import roots_legendre

from .config import get_settings
from .errors import PrecisionError

logger = logging.getLogger(__name__)


# Rules

@lru_cache(maxsize=64)
def _legendre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    x, w = roots_legendre(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_legendre(n: int, a: float, b: float) -> Tuple[np.ndarray, np.ndarray]:
    """n-point Gauss–Legendre nodes and weights mapped to [a, b]."""
    x, w = _legendre(int(n))
    half = 0.5 * (b - a)
    return half * x + 0.5 * (a + b), half * w


def composite_rule(edges: Sequence[float], order: int) -> Tuple[np.ndarray, np.ndarray]:
    edges = np.asarray(edges, dtype=float)
    x, w = _legendre(int(order))
    left, right = edges[:-1], edges[1:]
    half = 0.5 * (right - left)
    mid = 0.5 * (right + left)
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def graded_edges(a: float, b: float, width: Callable[[float], float]) -> np.ndarray:
    """Panel edges from a to b whose local width is width(left edge)."""
    edges = [a]
    pos = a
    while pos < b:
        step = max(float(width(pos)), 1e-6)
        pos = min(b, pos + step)
        edges.append(pos)
    return np.asarray(edges)


def bisect_edges(edges: np.ndarray) -> np.ndarray:
    mids = 0.5 * (edges[:-1] + edges[1:])
    out = np.empty(edges.size + mids.size)
    out[0::2] = edges
    out[1::2] = mids
    return out


# Adaptive composite integration of array-valued integrands

def integrate_panels(
    evaluate: Callable[[np.ndarray, np.ndarray], np.ndarray],
    edges: Sequence[float],
    order: int = 16,
    tol: Optional[float] = None,
    max_rounds: int = 6,
) -> Tuple[np.ndarray, float]:
    """
    Integrate an array-valued integrand over composite panels.

    evaluate(nodes, weights) must return the already-contracted integral for
    that rule (so matrix integrands can be reduced with one matmul). The rule
    is compared against the doubled order on the same panels; panels are
    bisected until the two agree to `tol`.
    """
    tol = get_settings().KERNEL_TOL * 1e-2 if tol is None else tol
    edges = np.asarray(edges, dtype=float)
    diff = np.inf
    for _ in range(max_rounds):
        coarse = np.asarray(evaluate(*composite_rule(edges, order)))
        fine = np.asarray(evaluate(*composite_rule(edges, 2 * order)))
        diff = float(np.max(np.abs(fine - coarse))) if fine.size else 0.0
        if diff <= tol:
            return fine, diff
        edges = bisect_edges(edges)
    raise PrecisionError(
        f"composite Gauss-Legendre did not reach {tol:.1e} (last difference {diff:.3e})",
        achieved=diff,
    )


# Scalar wrappers over QUADPACK

def quad(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: Optional[float] = None,
    limit: int = 400,
    points: Optional[Sequence[float]] = None,
) -> float:
    tol = get_settings().QUAD_TOL if tol is None else tol
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.quad(f, a, b, epsabs=tol, epsrel=tol, limit=limit, points=points)
    if err > 1e3 * max(tol, tol * abs(value)):
        logger.warning("quad on [%g, %g] reported error %.2e", a, b, err)
    return float(value)


def dblquad(
    f: Callable[[float, float], float],
    a: float,
    b: float,
    lo: Callable[[float], float],
    hi: Callable[[float], float],
    tol: Optional[float] = None,
) -> float:
    """scipy.integrate.dblquad with f(inner, outer) and inner bounds depending on outer."""
    tol = get_settings().QUAD_TOL if tol is None else tol
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.dblquad(f, a, b, lo, hi, epsabs=tol, epsrel=tol)
    if err > 1e3 * max(tol, tol * abs(value)):
        logger.warning("dblquad reported error %.2e", err)
    return float(value)
