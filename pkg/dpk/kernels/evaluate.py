# dpk/kernels/evaluate.py
import math
from typing import Optional

import numpy as np

from ..errors import ArgumentError, DomainError, KernelDivisionError
from ..quadrature import quad
from .hermite import hermite_equal_time, hermite_kernel_matrix
from .kinds import Airy, Bessel, HermiteFinite, KernelKind, SpaceTimePoint, is_limit
from .spectral import delta_t, equal_time_matrix, gbar_matrix, g_matrix


def kernel_matrix(kind: KernelKind, t_a: float, xs_a, t_b: float, xs_b, branch: str = "auto") -> np.ndarray:
    """K(t_a, x_i; t_b, y_j) for every pair, in the determinant-invariant gauge."""
    if isinstance(kind, HermiteFinite):
        return hermite_kernel_matrix(kind.N, t_a, xs_a, t_b, xs_b, branch=branch)
    if not is_limit(kind):
        raise ArgumentError(f"unsupported kernel kind {kind!r}")
    if t_a == t_b:
        return equal_time_matrix(kind, xs_a, xs_b)
    if t_a < t_b:
        return g_matrix(kind, t_b - t_a, xs_a, xs_b)
    return gbar_matrix(kind, t_a - t_b, xs_a, xs_b)


def kernel_eval(kind: KernelKind, a: SpaceTimePoint, b: SpaceTimePoint) -> float:
    return float(kernel_matrix(kind, a.time, [a.position], b.time, [b.position])[0, 0])


def _equal_time(kind: KernelKind, time: Optional[float], x, y) -> np.ndarray:
    if isinstance(kind, HermiteFinite):
        xa, ya = np.atleast_1d(np.asarray(x, dtype=float)), np.atleast_1d(np.asarray(y, dtype=float))
        return np.asarray(hermite_equal_time(kind.N, time, xa[:, None], ya[None, :]))
    return equal_time_matrix(kind, x, y)


def spectral_rho(kind: KernelKind, x):
    """Density K(x, x) of a limit kernel."""
    if not is_limit(kind):
        raise ArgumentError("spectral_rho is defined for the sine, Airy and Bessel kernels only")
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    rho = np.array([equal_time_matrix(kind, [v], [v])[0, 0] for v in xa])
    return float(rho[0]) if np.ndim(x) == 0 else rho


def palm_kernel(kind: KernelKind, z: float, x: float, y: float, time: Optional[float] = None) -> float:
    """
    K^z(x, y) = [K(x, y) K(z, z) - K(x, z) K(z, y)] / K(z, z) at equal times.

    The limit kernels are stationary and ignore `time`; the finite Hermite kernel requires it.
    """
    if isinstance(kind, HermiteFinite) and time is None:
        raise ArgumentError("palm kernel of the finite Hermite kernel needs the observation time")
    pts = [x, y, z]
    k = _equal_time(kind, time, pts, pts)
    kzz = k[2, 2]
    if kzz == 0.0:
        raise KernelDivisionError(f"K(z, z) vanishes at z={z}")
    return float((k[0, 1] * kzz - k[0, 2] * k[2, 1]) / kzz)


def palm_density(kind: KernelKind, z: float, x: float, time: Optional[float] = None) -> float:
    return palm_kernel(kind, z, x, x, time=time)


# Bound on the fourth moment of delta_t

def bound1_diagnostic(kind: KernelKind, t: float, x: float) -> float:
    """int (x - y)^4 delta_t(x, y) dy over the state space."""
    if not 0.0 < t <= 1.0:
        raise DomainError(f"bound1 diagnostic needs t in (0, 1], got {t}")
    centre = x - t * t if isinstance(kind, Airy) else x
    reach = 40.0 * math.sqrt(t) + 2.0
    lo, hi = centre - reach, centre + reach
    if isinstance(kind, Bessel):
        if x <= 0:
            raise DomainError("Bessel delta_t needs x > 0")
        lo = max(lo, 0.0)

    def integrand(y: float) -> float:
        if isinstance(kind, Bessel) and y <= 0.0:
            return 0.0
        return (x - y) ** 4 * delta_t(kind, t, x, y)

    return quad(integrand, lo, hi, points=[centre])
