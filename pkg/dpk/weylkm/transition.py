# dpk/weylkm/transition.py
import math
from typing import NamedTuple

import numpy as np

from ..errors import ArgumentError, DomainError
from ..linalg import det_lu
from ..specfun import heat_kernel
from .chamber import PointsLike, as_points, require_chamber, vandermonde
from .gue import log_gue_constant


def _pair(y: PointsLike, x: PointsLike):
    ya, xa = as_points(y), as_points(x)
    if ya.size != xa.size:
        raise ArgumentError(f"size mismatch: |y|={ya.size}, |x|={xa.size}")
    return ya, xa


def km_matrix(t: float, y: PointsLike, x: PointsLike) -> np.ndarray:
    ya, xa = _pair(y, x)
    return heat_kernel(t, ya[:, None], xa[None, :])


def km_density(t: float, y: PointsLike, x: PointsLike) -> float:
    """Karlin-McGregor determinant f_N(t, y|x) = det[p(t, y_j | x_k)]."""
    return det_lu(km_matrix(t, y, x))


def km_asymptotic(t: float, y: PointsLike, x: PointsLike) -> float:
    """Leading behaviour of f_N(t, y|x) as |x|/sqrt(t) -> 0."""
    ya, xa = _pair(y, x)
    N = ya.size
    log_pref = -log_gue_constant(N) - 0.5 * N * N * math.log(t) - float(ya @ ya) / (2.0 * t)
    return math.exp(log_pref) * vandermonde(ya) * vandermonde(xa)


def noncolliding_transition(dt: float, y: PointsLike, x: PointsLike) -> float:
    """h-transform p_N(dt, y|x) = h(y) f_N(dt, y|x) / h(x)."""
    xa = require_chamber(x, closed=True)
    hx = vandermonde(xa)
    if hx == 0.0:
        raise DomainError(
            "start on the chamber boundary (h_N(x) = 0): the entrance law from such a "
            "point is given by gue_density"
        )
    ya = require_chamber(y, closed=True)
    return vandermonde(ya) * km_density(dt, ya, xa) / hx


def nu_t(t: float, y: PointsLike, x: PointsLike, t0: float = 0.0) -> float:
    """
    Density at time t of the noncolliding process started from the point mass
    at x in the open chamber at time t0. For large t - t0 it approaches
    gue_density(GueParams(N, t - t0), y).
    """
    if not t > t0:
        raise ArgumentError(f"need t > t0, got t={t}, t0={t0}")
    return noncolliding_transition(t - t0, y, x)


def finite_t_transition(
    T: float,
    t0: float,
    t: float,
    y: PointsLike,
    x: PointsLike,
    method: str = "quadrature",
    **mc_options,
) -> float:
    """
    Transition density of N Brownian motions conditioned not to collide up to T:

        g_{N,T}(t0, x; t, y) = N_N(T - t, y) f_N(t - t0, y|x) / N_N(T - t0, x)
    """
    from .survival import survival

    if not (0.0 < t0 <= t < T):
        raise ArgumentError(f"need 0 < t0 <= t < T, got t0={t0}, t={t}, T={T}")
    if t == t0:
        raise DomainError("zero elapsed time: the transition kernel is a point mass")
    xa = require_chamber(x)
    ya = require_chamber(y)
    f = km_density(t - t0, ya, xa)
    if xa.size == 1:
        return f
    ahead = survival(T - t, ya, method=method, **mc_options)
    start = survival(T - t0, xa, method=method, **mc_options)
    return ahead * f / start


class AbsorbedDensity(NamedTuple):
    p_abs: float
    p_bessel3: float


def abs_bm_1d(t: float, y: float, x: float) -> AbsorbedDensity:
    """
    BM on (0, inf) killed at 0, and its h-transform by h(x) = x (the 3D Bessel
    process): p_abs = p(t,y|x) - p(t,y|-x), p_bessel3 = (y/x) p_abs.
    """
    if x <= 0 or y <= 0:
        raise DomainError("absorbed BM needs x > 0 and y > 0")
    p_abs = heat_kernel(t, y, x) - heat_kernel(t, y, -x)
    return AbsorbedDensity(p_abs, y / x * p_abs)
