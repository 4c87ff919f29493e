# dpk/kernels/hermite.py
"""
Extended Hermite kernel of N noncolliding Brownian motions started at the origin.

Entries are returned in the determinant-invariant gauge: the Gaussian factors
e^{-x^2/4t_a + y^2/4t_b} are dropped, which leaves

    t_a <= t_b:  (2 t_a)^{-1/2}  sum_{k<N}  r^{(k - shift)/2} phi_k(xi) phi_k(eta)
    t_a >  t_b: -(2 t_a)^{-1/2}  sum_{k>=N} r^{(k - shift)/2} phi_k(xi) phi_k(eta)

with r = t_b / t_a, xi = x_a / sqrt(2 t_a), eta = x_b / sqrt(2 t_b). `shift` is
a further gauge exponent used by the edge scaling.
"""

import logging
import math

import numpy as np

from ..config import get_settings
from ..errors import DomainError, NumericalConsistencyError, PrecisionError
from ..specfun import HermiteStream, hermite_phi_table

logger = logging.getLogger(__name__)

_TAIL_BLOCK = 256
_TAIL_FLOOR = 1e-15
_RATIO_CEILING = 1.0 - 1e-12


def _zeta(t: float, xs) -> np.ndarray:
    if t <= 0:
        raise DomainError(f"Hermite kernel times must be positive, got {t}")
    return np.atleast_1d(np.asarray(xs, dtype=float)) / math.sqrt(2.0 * t)


def _weights(degrees: np.ndarray, log_r: float, shift: float) -> np.ndarray:
    return np.exp(0.5 * (degrees - shift) * log_r)


def _finite_sum(N: int, t_a: float, za: np.ndarray, t_b: float, zb: np.ndarray, shift: float) -> np.ndarray:
    A = hermite_phi_table(N - 1, za)
    B = hermite_phi_table(N - 1, zb)
    w = _weights(np.arange(N, dtype=float), math.log(t_b / t_a), shift)
    return (A * w[:, None]).T @ B / math.sqrt(2.0 * t_a)


def _tail_sum(N: int, t_a: float, za: np.ndarray, t_b: float, zb: np.ndarray, shift: float) -> np.ndarray:
    """sum_{k>=N}, streamed until the geometric bound certifies every entry."""
    settings = get_settings()
    r = t_b / t_a
    if r >= 1.0:
        raise NumericalConsistencyError(f"tail branch needs t_b < t_a, got ratio {r}")
    if r >= _RATIO_CEILING:
        raise PrecisionError(f"time ratio {r} too close to 1 for the tail sum", achieved=math.inf)
    log_r = math.log(r)
    pref = 1.0 / math.sqrt(2.0 * t_a)
    # |phi_k| <= pi^{-1/4}, so the omitted tail is bounded by a geometric series
    geometric = pref / (math.sqrt(math.pi) * (1.0 - math.sqrt(r)))

    sa, sb = HermiteStream(za), HermiteStream(zb)
    sa.skip_to(N)
    sb.skip_to(N)
    total = np.zeros((za.size, zb.size))
    k = N
    bound = math.inf
    while k - N < settings.HERMITE_TAIL_MAX_TERMS:
        A, B = sa.take(_TAIL_BLOCK), sb.take(_TAIL_BLOCK)
        w = _weights(np.arange(k, k + _TAIL_BLOCK, dtype=float), log_r, shift)
        total += (A * w[:, None]).T @ B
        k += _TAIL_BLOCK
        bound = geometric * math.exp(0.5 * (k - shift) * log_r)
        scaled = pref * np.abs(total)
        if np.all((bound <= settings.HERMITE_TAIL_TOL * scaled) | (bound <= _TAIL_FLOOR)):
            return -pref * total
    achieved = float(np.max(bound / np.maximum(pref * np.abs(total), _TAIL_FLOOR)))
    raise PrecisionError(
        f"Hermite tail not certified after {k - N} terms (relative bound {achieved:.2e})",
        achieved=achieved,
    )


# Public API

def hermite_kernel_matrix(
    N: int,
    t_a: float,
    xs_a,
    t_b: float,
    xs_b,
    branch: str = "auto",
    gauge_shift: float = 0.0,
) -> np.ndarray:
    """K_N(t_a, x_i; t_b, y_j) for all pairs, shape (len(xs_a), len(xs_b))."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    za, zb = _zeta(t_a, xs_a), _zeta(t_b, xs_b)
    if branch == "auto":
        branch = "finite" if t_a <= t_b else "tail"
    if branch == "finite":
        return _finite_sum(N, t_a, za, t_b, zb, gauge_shift)
    if branch == "tail":
        return _tail_sum(N, t_a, za, t_b, zb, gauge_shift)
    raise DomainError(f"unknown Hermite kernel branch {branch!r}")


def _neighbours(N: int, zeta: np.ndarray):
    stream = HermiteStream(zeta)
    stream.skip_to(N - 1)
    lower, mid, upper = stream.take(3)
    return lower, mid, upper


def hermite_equal_time(N: int, t: float, x, y):
    """Equal-time kernel by Christoffel–Darboux, with its analytic diagonal."""
    if t <= 0:
        raise DomainError(f"time must be positive, got {t}")
    xa, ya = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    scale = math.sqrt(2.0 * t)
    xi, eta = xa / scale, ya / scale
    px_lo, px_n, px_hi = _neighbours(N, xi)
    py_lo, py_n, _ = _neighbours(N, eta)

    diagonal = np.abs(xi - eta) < 1e-12 * (1.0 + np.abs(xi))
    with np.errstate(divide="ignore", invalid="ignore"):
        off = math.sqrt(N / 2.0) * (px_n * py_lo - px_lo * py_n) / (xi - eta) / scale
    diag = (N * px_n * px_n - math.sqrt(N * (N + 1.0)) * px_lo * px_hi) / scale
    out = np.where(diagonal, diag, off)
    return float(out) if out.ndim == 0 else out


def density_rho_n(N: int, t: float, x):
    rho = np.asarray(hermite_equal_time(N, t, x, x), dtype=float)
    if np.any(rho < 0.0):
        logger.warning("clamped density noise %.2e to 0 (N=%d, t=%g)", float(rho.min()), N, t)
        rho = np.maximum(rho, 0.0)
    return float(rho) if rho.ndim == 0 else rho


def semicircle(N: int, t: float, x):
    if t <= 0:
        raise DomainError(f"time must be positive, got {t}")
    xa = np.asarray(x, dtype=float)
    inside = 2.0 * N - xa * xa / (2.0 * t)
    out = np.sqrt(np.maximum(inside, 0.0)) / (math.pi * math.sqrt(2.0 * t))
    return float(out) if out.ndim == 0 else out


# Heat-kernel companion of the N-independent Hermite operator

def hermite_delta_t(t: float, x, y):
    """Mehler closed form; equals half the sum of phi_n(x/2) phi_n(y/2) e^{-nt/2}."""
    if t <= 0:
        raise DomainError(f"time must be positive, got {t}")
    xa, ya = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    pref = 0.5 / math.sqrt(math.pi * -math.expm1(-t))
    out = pref * np.exp(
        -(xa - ya) ** 2 / (8.0 * math.tanh(0.5 * t)) - xa * ya * math.tanh(0.25 * t) / 4.0
    )
    return float(out) if out.ndim == 0 else out


def hermite_delta_t_spectral(t: float, x, y, terms: int = 0):
    if t <= 0:
        raise DomainError(f"time must be positive, got {t}")
    if terms <= 0:
        terms = int(80.0 / t) + 40
    xa, ya = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    A = hermite_phi_table(terms - 1, 0.5 * xa)
    B = hermite_phi_table(terms - 1, 0.5 * ya)
    w = np.exp(-0.5 * t * np.arange(terms, dtype=float))
    out = 0.5 * np.tensordot(w, A * B, axes=1)
    return float(out) if out.ndim == 0 else out
