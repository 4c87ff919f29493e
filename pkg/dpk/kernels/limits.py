# dpk/kernels/limits.py
"""
Sine, Airy and Bessel families as matrix-valued integrals.

Each family provides, for position vectors xs and ys:

    equal_time(xs, ys)     K(t, x; t, y)
    g(tau, xs, ys)         spectral G_tau for any real tau; tau > 0 is the t < s branch
    gbar(tau, xs, ys)      -<y| e^{-tau H} (1 - P) |x>, tau > 0; the t > s branch
    heat(tau, xs, ys)      <y| e^{-tau H} |x>

Every integral shares one integration variable across the whole matrix, so it is
contracted as A diag(w) B^T on composite Gauss–Legendre panels.
"""

import logging
import math

import numpy as np

from ..errors import DomainError
from ..quadrature import graded_edges, integrate_panels
from ..specfun import airy_pair, bessel_ie, bessel_j, bessel_j_prime

logger = logging.getLogger(__name__)

# e^{-LOG_CUTOFF} ~ 1e-14 marks where exponentially damped integrands stop
LOG_CUTOFF = 32.3
_DIAGONAL_GAP = 1e-5


def _vec(xs) -> np.ndarray:
    return np.atleast_1d(np.asarray(xs, dtype=float))


def _require_positive(tau: float) -> None:
    if tau <= 0:
        raise DomainError(f"time gap must be positive, got {tau}")


# Sine family

def sine_equal_time(xs, ys) -> np.ndarray:
    d = _vec(ys)[None, :] - _vec(xs)[:, None]
    return np.sinc(d / math.pi) / math.pi


def _sine_integral(xs, ys, a: float, b: float, damping) -> np.ndarray:
    """(1/pi) int_a^b damping(u) cos(u (y - x)) du as a matrix."""
    xa, ya = _vec(xs), _vec(ys)
    reach = 1.0 + np.max(np.abs(xa)) + np.max(np.abs(ya))

    def evaluate(u, w):
        dw = w * damping(u)
        cx, sx = np.cos(np.outer(xa, u)), np.sin(np.outer(xa, u))
        cy, sy = np.cos(np.outer(ya, u)), np.sin(np.outer(ya, u))
        return ((cx * dw) @ cy.T + (sx * dw) @ sy.T) / math.pi

    edges = graded_edges(a, b, lambda u: min(0.5, 2.0 / reach))
    return integrate_panels(evaluate, edges)[0]


def sine_g(tau: float, xs, ys) -> np.ndarray:
    return _sine_integral(xs, ys, 0.0, 1.0, lambda u: np.exp(tau * u * u))


def sine_gbar(tau: float, xs, ys) -> np.ndarray:
    _require_positive(tau)
    upper = math.sqrt(1.0 + LOG_CUTOFF / tau)
    return -_sine_integral(xs, ys, 1.0, upper, lambda u: np.exp(-tau * u * u))


def sine_heat(tau: float, xs, ys) -> np.ndarray:
    _require_positive(tau)
    d = _vec(ys)[None, :] - _vec(xs)[:, None]
    return np.exp(-d * d / (4.0 * tau)) / math.sqrt(4.0 * math.pi * tau)


# Airy family

def _airy_diagonal(x: np.ndarray) -> np.ndarray:
    ai, aip = airy_pair(x)
    return np.asarray(aip) ** 2 - x * np.asarray(ai) ** 2


def airy_equal_time(xs, ys) -> np.ndarray:
    xa, ya = _vec(xs), _vec(ys)
    ax, apx = (np.asarray(v) for v in airy_pair(xa))
    ay, apy = (np.asarray(v) for v in airy_pair(ya))
    d = xa[:, None] - ya[None, :]
    near = np.abs(d) < _DIAGONAL_GAP
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (np.outer(ax, apy) - np.outer(apx, ay)) / d
    if np.any(near):
        mid = 0.5 * (xa[:, None] + ya[None, :])
        out = np.where(near, _airy_diagonal(mid), out)
    return out


def _airy_tables(xs: np.ndarray, ys: np.ndarray, shifts: np.ndarray):
    ax = np.asarray(airy_pair(np.add.outer(xs, shifts))[0])
    ay = np.asarray(airy_pair(np.add.outer(ys, shifts))[0])
    return ax, ay


def airy_g(tau: float, xs, ys) -> np.ndarray:
    """int_0^U e^{-tau u} Ai(x + u) Ai(y + u) du, U set by the super-exponential decay of Ai."""
    xa, ya = _vec(xs), _vec(ys)
    low = min(float(xa.min()), float(ya.min()))
    growth = max(0.0, -tau)
    upper = max(1.0, 12.0 - low)
    while (4.0 / 3.0) * (low + upper) ** 1.5 - growth * upper < 45.0:
        upper += 1.0

    def evaluate(u, w):
        ax, ay = _airy_tables(xa, ya, u)
        return (ax * (w * np.exp(-tau * u))) @ ay.T

    # oscillation frequency ~ sqrt(-(x + u)) while x + u < 0
    edges = graded_edges(0.0, upper, lambda u: min(1.0, 1.5 / math.sqrt(1.0 + max(0.0, -(low + u)))))
    return integrate_panels(evaluate, edges)[0]


def airy_gbar(tau: float, xs, ys) -> np.ndarray:
    """-int_0^L e^{-tau lam} Ai(x - lam) Ai(y - lam) dlam."""
    _require_positive(tau)
    xa, ya = _vec(xs), _vec(ys)
    reach = max(float(np.max(np.abs(xa))), float(np.max(np.abs(ya))))
    upper = (LOG_CUTOFF + 4.0) / tau + max(0.0, float(max(xa.max(), ya.max())))

    def evaluate(lam, w):
        ax, ay = _airy_tables(xa, ya, -lam)
        return -(ax * (w * np.exp(-tau * lam))) @ ay.T

    edges = graded_edges(0.0, upper, lambda lam: min(1.0, 2.0 / math.sqrt(lam + reach + 1.0)))
    return integrate_panels(evaluate, edges)[0]


def airy_heat(tau: float, xs, ys) -> np.ndarray:
    _require_positive(tau)
    xa, ya = _vec(xs), _vec(ys)
    d = ya[None, :] - xa[:, None]
    s = xa[:, None] + ya[None, :]
    return np.exp(-d * d / (4.0 * tau) - 0.5 * tau * s + tau ** 3 / 12.0) / math.sqrt(4.0 * math.pi * tau)


# Bessel family (kernel coordinates: eigenfunctions J_nu(2 sqrt(lam x)))

def _bessel_power(nu: float) -> float:
    """lam = v^q makes the integrand near lam = 0 behave like v."""
    return 2.0 / (1.0 + min(nu, 0.0))


def _bessel_integral(nu: float, xs, ys, v_lo: float, v_hi: float, damping, width: float) -> np.ndarray:
    """int over lam = v^q in [v_lo^q, v_hi^q] of damping(lam) J_nu(2 sqrt(lam x)) J_nu(2 sqrt(lam y))."""
    xa, ya = _vec(xs), _vec(ys)
    if np.any(xa < 0) or np.any(ya < 0):
        raise DomainError("Bessel kernel positions must be nonnegative")
    q = _bessel_power(nu)
    rx, ry = 2.0 * np.sqrt(xa), 2.0 * np.sqrt(ya)

    def evaluate(v, w):
        lam = v ** q
        jac = w * q * v ** (q - 1.0) * damping(lam)
        root = np.sqrt(lam)
        jx = np.asarray(bessel_j(nu, np.outer(rx, root)))
        jy = np.asarray(bessel_j(nu, np.outer(ry, root)))
        return (jx * jac) @ jy.T

    edges = graded_edges(v_lo, v_hi, lambda v: width)
    return integrate_panels(evaluate, edges)[0]


def _bessel_width(xs, ys, cap: float) -> float:
    reach = math.sqrt(float(np.max(_vec(xs)))) + math.sqrt(float(np.max(_vec(ys))))
    return min(cap, 1.0 / (1.0 + 2.0 * reach))


def bessel_g(nu: float, tau: float, xs, ys) -> np.ndarray:
    return _bessel_integral(nu, xs, ys, 0.0, 1.0, lambda lam: np.exp(tau * lam), _bessel_width(xs, ys, 0.25))


def bessel_gbar(nu: float, tau: float, xs, ys) -> np.ndarray:
    _require_positive(tau)
    upper = 1.0 + (LOG_CUTOFF + 4.0) / tau
    v_hi = upper ** (1.0 / _bessel_power(nu))
    return -_bessel_integral(nu, xs, ys, 1.0, v_hi, lambda lam: np.exp(-tau * lam), _bessel_width(xs, ys, 0.5))


def bessel_heat_kernel(nu: float, tau: float, xs, ys) -> np.ndarray:
    """(1/tau) e^{-(x+y)/tau} I_nu(2 sqrt(xy)/tau), the full-spectrum companion of bessel_g."""
    _require_positive(tau)
    xa, ya = _vec(xs), _vec(ys)
    if np.any(xa <= 0) or np.any(ya <= 0):
        raise DomainError("Bessel heat kernel needs positive positions")
    sx, sy = np.sqrt(xa)[:, None], np.sqrt(ya)[None, :]
    arg = 2.0 * sx * sy / tau
    return np.exp(-((sx - sy) ** 2) / tau) * np.asarray(bessel_ie(nu, arg)) / tau


def bessel_equal_time(nu: float, xs, ys) -> np.ndarray:
    xa, ya = _vec(xs), _vec(ys)
    if np.any(xa < 0) or np.any(ya < 0):
        raise DomainError("Bessel kernel positions must be nonnegative")
    rx, ry = 2.0 * np.sqrt(xa), 2.0 * np.sqrt(ya)
    jx, jpx = np.asarray(bessel_j(nu, rx)), np.asarray(bessel_j_prime(nu, rx))
    jy, jpy = np.asarray(bessel_j(nu, ry)), np.asarray(bessel_j_prime(nu, ry))
    d = ya[None, :] - xa[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (np.outer(np.sqrt(xa) * jpx, jy) - np.outer(jx, np.sqrt(ya) * jpy)) / d
    near = np.abs(d) < _DIAGONAL_GAP * (1.0 + np.abs(xa)[:, None])
    # no closed diagonal: fall back to the tau = 0 integral for those pairs
    for i, j in zip(*np.nonzero(near)):
        out[i, j] = bessel_g(nu, 0.0, xa[i:i + 1], ya[j:j + 1])[0, 0]
    return out


# Bessel heat kernel in the radial coordinates of the N-independent operator

def bessel_radial_delta(nu: float, tau: float, xs, ys) -> np.ndarray:
    """(sqrt(xy)/2tau) e^{-(x^2+y^2)/4tau} I_nu(xy/2tau)."""
    _require_positive(tau)
    xa, ya = _vec(xs), _vec(ys)
    if np.any(xa <= 0) or np.any(ya <= 0):
        raise DomainError("Bessel delta_t needs positive positions")
    prod = np.outer(xa, ya)
    d = ya[None, :] - xa[:, None]
    return np.sqrt(prod) / (2.0 * tau) * np.exp(-d * d / (4.0 * tau)) * np.asarray(bessel_ie(nu, prod / (2.0 * tau)))


def bessel_radial_delta_spectral(nu: float, tau: float, xs, ys) -> np.ndarray:
    """int_0^V v sqrt(xy) J_nu(v x) J_nu(v y) e^{-tau v^2} dv."""
    _require_positive(tau)
    xa, ya = _vec(xs), _vec(ys)
    if np.any(xa <= 0) or np.any(ya <= 0):
        raise DomainError("Bessel delta_t needs positive positions")
    # v = s^p regularizes the v^{1+2nu} behaviour at the origin
    p = 1.0 / (1.0 + min(nu, 0.0))
    upper = math.sqrt((LOG_CUTOFF + 4.0) / tau) ** (1.0 / p)
    reach = float(np.max(xa) + np.max(ya))

    def evaluate(s, w):
        v = s ** p
        jx = np.asarray(bessel_j(nu, np.outer(xa, v)))
        jy = np.asarray(bessel_j(nu, np.outer(ya, v)))
        dw = w * p * s ** (p - 1.0) * v * np.exp(-tau * v * v)
        return np.sqrt(np.outer(xa, ya)) * ((jx * dw) @ jy.T)

    edges = graded_edges(0.0, upper, lambda s: min(0.5, 2.0 / (1.0 + reach)))
    return integrate_panels(evaluate, edges)[0]
