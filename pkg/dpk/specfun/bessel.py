# dpk/specfun/bessel.py
"""
Bessel functions J_nu and I_nu for real nu > -1 and x >= 0.

J_nu: ascending series for x <= _J_SERIES_MAX, Miller backward recurrence
      above it, normalized with
          (x/2)^nu = sum_k (nu + 2k) Gamma(nu + k) / k! * J_{nu+2k}(x).
I_nu: ascending series (evaluated with the e^{-x} scaling folded in) for
      x <= _I_SERIES_MAX, Hankel asymptotics above.
"""

import math
from typing import Union

import numpy as np
from scipy.special import gammaln

from ..errors import DomainError

ArrayLike = Union[float, np.ndarray]

_J_SERIES_MAX = 8.0
_I_SERIES_MAX = 30.0
_BIG = 1e100


def _check(nu: float, x: np.ndarray) -> None:
    if nu <= -1.0:
        raise DomainError(f"Bessel order must exceed -1, got {nu}")
    if np.any(x < 0):
        raise DomainError("Bessel argument must be nonnegative")


def _at_origin(nu: float) -> float:
    if nu == 0.0:
        return 1.0
    return 0.0 if nu > 0 else math.inf


def _out(values: np.ndarray, like) -> ArrayLike:
    if np.ndim(like) == 0:
        return float(values[0])
    return values.reshape(np.shape(like))


# J_nu branches

def _j_series(nu: float, x: np.ndarray) -> np.ndarray:
    q = -0.25 * x * x
    term = np.exp(nu * np.log(0.5 * x) - gammaln(nu + 1.0))
    total = term.copy()
    for n in range(1, 200):
        term = term * q / (n * (n + nu))
        total += term
        if np.all(np.abs(term) <= 1e-17 * np.maximum(np.abs(total), 1e-300)):
            break
    return total


def _j_miller(nu: float, x: np.ndarray) -> np.ndarray:
    """Backward recurrence J_{mu-1} = (2 mu / x) J_mu - J_{mu+1} from order nu + M down to nu."""
    m_top = int(np.max(x)) + 60
    m_top += m_top % 2
    upper = np.zeros_like(x)
    cur = np.full_like(x, 1e-30)
    norm = np.zeros_like(x)
    # coefficients (nu + 2k) Gamma(nu + k) / k! ; the k = 0 coefficient is Gamma(nu + 1)
    for m in range(m_top, 0, -1):
        if m % 2 == 0:
            k = m // 2
            coeff = (nu + 2 * k) * math.exp(gammaln(nu + k) - gammaln(k + 1.0))
            norm += coeff * cur
        lower = (2.0 * (nu + m) / x) * cur - upper
        upper, cur = cur, lower
        big = np.abs(cur) > _BIG
        if np.any(big):
            cur = np.where(big, cur / _BIG, cur)
            upper = np.where(big, upper / _BIG, upper)
            norm = np.where(big, norm / _BIG, norm)
    norm += math.exp(gammaln(nu + 1.0)) * cur
    return cur * np.exp(nu * np.log(0.5 * x)) / norm


# I_nu branches (returned scaled by e^{-x})

def _ie_series(nu: float, x: np.ndarray) -> np.ndarray:
    q = 0.25 * x * x
    term = np.exp(nu * np.log(0.5 * x) - gammaln(nu + 1.0) - x)
    total = term.copy()
    for n in range(1, 400):
        term = term * q / (n * (n + nu))
        total += term
        if np.all(term <= 1e-17 * total):
            break
    return total


def _ie_asymptotic(nu: float, x: np.ndarray) -> np.ndarray:
    mu = 4.0 * nu * nu
    term = np.ones_like(x)
    total = term.copy()
    for k in range(1, 40):
        term = -term * (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        total += term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            break
    return total / np.sqrt(2.0 * math.pi * x)


# Public API

def bessel_j(nu: float, x: ArrayLike) -> ArrayLike:
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    _check(nu, xa)
    out = np.empty_like(xa)
    zero = xa == 0.0
    small = (~zero) & (xa <= _J_SERIES_MAX)
    large = xa > _J_SERIES_MAX
    out[zero] = _at_origin(nu)
    if np.any(small):
        out[small] = _j_series(nu, xa[small])
    if np.any(large):
        out[large] = _j_miller(nu, xa[large])
    return _out(out, x)


def bessel_j_prime(nu: float, x: ArrayLike) -> ArrayLike:
    """J'_nu(x) = (nu/x) J_nu(x) - J_{nu+1}(x); the x = 0 value is the one-sided limit."""
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    _check(nu, xa)
    out = np.empty_like(xa)
    zero = xa == 0.0
    pos = ~zero
    if np.any(pos):
        out[pos] = nu / xa[pos] * bessel_j(nu, xa[pos]) - bessel_j(nu + 1.0, xa[pos])
    if np.any(zero):
        if nu == 1.0:
            out[zero] = 0.5
        elif nu == 0.0 or nu > 1.0:
            out[zero] = 0.0
        else:
            out[zero] = math.inf
    return _out(out, x)


def bessel_ie(nu: float, x: ArrayLike) -> ArrayLike:
    """Exponentially scaled e^{-x} I_nu(x)."""
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    _check(nu, xa)
    out = np.empty_like(xa)
    zero = xa == 0.0
    small = (~zero) & (xa <= _I_SERIES_MAX)
    large = xa > _I_SERIES_MAX
    out[zero] = _at_origin(nu)
    if np.any(small):
        out[small] = _ie_series(nu, xa[small])
    if np.any(large):
        out[large] = _ie_asymptotic(nu, xa[large])
    return _out(out, x)


def bessel_i(nu: float, x: ArrayLike) -> ArrayLike:
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    scaled = np.atleast_1d(np.asarray(bessel_ie(nu, xa)))
    with np.errstate(over="ignore"):
        return _out(scaled * np.exp(xa), x)
