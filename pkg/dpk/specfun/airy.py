# dpk/specfun/airy.py
"""
Airy function Ai and its derivative.

|x| small: Maclaurin series Ai = c1 f(x) - c2 g(x).
x large:   exponentially decaying asymptotic series in 1/zeta, zeta = (2/3) x^{3/2}.
x << 0:    oscillatory asymptotic series in 1/zeta^2.

Branch points and asymptotic order come from Settings.AIRY.
"""

import math
from functools import lru_cache
from typing import Optional, Tuple, Union

import numpy as np

from ..config import AiryConfig, get_settings

ArrayLike = Union[float, np.ndarray]

AI0 = 0.355028053887817239260      # Ai(0)
AIP0 = -0.258819403792806798405    # Ai'(0)
_SQRT_PI = math.sqrt(math.pi)


@lru_cache(maxsize=8)
def _uv(terms: int) -> Tuple[np.ndarray, np.ndarray]:
    u = np.empty(terms + 1)
    v = np.empty(terms + 1)
    u[0] = v[0] = 1.0
    for k in range(1, terms + 1):
        u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        v[k] = -(6 * k + 1) / (6 * k - 1.0) * u[k]
    return u, v


def _truncated(terms: np.ndarray) -> np.ndarray:
    """Sum a (K, n) table of asymptotic terms, stopping each column at its smallest term."""
    mag = np.abs(terms)
    running = np.minimum.accumulate(mag, axis=0)
    keep = np.ones_like(mag, dtype=bool)
    keep[1:] = mag[1:] < running[:-1]
    keep = np.logical_and.accumulate(keep, axis=0)
    return np.sum(np.where(keep, terms, 0.0), axis=0)


# Branches

def _series(x: np.ndarray, max_terms: int) -> Tuple[np.ndarray, np.ndarray]:
    x3 = x * x * x
    tf = np.ones_like(x)
    tg = x.copy()
    tfp = 0.5 * x * x
    tgp = np.ones_like(x)
    f, g, fp, gp = tf.copy(), tg.copy(), tfp.copy(), tgp.copy()
    for k in range(1, max_terms):
        tf = tf * x3 / ((3 * k - 1) * (3 * k))
        tg = tg * x3 / ((3 * k) * (3 * k + 1))
        tfp = tfp * x3 / ((3 * k) * (3 * k + 2))
        tgp = tgp * x3 / ((3 * k - 2) * (3 * k))
        f += tf
        g += tg
        fp += tfp
        gp += tgp
        scale = np.maximum(np.maximum(np.abs(f), np.abs(g)), 1.0)
        largest = np.maximum(np.maximum(np.abs(tf), np.abs(tg)), np.maximum(np.abs(tfp), np.abs(tgp)))
        if np.all(largest <= 1e-17 * scale):
            break
    return AI0 * f + AIP0 * g, AI0 * fp + AIP0 * gp


def _decaying(x: np.ndarray, terms: int) -> Tuple[np.ndarray, np.ndarray]:
    u, v = _uv(terms)
    zeta = (2.0 / 3.0) * x ** 1.5
    k = np.arange(terms + 1)[:, None]
    powers = (-1.0 / zeta[None, :]) ** k
    su = _truncated(u[:, None] * powers)
    sv = _truncated(v[:, None] * powers)
    damp = np.exp(-zeta) / (2.0 * _SQRT_PI)
    quart = x ** 0.25
    return damp / quart * su, -damp * quart * sv


def _oscillatory(x: np.ndarray, terms: int) -> Tuple[np.ndarray, np.ndarray]:
    u, v = _uv(2 * terms + 1)
    z = -x
    zeta = (2.0 / 3.0) * z ** 1.5
    k = np.arange(terms + 1)[:, None]
    sign = (-1.0) ** k
    inv2 = zeta[None, :] ** (-2.0 * k)
    inv1 = inv2 / zeta[None, :]
    u_even = _truncated(sign * u[0::2][: terms + 1, None] * inv2)
    u_odd = _truncated(sign * u[1::2][: terms + 1, None] * inv1)
    v_even = _truncated(sign * v[0::2][: terms + 1, None] * inv2)
    v_odd = _truncated(sign * v[1::2][: terms + 1, None] * inv1)
    phase = zeta - 0.25 * math.pi
    c, s = np.cos(phase), np.sin(phase)
    quart = z ** 0.25
    ai = (c * u_even + s * u_odd) / (_SQRT_PI * quart)
    aip = quart / _SQRT_PI * (s * v_even - c * v_odd)
    return ai, aip


# Public API

def airy_pair(x: ArrayLike, config: Optional[AiryConfig] = None) -> Tuple[ArrayLike, ArrayLike]:
    """(Ai(x), Ai'(x)) elementwise."""
    cfg = config or get_settings().AIRY
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    ai = np.empty_like(xa)
    aip = np.empty_like(xa)

    inner = (xa <= cfg.switch_pos) & (xa >= -cfg.switch_neg)
    right = xa > cfg.switch_pos
    left = xa < -cfg.switch_neg
    if np.any(inner):
        ai[inner], aip[inner] = _series(xa[inner], cfg.series_terms)
    if np.any(right):
        ai[right], aip[right] = _decaying(xa[right], cfg.asymptotic_terms)
    if np.any(left):
        ai[left], aip[left] = _oscillatory(xa[left], cfg.asymptotic_terms)

    if np.ndim(x) == 0:
        return float(ai[0]), float(aip[0])
    return ai.reshape(np.shape(x)), aip.reshape(np.shape(x))


def airy_ai(x: ArrayLike) -> ArrayLike:
    return airy_pair(x)[0]


def airy_ai_prime(x: ArrayLike) -> ArrayLike:
    return airy_pair(x)[1]
