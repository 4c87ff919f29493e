# dpk/specfun/heat.py
import math
from typing import Union

import numpy as np

from ..errors import DomainError
from .hermite import hermite_phi_table

ArrayLike = Union[float, np.ndarray]


def heat_kernel(t: float, x: ArrayLike, xprime: ArrayLike) -> ArrayLike:
    """Gaussian transition density (2 pi t)^{-1/2} exp(-(x - x')^2 / 2t)."""
    if t <= 0:
        raise DomainError(f"heat kernel needs t > 0, got {t}")
    d = np.asarray(x, dtype=float) - np.asarray(xprime, dtype=float)
    value = np.exp(-d * d / (2.0 * t)) / math.sqrt(2.0 * math.pi * t)
    if np.ndim(value) == 0:
        return float(value)
    return value


def mehler_sum(t: float, tprime: float, x: float, xprime: float, terms: int) -> float:
    """
    Partial sum of Mehler's expansion of heat_kernel(t - t', x, x'):

        (2t)^{-1/2} e^{-x^2/4t + x'^2/4t'} sum_{n<terms} (t'/t)^{n/2} phi_n(x/sqrt(2t)) phi_n(x'/sqrt(2t'))
    """
    if tprime <= 0 or t <= 0:
        raise DomainError("Mehler sum needs positive times")
    if tprime >= t:
        raise DomainError(f"Mehler series diverges for t'/t = {tprime / t:g} >= 1")
    if terms < 1:
        raise DomainError("terms must be positive")
    zeta = x / math.sqrt(2.0 * t)
    zeta_p = xprime / math.sqrt(2.0 * tprime)
    table = hermite_phi_table(terms - 1, np.array([zeta, zeta_p]))
    ratio = np.sqrt(tprime / t) ** np.arange(terms)
    total = float(np.sum(ratio * table[:, 0] * table[:, 1]))
    pref = math.exp(-x * x / (4.0 * t) + xprime * xprime / (4.0 * tprime)) / math.sqrt(2.0 * t)
    return pref * total
