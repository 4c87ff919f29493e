# dpk/specfun/hermite.py
"""
Orthonormal Hermite functions phi_n(zeta) = h_n^{-1/2} e^{-zeta^2/2} H_n(zeta).

Values come from the normalized three-term recurrence

    psi_{k+1} = sqrt(2/(k+1)) zeta psi_k - sqrt(k/(k+1)) psi_{k-1}

run on the polynomial part only, with a running log-scale so that neither
H_n, h_n nor e^{-zeta^2/2} is ever formed on its own. This keeps n up to 1e4
(and beyond) finite.
"""

import math
from typing import Tuple, Union

import numpy as np

from ..errors import DomainError, RangeError

ArrayLike = Union[float, np.ndarray]

PI_M14 = math.pi ** -0.25
_RESCALE = 1e150
_LOG_RESCALE = math.log(_RESCALE)
_MAX_EXP = 709.0


def _check_degree(n: int) -> int:
    n = int(n)
    if n < 0:
        raise DomainError(f"Hermite degree must be >= 0, got {n}")
    return n


class HermiteStream:
    """phi_0, phi_1, ... at fixed points, produced in order."""

    def __init__(self, zeta: ArrayLike) -> None:
        self.zeta = np.asarray(zeta, dtype=float)
        self._gauss = -0.5 * self.zeta * self.zeta
        self._prev = np.zeros_like(self.zeta)
        self._cur = np.full_like(self.zeta, PI_M14)
        self._log_scale = np.zeros_like(self.zeta)
        self.degree = 0

    def scaled(self) -> Tuple[np.ndarray, np.ndarray]:
        """(psi, log_scale) of the current degree; phi = psi * exp(log_scale - zeta^2/2)."""
        return self._cur, self._log_scale

    def value(self) -> np.ndarray:
        return self._cur * np.exp(self._log_scale + self._gauss)

    def advance(self) -> None:
        k = self.degree
        nxt = math.sqrt(2.0 / (k + 1)) * self.zeta * self._cur - math.sqrt(k / (k + 1.0)) * self._prev
        self._prev, self._cur = self._cur, nxt
        big = np.abs(nxt) > _RESCALE
        if np.any(big):
            self._cur = np.where(big, self._cur / _RESCALE, self._cur)
            self._prev = np.where(big, self._prev / _RESCALE, self._prev)
            self._log_scale = self._log_scale + big * _LOG_RESCALE
        self.degree = k + 1

    def skip_to(self, n: int) -> None:
        while self.degree < n:
            self.advance()

    def take(self, count: int) -> np.ndarray:
        out = np.empty((count,) + self.zeta.shape)
        for i in range(count):
            out[i] = self.value()
            self.advance()
        return out


def _shape_out(values: np.ndarray, like) -> ArrayLike:
    if np.ndim(like) == 0:
        return float(values)
    return values


# Public API

def hermite_phi(n: int, zeta: ArrayLike) -> ArrayLike:
    stream = HermiteStream(zeta)
    stream.skip_to(_check_degree(n))
    return _shape_out(stream.value(), zeta)


def hermite_phi_table(n_max: int, zeta: ArrayLike) -> np.ndarray:
    """phi_0 .. phi_{n_max} stacked along axis 0."""
    return HermiteStream(zeta).take(_check_degree(n_max) + 1)


def _dressed(n: int, t: float, x: ArrayLike, log_factor) -> ArrayLike:
    """sign(psi_n) * exp(log|psi_n| + log_scale + log_factor(x)), range-checked."""
    n = _check_degree(n)
    if t <= 0:
        raise DomainError(f"time must be positive, got {t}")
    xa = np.asarray(x, dtype=float)
    stream = HermiteStream(xa / math.sqrt(2.0 * t))
    stream.skip_to(n)
    psi, log_scale = stream.scaled()
    with np.errstate(divide="ignore"):
        log_abs = np.log(np.abs(psi)) + log_scale + log_factor(xa)
    if np.any(log_abs > _MAX_EXP):
        raise RangeError(f"degree-{n} function at t={t} overflows double precision")
    return _shape_out(np.sign(psi) * np.exp(log_abs), x)


def phi_tx(n: int, t: float, x: ArrayLike) -> ArrayLike:
    """2^{-1/2} t^{-(n+1)/2} e^{-x^2/4t} phi_n(x / sqrt(2t))."""
    return _dressed(
        n, t, x,
        lambda xa: -0.5 * math.log(2.0) - 0.5 * (n + 1) * math.log(t) - xa * xa / (2.0 * t),
    )


def hatphi_tx(n: int, t: float, x: ArrayLike) -> ArrayLike:
    """t^{n/2} e^{x^2/4t} phi_n(x / sqrt(2t)); the Gaussian factors cancel exactly."""
    return _dressed(n, t, x, lambda xa: 0.5 * n * math.log(t) + 0.0 * xa)
