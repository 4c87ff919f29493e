# dpk/kernels/spectral.py
"""
Spectral-projection pieces G_t, Gbar_t and delta_t for every kernel family.

    G_t    = <y| e^{tH} P |x>           (any real t)
    Gbar_t = -<y| e^{-tH} (1 - P) |x>   (t > 0)
    delta_t = <y| e^{-tH} |x>           (t > 0)

so that Gbar_t = G_{-t} - delta_t. For the Bessel family delta_t is given in the
radial coordinates of its N-independent operator, while the identity above
uses `heat_matrix` in the kernel's own coordinates.
"""

from typing import Callable, Dict

import numpy as np

from ..errors import ArgumentError, DomainError
from . import limits
from .hermite import hermite_delta_t, hermite_delta_t_spectral
from .kinds import Airy, Bessel, HermiteFinite, KernelKind, Sine, is_limit


def _require_limit(kind: KernelKind, what: str) -> None:
    if not is_limit(kind):
        raise ArgumentError(f"{what} is defined for the sine, Airy and Bessel kernels only")


def _scalar(matrix: np.ndarray) -> float:
    return float(matrix[0, 0])


# Matrix forms

def equal_time_matrix(kind: KernelKind, xs, ys) -> np.ndarray:
    _require_limit(kind, "equal_time_matrix")
    if isinstance(kind, Sine):
        return limits.sine_equal_time(xs, ys)
    if isinstance(kind, Airy):
        return limits.airy_equal_time(xs, ys)
    return limits.bessel_equal_time(kind.nu, xs, ys)


def g_matrix(kind: KernelKind, t: float, xs, ys) -> np.ndarray:
    _require_limit(kind, "G_t")
    if isinstance(kind, Sine):
        return limits.sine_g(t, xs, ys)
    if isinstance(kind, Airy):
        return limits.airy_g(t, xs, ys)
    return limits.bessel_g(kind.nu, t, xs, ys)


def heat_matrix(kind: KernelKind, t: float, xs, ys) -> np.ndarray:
    """<y| e^{-tH} |x> in the kernel's own coordinates."""
    _require_limit(kind, "heat_matrix")
    if isinstance(kind, Sine):
        return limits.sine_heat(t, xs, ys)
    if isinstance(kind, Airy):
        return limits.airy_heat(t, xs, ys)
    return limits.bessel_heat_kernel(kind.nu, t, xs, ys)


def _gbar_direct(kind: KernelKind, t: float, xs, ys) -> np.ndarray:
    if isinstance(kind, Sine):
        return limits.sine_gbar(t, xs, ys)
    if isinstance(kind, Airy):
        return limits.airy_gbar(t, xs, ys)
    return limits.bessel_gbar(kind.nu, t, xs, ys)


def _gbar_spectral(kind: KernelKind, t: float, xs, ys) -> np.ndarray:
    return g_matrix(kind, -t, xs, ys) - heat_matrix(kind, t, xs, ys)


_GBAR_METHODS: Dict[str, Callable] = {
    "direct": _gbar_direct,
    "spectral": _gbar_spectral,
}


def gbar_matrix(kind: KernelKind, t: float, xs, ys, method: str = "direct") -> np.ndarray:
    _require_limit(kind, "Gbar_t")
    if t <= 0:
        raise DomainError(f"Gbar_t needs t > 0, got {t}")
    try:
        fn = _GBAR_METHODS[method]
    except KeyError:
        raise ArgumentError(f"unknown Gbar method {method!r}; use direct or spectral") from None
    return fn(kind, t, xs, ys)


# Scalar API

def spectral_g(kind: KernelKind, t: float, x: float, y: float) -> float:
    return _scalar(g_matrix(kind, t, [x], [y]))


def spectral_gbar(kind: KernelKind, t: float, x: float, y: float, method: str = "direct") -> float:
    return _scalar(gbar_matrix(kind, t, [x], [y], method=method))


def delta_t(kind: KernelKind, t: float, x: float, y: float) -> float:
    """Closed-form heat kernel delta_t(x, y) of the family's N-independent operator."""
    if t <= 0:
        raise DomainError(f"delta_t needs t > 0, got {t}")
    if isinstance(kind, HermiteFinite):
        return float(hermite_delta_t(t, x, y))
    if isinstance(kind, Sine):
        return _scalar(limits.sine_heat(t, [x], [y]))
    if isinstance(kind, Airy):
        return _scalar(limits.airy_heat(t, [x], [y]))
    if isinstance(kind, Bessel):
        return _scalar(limits.bessel_radial_delta(kind.nu, t, [x], [y]))
    raise ArgumentError(f"unsupported kernel kind {kind!r}")


def delta_t_spectral(kind: KernelKind, t: float, x: float, y: float) -> float:
    """delta_t from its eigenfunction expansion, independent of the closed forms."""
    if t <= 0:
        raise DomainError(f"delta_t needs t > 0, got {t}")
    if isinstance(kind, HermiteFinite):
        return float(hermite_delta_t_spectral(t, x, y))
    if isinstance(kind, Bessel):
        return _scalar(limits.bessel_radial_delta_spectral(kind.nu, t, [x], [y]))
    return _scalar(g_matrix(kind, -t, [x], [y]) - _gbar_direct(kind, t, [x], [y]))


def bessel_heat_kernel(nu: float, t: float, x: float, y: float) -> float:
    return _scalar(limits.bessel_heat_kernel(nu, t, [x], [y]))
