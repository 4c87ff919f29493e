# dpk/kernels/scaling.py
"""Bulk and soft-edge rescalings of the finite Hermite kernel."""

import math

from ..errors import ArgumentError, DomainError
from .hermite import density_rho_n, hermite_kernel_matrix


def edge_shift(N: int, s: float) -> float:
    """a_N(s) = 2 N^{2/3} + 2 N^{1/3} s - s^2, the moving soft edge."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    return 2.0 * N ** (2.0 / 3.0) + 2.0 * N ** (1.0 / 3.0) * s - s * s


def _positive_time(t: float, label: str) -> float:
    if t <= 0:
        raise DomainError(f"{label} time {t} is not positive")
    return t


def bulk_scaled_kernel(N: int, s_a: float, x_a: float, s_b: float, x_b: float) -> float:
    """
    Hermite kernel at times N + 2s, positions unscaled.

    Only the Gaussian factors e^{-x^2/4t_a + y^2/4t_b} are dropped; the factor
    (t_b/t_a)^{(N-1)/2} stays in, so for s_a < s_b the value tends to
    (1/pi) int_0^1 e^{(s_b - s_a) u^2} cos(u (x_b - x_a)) du.
    """
    if N < 2 or N % 2:
        raise ArgumentError(f"bulk scaling pairs particles around the centre and needs even N, got {N}")
    t_a = _positive_time(N + 2.0 * s_a, "bulk")
    t_b = _positive_time(N + 2.0 * s_b, "bulk")
    return float(hermite_kernel_matrix(N, t_a, [x_a], t_b, [x_b])[0, 0])


def edge_scaled_kernel(N: int, s_a: float, x_a: float, s_b: float, x_b: float) -> float:
    """Hermite kernel at times N^{1/3} + 2s around a_N(s), with (t_b/t_a)^{(N-1)/2} stripped."""
    cube = N ** (1.0 / 3.0)
    t_a = _positive_time(cube + 2.0 * s_a, "edge")
    t_b = _positive_time(cube + 2.0 * s_b, "edge")
    return float(
        hermite_kernel_matrix(
            N, t_a, [edge_shift(N, s_a) + x_a], t_b, [edge_shift(N, s_b) + x_b], gauge_shift=N - 1.0
        )[0, 0]
    )


def semicircle_scaled(N: int, t: float, xi: float) -> float:
    """(2 sqrt(Nt)/N) rho_N(t, 2 sqrt(Nt) xi), which tends to (2/pi) sqrt(1 - xi^2)."""
    half_width = 2.0 * math.sqrt(N * t)
    return half_width / N * float(density_rho_n(N, t, half_width * xi))
