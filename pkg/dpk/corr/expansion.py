# dpk/corr/expansion.py
"""
Two-time correlations of an infinite system in equilibrium, evaluated two ways.

The direct form is det Mbar, whose lower-left block holds Gbar_t(y, x). Writing
Gbar_t = G_{-t} - delta_t and expanding by multilinearity over the rows that
take the -delta_t part gives det M plus signed products of delta_t minors and
complementary minors of M.
"""

from itertools import combinations
from typing import Callable, NamedTuple, Sequence

import numpy as np
from numpy.polynomial.hermite import hermgauss

from ..errors import ArgumentError, UnsupportedSizeError
from ..kernels import KernelKind, equal_time_matrix, g_matrix, gbar_matrix, heat_matrix, is_limit
from ..linalg import complement, det_lu, submatrix

MAX_POINTS = 2


class ExpansionCheck(NamedTuple):
    direct: float
    expanded: float


def _assemble(upper_left, upper_right, lower_left, lower_right) -> np.ndarray:
    return np.block([[upper_left, upper_right], [lower_left, lower_right]])


def two_time_expansion_check(kind: KernelKind, t: float, x_points: Sequence[float], y_points: Sequence[float]) -> ExpansionCheck:
    if not is_limit(kind):
        raise ArgumentError("two-time expansion applies to the sine, Airy and Bessel kernels")
    if t <= 0:
        raise ArgumentError(f"time gap must be positive, got {t}")
    m, n = len(x_points), len(y_points)
    if m > MAX_POINTS or n > MAX_POINTS:
        raise UnsupportedSizeError(f"minor enumeration is limited to m, n <= {MAX_POINTS}")
    xs = np.asarray(x_points, dtype=float)
    ys = np.asarray(y_points, dtype=float)

    kx = equal_time_matrix(kind, xs, xs) if m else np.zeros((0, 0))
    ky = equal_time_matrix(kind, ys, ys) if n else np.zeros((0, 0))
    if m and n:
        g = g_matrix(kind, t, xs, ys)
        g_back = g_matrix(kind, -t, ys, xs)
        gbar = gbar_matrix(kind, t, ys, xs)
        delta = heat_matrix(kind, t, xs, ys)
    else:
        g = np.zeros((m, n))
        g_back = gbar = np.zeros((n, m))
        delta = np.zeros((m, n))

    direct = det_lu(_assemble(kx, g, gbar, ky))
    M = _assemble(kx, g, g_back, ky)
    expanded = det_lu(M)
    for ell in range(1, min(m, n) + 1):
        for a in combinations(range(1, m + 1), ell):
            for b in combinations(range(1, n + 1), ell):
                sign = (-1) ** (ell + sum(ai + m + bi for ai, bi in zip(a, b)))
                d_minor = det_lu(submatrix(delta, [ai - 1 for ai in a], [bi - 1 for bi in b]))
                rows = complement(m + n, [m + bi - 1 for bi in b])
                cols = complement(m + n, [ai - 1 for ai in a])
                expanded += sign * d_minor * det_lu(submatrix(M, rows, cols))
    return ExpansionCheck(direct, expanded)


# Heine identity

def heine_check(
    gs: Sequence[Callable[[np.ndarray], np.ndarray]],
    gbars: Sequence[Callable[[np.ndarray], np.ndarray]],
    order: int = 32,
) -> ExpansionCheck:
    """
    (1/N!) int det[g_j(x_k)] det[gbar_j(x_k)] dx against det[int g_j gbar_k].

    Both sides use Gauss–Hermite nodes with the weight e^{-x^2} divided back
    out, which is exact when every product g_j gbar_k is a polynomial times
    e^{-x^2} of degree below 2 * order.
    """
    N = len(gs)
    if N != len(gbars) or N == 0:
        raise ArgumentError("need the same positive number of g and gbar functions")
    if N > 3:
        raise UnsupportedSizeError("tensor quadrature is limited to N <= 3")
    nodes, weights = hermgauss(order)
    w = weights * np.exp(nodes * nodes)
    G = np.array([g(nodes) for g in gs])
    Gb = np.array([g(nodes) for g in gbars])

    gram = (G * w) @ Gb.T
    rhs = det_lu(gram)

    grids = np.meshgrid(*([np.arange(order)] * N), indexing="ij")
    idx = np.stack([g.ravel() for g in grids], axis=1)
    # det over the stacked N x N matrices [g_j(x_{idx_k})]
    left = np.linalg.det(np.transpose(G[:, idx], (1, 0, 2)))
    right = np.linalg.det(np.transpose(Gb[:, idx], (1, 0, 2)))
    tensor_w = np.prod(w[idx], axis=1)
    lhs = float(np.sum(left * right * tensor_w)) / float(np.prod(np.arange(1, N + 1)))
    return ExpansionCheck(lhs, rhs)
