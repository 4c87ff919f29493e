# dpk/weylkm/schur.py
import math
from itertools import combinations_with_replacement
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np
from scipy.special import gammaln

from ..errors import ArgumentError, UnsupportedSizeError
from ..linalg import det_lu
from .chamber import as_points, vandermonde

MAX_N = 4
MAX_PART = 12


def partitions(N: int, max_part: int) -> List[Tuple[int, ...]]:
    """Partitions with at most N parts and largest part <= max_part, as length-N tuples."""
    out = []
    for combo in combinations_with_replacement(range(max_part + 1), N):
        out.append(tuple(sorted(combo, reverse=True)))
    return sorted(out)


def _alternant(exponents: Sequence[int], x: np.ndarray) -> float:
    return det_lu(x[:, None] ** np.asarray(exponents, dtype=float)[None, :])


def _shifted(mu: Sequence[int]) -> List[int]:
    N = len(mu)
    return [m + N - 1 - k for k, m in enumerate(mu)]


def schur_polynomial(mu: Sequence[int], x) -> float:
    """Bialternant ratio det[x_j^{mu_k + N - k}] / det[x_j^{N - k}]."""
    pts = as_points(x)
    mu = list(mu) + [0] * (pts.size - len(mu))
    if len(mu) != pts.size:
        raise ArgumentError("partition has more parts than variables")
    denom = _alternant(_shifted([0] * pts.size), pts)
    if denom == 0.0:
        raise ArgumentError("bialternant ratio undefined at repeated coordinates")
    return _alternant(_shifted(mu), pts) / denom


class SchurCheck(NamedTuple):
    lhs: float
    rhs: float
    remainder_bound: float


def _tail_bound(N: int, z: float, start: int) -> float:
    """(N!)^2 e^{(N-1)z} sum_{n >= start} z^n / n!, bounding the omitted partitions."""
    if z == 0.0:
        return 0.0
    head = math.exp(start * math.log(z) - math.lgamma(start + 1.0))
    ratio = z / (start + 1.0)
    geometric = 1.0 / (1.0 - ratio) if ratio < 1.0 else math.inf
    return math.factorial(N) ** 2 * math.exp((N - 1) * z) * head * geometric


def schur_expansion_check(x, y, max_part: int) -> SchurCheck:
    """
    det[e^{x_j y_k}] against the truncated expansion

        h(x) h(y) sum_mu s_mu(x) s_mu(y) / prod_k Gamma(mu_k + N - k + 1).
    """
    xa, ya = as_points(x), as_points(y)
    if xa.size != ya.size:
        raise ArgumentError("x and y must have the same length")
    N = xa.size
    if N > MAX_N:
        raise UnsupportedSizeError(f"partition enumeration is capped at N <= {MAX_N}")
    if max_part < 0 or max_part > MAX_PART:
        raise UnsupportedSizeError(f"max_part must lie in [0, {MAX_PART}]")

    lhs = det_lu(np.exp(xa[:, None] * ya[None, :]))
    hx, hy = vandermonde(xa), vandermonde(ya)
    degenerate = hx == 0.0 or hy == 0.0

    rhs = 0.0
    for mu in partitions(N, max_part):
        shifted = _shifted(mu)
        weight = math.exp(-float(np.sum(gammaln(np.asarray(shifted, dtype=float) + 1.0))))
        if degenerate:
            # h(x) s_mu(x) equals the alternant up to a sign that squares away
            rhs += _alternant(shifted, xa) * _alternant(shifted, ya) * weight
        else:
            rhs += schur_polynomial(mu, xa) * schur_polynomial(mu, ya) * weight
    if not degenerate:
        rhs *= hx * hy
    z = float(np.max(np.abs(xa)) * np.max(np.abs(ya)))
    return SchurCheck(lhs, rhs, _tail_bound(N, z, max_part + N))
