# dpk/linalg.py
"""
Small dense determinant helpers.

- det_lu: partial-pivoting LU (scipy.linalg.lu_factor)
- slogdet_lu: sign + log|det| for large block matrices
- det_cofactor: explicit expansion for N <= 3, used to cross-check LU
"""

from typing import Sequence, Tuple

import numpy as np
from scipy.linalg import lu_factor

from .errors import ArgumentError, UnsupportedSizeError


def _as_square(a) -> np.ndarray:
    m = np.asarray(a, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ArgumentError(f"expected a square matrix, got shape {m.shape}")
    return m


def slogdet_lu(a) -> Tuple[float, float]:
    m = _as_square(a)
    if m.shape[0] == 0:
        return 1.0, 0.0
    if not np.all(np.isfinite(m)):
        raise ArgumentError("matrix has non-finite entries")
    lu, piv = lu_factor(m, check_finite=False)
    diag = np.diag(lu)
    if np.any(diag == 0.0):
        return 0.0, -np.inf
    swaps = np.count_nonzero(piv != np.arange(piv.size))
    sign = (-1.0) ** swaps * np.prod(np.sign(diag))
    return float(sign), float(np.sum(np.log(np.abs(diag))))


def det_lu(a) -> float:
    sign, logabs = slogdet_lu(a)
    if sign == 0.0:
        return 0.0
    return float(sign * np.exp(logabs))


def det_cofactor(a) -> float:
    m = _as_square(a)
    n = m.shape[0]
    if n == 0:
        return 1.0
    if n == 1:
        return float(m[0, 0])
    if n == 2:
        return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    if n == 3:
        return float(
            m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
        )
    raise UnsupportedSizeError(f"cofactor expansion only for N <= 3, got {n}")


def submatrix(a, rows: Sequence[int], cols: Sequence[int]) -> np.ndarray:
    m = np.asarray(a, dtype=float)
    return m[np.ix_(list(rows), list(cols))]


def complement(size: int, removed: Sequence[int]) -> list:
    gone = set(removed)
    return [i for i in range(size) if i not in gone]
