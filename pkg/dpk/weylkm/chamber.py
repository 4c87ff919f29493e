# dpk/weylkm/chamber.py
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from ..errors import ArgumentError


@dataclass(frozen=True)
class Configuration:
    """Point of the Weyl chamber: x_1 < x_2 < ... < x_N."""

    points: tuple

    def __post_init__(self) -> None:
        pts = tuple(float(p) for p in self.points)
        if not pts:
            raise ArgumentError("a configuration needs at least one point")
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise ArgumentError(f"configuration is not strictly increasing: {pts}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, *points: float) -> "Configuration":
        return cls(tuple(points))

    @property
    def count(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float)


PointsLike = Union[Configuration, Sequence[float], np.ndarray]


def as_points(x: PointsLike) -> np.ndarray:
    if isinstance(x, Configuration):
        return x.as_array()
    arr = np.asarray(x, dtype=float).ravel()
    if arr.size == 0:
        raise ArgumentError("empty point sequence")
    return arr


def require_chamber(x: PointsLike, closed: bool = False) -> np.ndarray:
    pts = as_points(x)
    gaps = np.diff(pts)
    if closed and np.any(gaps < 0):
        raise ArgumentError(f"points must be nondecreasing: {pts}")
    if not closed and np.any(gaps <= 0):
        raise ArgumentError(f"points must be strictly increasing: {pts}")
    return pts


def vandermonde(x: Iterable[float]) -> float:
    """prod_{j<k} (x_k - x_j)."""
    pts = as_points(x)
    diffs = pts[None, :] - pts[:, None]
    return float(np.prod(diffs[np.triu_indices(pts.size, k=1)]))


def log_abs_vandermonde(x: Iterable[float]) -> float:
    pts = as_points(x)
    diffs = np.abs(pts[None, :] - pts[:, None])[np.triu_indices(pts.size, k=1)]
    with np.errstate(divide="ignore"):
        return float(np.sum(np.log(diffs)))
