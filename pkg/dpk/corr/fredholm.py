# dpk/corr/fredholm.py
"""
Fredholm determinants det(I + K chi) discretized on Gauss–Legendre nodes.

    symmetric:  det(I + W^{1/2} K W^{1/2} chi)
    nystrom:    det(I + K W chi)

The two are similar matrices; only nodes where chi != 0 enter.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from ..errors import ArgumentError, PrecisionError
from ..kernels import KernelKind, kernel_matrix
from ..linalg import slogdet_lu
from ..quadrature import gauss_legendre

logger = logging.getLogger(__name__)

COVERAGE_TOL = 1e-9
GAP_SLACK = 1e-8


@dataclass(frozen=True)
class StepFunction:
    """Piecewise-constant chi given as disjoint (a, b, value) intervals."""

    intervals: Tuple[Tuple[float, float, float], ...] = ()

    def __post_init__(self) -> None:
        ordered = sorted(self.intervals)
        for a, b, _ in ordered:
            if not a < b:
                raise ArgumentError(f"interval ({a}, {b}) must have a < b")
        for (_, b0, _), (a1, _, _) in zip(ordered, ordered[1:]):
            if a1 < b0:
                raise ArgumentError("step-function intervals overlap")
        object.__setattr__(self, "intervals", tuple((float(a), float(b), float(v)) for a, b, v in ordered))

    @classmethod
    def constant(cls, a: float, b: float, value: float) -> "StepFunction":
        return cls(((a, b, value),))

    def __call__(self, x) -> np.ndarray:
        xa = np.asarray(x, dtype=float)
        out = np.zeros_like(xa)
        for a, b, v in self.intervals:
            out = np.where((xa >= a) & (xa <= b), v, out)
        return out

    def scaled(self, factor: float) -> "StepFunction":
        return StepFunction(tuple((a, b, v * factor) for a, b, v in self.intervals))

    @property
    def active(self) -> List[Tuple[float, float, float]]:
        return [iv for iv in self.intervals if iv[2] != 0.0]


@dataclass(frozen=True)
class QuadratureGrid:
    """Nodes and positive weights for each time slice."""

    nodes: Tuple[Tuple[float, ...], ...]
    weights: Tuple[Tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if len(self.nodes) != len(self.weights):
            raise ArgumentError("grid needs one weight list per node list")
        for xs, ws in zip(self.nodes, self.weights):
            if len(xs) != len(ws):
                raise ArgumentError("grid slice has mismatched nodes and weights")
            if any(w <= 0 for w in ws):
                raise ArgumentError("grid weights must be positive")

    @classmethod
    def for_step_functions(cls, chis: Sequence[StepFunction], nodes_per_interval: Optional[int] = None) -> "QuadratureGrid":
        n = nodes_per_interval or get_settings().GRID_NODES
        nodes, weights = [], []
        for chi in chis:
            xs: List[float] = []
            ws: List[float] = []
            for a, b, _ in chi.active:
                x, w = gauss_legendre(n, a, b)
                xs.extend(x.tolist())
                ws.extend(w.tolist())
            nodes.append(tuple(xs))
            weights.append(tuple(ws))
        return cls(tuple(nodes), tuple(weights))

    def slice(self, m: int) -> Tuple[np.ndarray, np.ndarray]:
        return np.asarray(self.nodes[m], dtype=float), np.asarray(self.weights[m], dtype=float)


def _check_coverage(chi: StepFunction, nodes: np.ndarray, weights: np.ndarray) -> None:
    for a, b, _ in chi.active:
        inside = (nodes >= a) & (nodes <= b)
        covered = float(np.sum(weights[inside]))
        if abs(covered - (b - a)) > COVERAGE_TOL * max(1.0, b - a):
            raise ArgumentError(
                f"grid does not cover [{a}, {b}] (weights inside sum to {covered:.12g})"
            )


def _restrict(chis: Sequence[StepFunction], grid: QuadratureGrid):
    slices = []
    for m, chi in enumerate(chis):
        x, w = grid.slice(m)
        _check_coverage(chi, x, w)
        c = chi(x)
        keep = c != 0.0
        slices.append((x[keep], w[keep], c[keep]))
    return slices


def fredholm_generating(
    kind: KernelKind,
    times: Sequence[float],
    chis: Sequence[StepFunction],
    grid: Optional[QuadratureGrid] = None,
    mode: str = "symmetric",
) -> float:
    """Discretized det(I + K chi) over the given time slices."""
    if len(times) != len(chis):
        raise ArgumentError("need one step function per time")
    if any(b <= a for a, b in zip(times, times[1:])):
        raise ArgumentError(f"times must be strictly increasing, got {list(times)}")
    if mode not in ("symmetric", "nystrom"):
        raise ArgumentError(f"unknown Fredholm mode {mode!r}")
    grid = grid or QuadratureGrid.for_step_functions(chis)
    if len(grid.nodes) != len(times):
        raise ArgumentError("grid needs one slice per time")

    slices = _restrict(chis, grid)
    live = [(t, s) for t, s in zip(times, slices) if s[0].size]
    if not live:
        return 1.0

    blocks = [[kernel_matrix(kind, ta, sa[0], tb, sb[0]) for tb, sb in live] for ta, sa in live]
    K = np.block(blocks)
    w = np.concatenate([s[1] for _, s in live])
    c = np.concatenate([s[2] for _, s in live])
    if mode == "symmetric":
        root = np.sqrt(w)
        A = root[:, None] * K * (root * c)[None, :]
    else:
        A = K * (w * c)[None, :]
    sign, logabs = slogdet_lu(np.eye(w.size) + A)
    return 0.0 if sign == 0.0 else sign * math.exp(logabs)


def gap_probability(
    kind: KernelKind,
    time: float,
    interval: Tuple[float, float],
    grid: Optional[QuadratureGrid] = None,
    mode: str = "symmetric",
) -> float:
    """Probability of no particle in [a, b] at the given time."""
    a, b = interval
    if a > b:
        raise ArgumentError(f"gap interval needs a <= b, got ({a}, {b})")
    if a == b:
        return 1.0
    chi = StepFunction.constant(a, b, -1.0)
    value = fredholm_generating(kind, [time], [chi], grid, mode=mode)
    if value < -GAP_SLACK or value > 1.0 + GAP_SLACK:
        raise PrecisionError(f"gap probability {value:.3e} outside [0, 1]", achieved=value)
    return min(max(value, 0.0), 1.0)


def step_functions(specs: Iterable[Tuple[float, float, float, float]], times: Sequence[float]) -> List[StepFunction]:
    """Group (time, a, b, value) tuples into one StepFunction per listed time."""
    grouped = {float(t): [] for t in times}
    for t, a, b, v in specs:
        if float(t) not in grouped:
            raise ArgumentError(f"chi given at t={t}, which is not among the listed times")
        grouped[float(t)].append((a, b, v))
    return [StepFunction(tuple(grouped[float(t)])) for t in times]
