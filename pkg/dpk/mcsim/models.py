# dpk/mcsim/models.py
from dataclasses import dataclass
from typing import List, Literal, NamedTuple, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator

from ..weylkm import Configuration


class SimulationConfig(BaseModel):
    N: int = Field(..., ge=1)
    times: List[float] = Field(..., min_length=1)
    dt: float = Field(1e-3, gt=0)
    paths: int = Field(1000, ge=1)
    seed: int = Field(0, ge=0, lt=2 ** 64)
    scheme: Literal["matrix", "sde"] = "matrix"

    @field_validator("times")
    @classmethod
    def _increasing(cls, times: List[float]) -> List[float]:
        if times[0] <= 0:
            raise ValueError("observation times must be positive")
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("observation times must be strictly increasing")
        return times


@dataclass
class PathEnsemble:
    """positions[path, time_index, particle]; ordered along the last axis."""

    config: SimulationConfig
    positions: np.ndarray
    collision_events: int = 0

    @property
    def times(self) -> np.ndarray:
        return np.asarray(self.config.times, dtype=float)

    @property
    def paths(self) -> int:
        return self.positions.shape[0]

    def time_index(self, t: float, tol: float = 1e-12) -> int:
        hits = np.nonzero(np.abs(self.times - t) <= tol * max(1.0, abs(t)))[0]
        if hits.size == 0:
            raise KeyError(t)
        return int(hits[0])

    def at(self, t: float) -> np.ndarray:
        return self.positions[:, self.time_index(t), :]

    def configuration(self, path: int, time_index: int) -> Configuration:
        return Configuration(tuple(self.positions[path, time_index]))


class SurvivalEstimate(NamedTuple):
    estimate: float
    stderr: float


class CorrelationEstimate(NamedTuple):
    value: float
    stderr: float
    samples: int
    nonzero: int
    warning: Optional[str] = None


class Bessel3Summary(NamedTuple):
    max_eigen_error: float
    min_radius: float
    chi2: float
    dof: int
    p_value: float
