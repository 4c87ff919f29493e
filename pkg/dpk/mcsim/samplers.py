# dpk/mcsim/samplers.py
import logging
import math
from typing import Tuple

import numpy as np
from scipy import stats

from ..errors import ArgumentError, DomainError
from ..quadrature import quad
from ..weylkm import Configuration, abs_bm_1d, require_chamber
from .models import Bessel3Summary, PathEnsemble, SimulationConfig, SurvivalEstimate
from .streams import run_blocks

logger = logging.getLogger(__name__)

MAX_HALVINGS = 20
SEPARATION = 1e-12


# GUE and Hermitian matrix Brownian motion

def _gue_batch(rng: np.random.Generator, count: int, N: int, variance: float) -> np.ndarray:
    """count Hermitian matrices: diagonal N(0, v), off-diagonal real/imag parts N(0, v/2)."""
    z = rng.standard_normal((count, N, N)) + 1j * rng.standard_normal((count, N, N))
    return math.sqrt(variance) * 0.5 * (z + np.conj(np.swapaxes(z, -1, -2)))


def gue_samples(N: int, variance: float, count: int, seed: int = 0) -> np.ndarray:
    """Sorted eigenvalues, shape (count, N)."""
    if variance <= 0:
        raise DomainError(f"GUE variance must be positive, got {variance}")
    if N < 1 or count < 1:
        raise ArgumentError("N and count must be positive")

    def work(rng, n, _):
        return np.linalg.eigvalsh(_gue_batch(rng, n, N, variance))

    return np.concatenate(run_blocks(work, count, seed, desc="gue"))


def gue_sample(N: int, variance: float, seed: int = 0) -> Configuration:
    return Configuration(tuple(gue_samples(N, variance, 1, seed)[0]))


def matrix_bm_eigen(config: SimulationConfig) -> PathEnsemble:
    """Eigenvalues of Hermitian matrix BM from the zero matrix at each requested time."""
    if config.scheme != "matrix":
        raise ArgumentError("matrix_bm_eigen needs scheme='matrix'")
    N, times = config.N, np.asarray(config.times)
    gaps = np.diff(np.concatenate([[0.0], times]))

    def work(rng, n, _):
        H = np.zeros((n, N, N), dtype=complex)
        out = np.empty((n, times.size, N))
        for k, gap in enumerate(gaps):
            H += _gue_batch(rng, n, N, gap)
            out[:, k, :] = np.linalg.eigvalsh(H)
        return out

    return PathEnsemble(config, np.concatenate(run_blocks(work, config.paths, config.seed, desc="matrix-bm")))


# Dyson SDE

def _drift(x: np.ndarray) -> np.ndarray:
    diff = x[..., :, None] - x[..., None, :]
    with np.errstate(divide="ignore"):
        inv = np.where(diff != 0.0, 1.0 / diff, 0.0)
    return inv.sum(axis=-1)


def _ordered(x: np.ndarray) -> np.ndarray:
    return np.all(np.diff(x, axis=-1) > 0.0, axis=-1)


def _separate(x: np.ndarray) -> np.ndarray:
    y = np.sort(x)
    for k in range(1, y.size):
        y[k] = max(y[k], y[k - 1] + SEPARATION)
    return y


def _substep(x: np.ndarray, dw: np.ndarray, h: float, rng: np.random.Generator, depth: int) -> Tuple[np.ndarray, int]:
    """One Euler step of a single path; on disorder, split dw by a Brownian bridge and retry."""
    nxt = x + h * _drift(x) + dw
    if _ordered(nxt):
        return nxt, 0
    if depth >= MAX_HALVINGS:
        return _separate(nxt), 1
    first = 0.5 * dw + math.sqrt(0.25 * h) * rng.standard_normal(x.shape)
    mid, e1 = _substep(x, first, 0.5 * h, rng, depth + 1)
    end, e2 = _substep(mid, dw - first, 0.5 * h, rng, depth + 1)
    return end, e1 + e2


def dyson_sde(config: SimulationConfig, x0) -> PathEnsemble:
    """Euler–Maruyama for dX_j = dB_j + sum_{k != j} dt / (X_j - X_k)."""
    if config.scheme != "sde":
        raise ArgumentError("dyson_sde needs scheme='sde'")
    start = require_chamber(x0)
    if start.size != config.N:
        raise ArgumentError(f"x0 has {start.size} points, config says N={config.N}")
    times = np.asarray(config.times)
    gaps = np.diff(np.concatenate([[0.0], times]))

    def work(rng, n, block):
        x = np.tile(start, (n, 1))
        out = np.empty((n, times.size, config.N))
        events = 0
        for k, gap in enumerate(gaps):
            steps = max(1, math.ceil(gap / config.dt - 1e-9))
            h = gap / steps
            for _ in range(steps):
                dw = math.sqrt(h) * rng.standard_normal(x.shape)
                nxt = x + h * _drift(x) + dw
                bad = np.nonzero(~_ordered(nxt))[0]
                for i in bad:
                    nxt[i], e = _substep(x[i], dw[i], h, rng, 0)
                    events += e
                x = nxt
            out[:, k, :] = x
        if events:
            logger.warning("block %d: %d forced separations", block, events)
        return out, events

    results = run_blocks(work, config.paths, config.seed, desc="dyson-sde")
    positions = np.concatenate([r[0] for r in results])
    return PathEnsemble(config, positions, collision_events=sum(r[1] for r in results))


def simulate(config: SimulationConfig, x0=None) -> PathEnsemble:
    if config.scheme == "matrix":
        return matrix_bm_eigen(config)
    if x0 is None:
        raise ArgumentError("the sde scheme needs a starting configuration")
    return dyson_sde(config, x0)


# Absorbing BMs

def survival_mc(
    t: float,
    x,
    dt: float = 1e-3,
    paths: int = 100_000,
    seed: int = 0,
    bridge_correction: bool = False,
) -> SurvivalEstimate:
    """
    Fraction of independent BM N-tuples that stay ordered at every grid time.

    With bridge_correction each surviving step is weighted by the probability
    prod (1 - exp(-a b / h)) that no adjacent pair crossed between grid times,
    a and b being the pair's gaps at the step ends.
    """
    if t <= 0 or dt <= 0:
        raise DomainError("survival_mc needs t > 0 and dt > 0")
    start = require_chamber(x)
    steps = max(1, math.ceil(t / dt - 1e-9))
    h = t / steps

    def work(rng, n, _):
        pos = np.tile(start, (n, 1))
        weight = np.ones(n)
        gap = np.diff(pos, axis=1)
        for _ in range(steps):
            pos = pos + math.sqrt(h) * rng.standard_normal(pos.shape)
            new_gap = np.diff(pos, axis=1)
            alive = np.all(new_gap > 0.0, axis=1)
            if bridge_correction:
                cross = np.exp(-np.clip(gap * new_gap, 0.0, None) / h)
                weight = weight * np.prod(1.0 - cross, axis=1)
            weight = np.where(alive, weight, 0.0)
            gap = new_gap
        return weight

    w = np.concatenate(run_blocks(work, paths, seed, desc="survival"))
    p = float(w.mean())
    if bridge_correction:
        stderr = float(w.std(ddof=1) / math.sqrt(w.size)) if w.size > 1 else 0.0
    else:
        stderr = math.sqrt(max(p * (1.0 - p), 0.0) / w.size)
    return SurvivalEstimate(p, stderr)


# 3D Bessel process

def _bessel3_bin_mass(t: float, x: float, a: float, b: float) -> float:
    return quad(lambda y: abs_bm_1d(t, y, x).p_bessel3, a, b)


def bessel3_demo(t: float, paths: int = 100_000, seed: int = 0, x: float = 1.0, bins: int = 20) -> Bessel3Summary:
    """
    |B(t)| of a 3D BM as the top eigenvalue of [[B3, B1 - iB2], [B1 + iB2, -B3]],
    and the radial law from x e_1 against the h-transformed absorbed density.
    """
    if t <= 0 or x <= 0:
        raise DomainError("bessel3_demo needs t > 0 and x > 0")

    def work(rng, n, _):
        b = math.sqrt(t) * rng.standard_normal((n, 3))
        m = np.empty((n, 2, 2), dtype=complex)
        m[:, 0, 0], m[:, 1, 1] = b[:, 2], -b[:, 2]
        m[:, 0, 1] = b[:, 0] - 1j * b[:, 1]
        m[:, 1, 0] = b[:, 0] + 1j * b[:, 1]
        top = np.linalg.eigvalsh(m)[:, 1]
        norm = np.linalg.norm(b, axis=1)
        shifted = b.copy()
        shifted[:, 0] += x
        return np.max(np.abs(top - norm)), norm.min(), np.linalg.norm(shifted, axis=1)

    results = run_blocks(work, paths, seed, desc="bessel3")
    radii = np.concatenate([r[2] for r in results])

    edges = np.linspace(0.0, x + 6.0 * math.sqrt(t), bins + 1)
    observed, _ = np.histogram(radii, bins=edges)
    mass = np.array([_bessel3_bin_mass(t, x, a, b) for a, b in zip(edges[:-1], edges[1:])])
    expected = mass * radii.size
    usable = expected >= 5.0
    chi2 = float(np.sum((observed[usable] - expected[usable]) ** 2 / expected[usable]))
    dof = int(np.count_nonzero(usable)) - 1
    return Bessel3Summary(
        max_eigen_error=float(max(r[0] for r in results)),
        min_radius=float(min(r[1] for r in results)),
        chi2=chi2,
        dof=dof,
        p_value=float(stats.chi2.sf(chi2, dof)),
    )
