# dpk/cli/verify.py
"""Named end-to-end checks; `fast` is analytic only, `full` adds the Monte Carlo gates."""

import logging
import math
import time
from typing import Callable, List, Tuple

import numpy as np
from scipy.special import erf

from ..corr import CorrelationRequest, gap_probability, heine_check, multitime_correlation, two_time_expansion_check
from ..errors import ArgumentError, DpkError
from ..kernels import (
    Airy,
    Bessel,
    HermiteFinite,
    Sine,
    bound1_diagnostic,
    bulk_scaled_kernel,
    delta_t,
    delta_t_spectral,
    density_rho_n,
    edge_scaled_kernel,
    equal_time_matrix,
    g_matrix,
    semicircle_scaled,
)
from ..mcsim import SimulationConfig, empirical_correlation, gap_frequency, gue_samples, matrix_bm_eigen, survival_mc
from ..quadrature import quad
from ..specfun import airy_ai, airy_ai_prime, heat_kernel, hermite_phi, mehler_sum
from ..weylkm import abs_bm_1d, km_density, survival
from .output import Table

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, str]


def check_survival_reflection() -> Outcome:
    value = survival(1.0, [-1.0, 1.0])
    err = abs(value - erf(1.0))
    return err <= 1e-6, f"|N_2 - erf(1)| = {err:.2e}"


def check_absorbed_identity() -> Outcome:
    worst = 0.0
    for t in (0.5, 1.0, 2.0):
        for x in np.linspace(0.2, 3.0, 10):
            for y in np.linspace(0.2, 3.0, 10):
                lhs = abs_bm_1d(t, y, x).p_abs
                rhs = math.sqrt(math.pi * t / 2.0) * km_density(t / 2.0, [-y / 2.0, y / 2.0], [-x / 2.0, x / 2.0])
                worst = max(worst, abs(lhs - rhs))
    return worst <= 1e-12, f"max deviation {worst:.2e}"


def check_mehler() -> Outcome:
    grid = np.linspace(-3.0, 3.0, 13)
    worst = max(abs(mehler_sum(2.0, 1.0, x, xp, 80) - heat_kernel(1.0, x, xp)) for x in grid for xp in grid)
    return worst <= 1e-10, f"sup error {worst:.2e}"


def check_normalization() -> Outcome:
    worst = 0.0
    for N in (1, 5, 20):
        reach = 2.0 * math.sqrt(N) + 12.0
        total = quad(lambda x: density_rho_n(N, 1.0, x), -reach, reach)
        worst = max(worst, abs(total - N))
    return worst <= 1e-6, f"max |int rho - N| = {worst:.2e}"


def _semicircle_error(N: int) -> float:
    xis = np.linspace(-0.9, 0.9, 181)
    return max(abs(semicircle_scaled(N, 1.0, xi) - 2.0 / math.pi * math.sqrt(1.0 - xi * xi)) for xi in xis)


def check_semicircle() -> Outcome:
    e50, e100 = _semicircle_error(50), _semicircle_error(100)
    return e100 <= 0.05 and e100 < e50, f"N=50: {e50:.3e}, N=100: {e100:.3e}"


def check_bulk_limit() -> Outcome:
    errors = [abs(bulk_scaled_kernel(N, 0.0, 0.0, 0.0, 0.0) - 1.0 / math.pi) for N in (100, 200, 400)]
    off = abs(bulk_scaled_kernel(400, 0.0, 0.0, 0.0, 1.0) - math.sin(1.0) / math.pi)
    ok = errors[-1] <= 0.01 and errors[0] > errors[1] > errors[2] and off <= 0.01
    return ok, "errors " + ", ".join(f"{e:.2e}" for e in errors) + f"; off-diagonal {off:.2e}"


def check_edge_limit() -> Outcome:
    target = airy_ai_prime(0.0) ** 2
    errors = [abs(edge_scaled_kernel(N, 0.0, 0.0, 0.0, 0.0) - target) for N in (50, 100, 200)]
    ok = errors[-1] <= 0.05 and errors[0] > errors[1] > errors[2]
    return ok, "errors " + ", ".join(f"{e:.2e}" for e in errors)


def check_airy_identity() -> Outcome:
    grid = np.linspace(-2.0, 2.0, 5)
    worst = float(np.max(np.abs(g_matrix(Airy(), 0.0, grid, grid) - equal_time_matrix(Airy(), grid, grid))))
    return worst <= 1e-8, f"max deviation {worst:.2e}"


def check_delta_closed_forms() -> Outcome:
    cases = [
        (HermiteFinite(1), [(0.0, 0.3), (-0.5, 0.8), (1.0, 1.2)]),
        (Sine(), [(0.0, 0.0), (0.0, 0.3), (-0.4, 0.9)]),
        (Airy(), [(0.0, 0.3), (-1.0, -0.5), (0.5, 1.0)]),
        (Bessel(0.5), [(0.5, 0.7), (1.0, 1.3), (2.0, 1.5)]),
    ]
    worst = 0.0
    for kind, pairs in cases:
        for t in (0.25, 0.5):
            for x, y in pairs:
                worst = max(worst, abs(delta_t(kind, t, x, y) - delta_t_spectral(kind, t, x, y)))
    return worst <= 1e-7, f"max deviation {worst:.2e}"


def check_bound1() -> Outcome:
    ts = (1.0, 0.5, 0.25, 0.125)
    sine = max(abs(bound1_diagnostic(Sine(), t, 0.0) - 12.0 * t * t) for t in ts)
    airy = max(
        abs(bound1_diagnostic(Airy(), t, 0.0) - math.exp(t ** 3 / 3.0) * (t ** 8 + 12.0 * t ** 5 + 12.0 * t * t))
        for t in ts
    )
    ratios = [bound1_diagnostic(HermiteFinite(1), t, 0.0) / (t * t) for t in ts]
    spread = (max(ratios) - min(ratios)) / min(ratios)
    ok = sine <= 1e-9 and airy <= 1e-8 and spread < 0.2
    return ok, f"sine {sine:.1e}, airy {airy:.1e}, hermite ratio spread {spread:.1%}"


def _bulk_scaled_phi(ell: int, u: float) -> float:
    return (-1) ** ell * ell ** 0.25 * hermite_phi(2 * ell, u / (2.0 * math.sqrt(ell)))


def _edge_scaled_phi(ell: int, u: float) -> float:
    return 2.0 ** -0.25 * ell ** (1.0 / 12.0) * hermite_phi(ell, math.sqrt(2.0 * ell) + u * ell ** (-1.0 / 6.0) / math.sqrt(2.0))


def check_scaled_hermite() -> Outcome:
    ells = (50, 100, 200, 400)
    ok = True
    worst_edge = 0.0
    for u in (0.0, 1.0, 2.0):
        e = [abs(_bulk_scaled_phi(l, u) - math.cos(u) / math.sqrt(math.pi)) for l in ells]
        ok &= all(a > b for a, b in zip(e, e[1:]))
    for u in (-2.0, 0.0, 2.0):
        e = [abs(_edge_scaled_phi(l, u) - airy_ai(u)) for l in ells]
        ok &= all(a > b for a, b in zip(e, e[1:])) and e[-1] <= 0.05
        worst_edge = max(worst_edge, e[-1])
    return bool(ok), f"edge error at 400: {worst_edge:.3e}"


def check_two_time_expansion() -> Outcome:
    rng = np.random.default_rng(7)
    worst = 0.0
    for kind in (Sine(), Airy()):
        for _ in range(5):
            for m, n in ((1, 1), (1, 2), (2, 1), (2, 2)):
                xs, ys = rng.uniform(-1.5, 1.5, m), rng.uniform(-1.5, 1.5, n)
                res = two_time_expansion_check(kind, float(rng.uniform(0.3, 1.0)), xs, ys)
                worst = max(worst, abs(res.direct - res.expanded))
    return worst <= 1e-8, f"max deviation {worst:.2e}"


def check_heine() -> Outcome:
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(5):
        coeffs = rng.normal(size=(6, 3))
        gs = [np.polynomial.Polynomial(c) for c in coeffs[:3]]
        gbars = [np.polynomial.Polynomial(c) for c in coeffs[3:]]
        res = heine_check(
            [lambda x, p=p: p(x) * np.exp(-0.5 * x * x) for p in gs],
            [lambda x, p=p: p(x) * np.exp(-0.5 * x * x) for p in gbars],
            order=12,
        )
        worst = max(worst, abs(res.direct - res.expanded) / max(1.0, abs(res.expanded)))
    return worst <= 1e-8, f"max relative deviation {worst:.2e}"


# Monte Carlo gates

def check_survival_mc() -> Outcome:
    est = survival_mc(1.0, [-1.0, 1.0], dt=1e-3, paths=20_000, seed=1, bridge_correction=True)
    err = abs(est.estimate - erf(1.0))
    return err <= 3.0 * est.stderr + 0.005, f"{est.estimate:.4f} +- {est.stderr:.4f}"


def check_gap_mc() -> Outcome:
    exact = gap_probability(HermiteFinite(2), 1.0, (-1.0, 1.0))
    p, se = gap_frequency(gue_samples(2, 1.0, 100_000, seed=3), (-1.0, 1.0))
    return abs(p - exact) <= 3.0 * se, f"fredholm {exact:.4f}, MC {p:.4f} +- {se:.4f}"


def check_multitime_mc() -> Outcome:
    request = CorrelationRequest.of(HermiteFinite(2), [(1.0, [0.0]), (1.5, [0.5])])
    exact = multitime_correlation(request)
    ensemble = matrix_bm_eigen(SimulationConfig(N=2, times=[1.0, 1.5], paths=100_000, seed=5))
    est = empirical_correlation(ensemble, request, bandwidth=0.1)
    ok = abs(est.value - exact) <= 3.0 * est.stderr + 0.005
    return ok, f"determinant {exact:.4f}, MC {est.value:.4f} +- {est.stderr:.4f}"


FAST: List[Tuple[str, Callable[[], Outcome]]] = [
    ("survival_reflection", check_survival_reflection),
    ("absorbed_identity", check_absorbed_identity),
    ("mehler", check_mehler),
    ("normalization", check_normalization),
    ("semicircle", check_semicircle),
    ("bulk_limit", check_bulk_limit),
    ("edge_limit", check_edge_limit),
    ("airy_identity", check_airy_identity),
    ("delta_closed_forms", check_delta_closed_forms),
    ("bound1", check_bound1),
    ("scaled_hermite", check_scaled_hermite),
    ("two_time_expansion", check_two_time_expansion),
    ("heine", check_heine),
]

FULL = FAST + [
    ("survival_mc", check_survival_mc),
    ("gap_mc", check_gap_mc),
    ("multitime_mc", check_multitime_mc),
]


def run_suite(suite: str = "fast") -> Table:
    checks = {"fast": FAST, "full": FULL}.get(suite)
    if checks is None:
        raise ArgumentError(f"unknown suite {suite!r}; use fast or full")
    table = Table(["check", "passed", "seconds", "detail"], title=f"verify {suite}")
    for name, fn in checks:
        started = time.perf_counter()
        try:
            passed, detail = fn()
        except DpkError as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - started
        logger.info("%s: %s (%.2fs)", name, "pass" if passed else "FAIL", elapsed)
        table.add(name, bool(passed), round(elapsed, 3), detail.replace(",", ";"))
    return table


def suite_failed(table: Table) -> bool:
    return any(not row[1] for row in table.rows)
