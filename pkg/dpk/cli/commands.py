# dpk/cli/commands.py
"""Sub-command handlers: validated parameters in, a Table out."""

import math
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from ..corr import CorrelationRequest, QuadratureGrid, fredholm_generating, gap_probability, multitime_correlation, step_functions
from ..errors import ArgumentError
from ..kernels import (
    HermiteFinite,
    SpaceTimePoint,
    density_rho_n,
    kernel_eval,
    kind_name,
    parse_kind,
    semicircle,
    spectral_rho,
)
from ..mcsim import SimulationConfig, ensemble_binary, atomic_write, simulate, survival_mc
from ..specfun import airy_ai, airy_ai_prime, bessel_i, bessel_j, hatphi_tx, heat_kernel, hermite_phi, phi_tx
from ..weylkm import survival, survival_asymptotic
from .output import Table
from .tables import limits_table
from .verify import run_suite

Params = Dict[str, Any]


# Argument parsing helpers

def parse_floats(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ArgumentError(f"expected comma-separated numbers, got {text!r}") from None


def parse_grid(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise ArgumentError(f"grid must be a:b:count, got {text!r}")
    try:
        a, b, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ArgumentError(f"grid must be a:b:count, got {text!r}") from None
    if count < 1 or (count > 1 and not a < b):
        raise ArgumentError(f"grid needs a < b and count >= 1, got {text!r}")
    return np.linspace(a, b, count)


def _fields(text: str, count: int, what: str) -> List[str]:
    parts = text.split(":")
    if len(parts) != count:
        raise ArgumentError(f"{what} must have {count} ':'-separated fields, got {text!r}")
    return parts


def parse_block(text: str) -> Tuple[float, List[float]]:
    t, xs = _fields(text, 2, "block")
    try:
        return float(t), parse_floats(xs)
    except ValueError:
        raise ArgumentError(f"block must be t:x1,x2,..., got {text!r}") from None


def parse_chi(text: str) -> Tuple[float, float, float, float]:
    try:
        t, a, b, v = (float(p) for p in _fields(text, 4, "chi"))
    except ValueError:
        raise ArgumentError(f"chi must be t:a:b:value, got {text!r}") from None
    return t, a, b, v


def parse_probe(text: str) -> Tuple[float, float, float, float]:
    try:
        sa, xa, sb, xb = (float(p) for p in _fields(text, 4, "probe"))
    except ValueError:
        raise ArgumentError(f"probe must be sa:xa:sb:xb, got {text!r}") from None
    return sa, xa, sb, xb


def _require(p: Params, *names: str) -> None:
    missing = [n for n in names if p.get(n) is None]
    if missing:
        raise ArgumentError("missing required option(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _kind(p: Params):
    _require(p, "kind")
    return parse_kind(p["kind"], p.get("n"), p.get("nu"))


# Handlers

def cmd_kernel(p: Params) -> Table:
    _require(p, "ta", "xa", "tb", "xb")
    kind = _kind(p)
    value = kernel_eval(kind, SpaceTimePoint(p["ta"], p["xa"]), SpaceTimePoint(p["tb"], p["xb"]))
    table = Table(["ta", "xa", "tb", "xb", "value"], title=f"kernel {kind_name(kind)}")
    table.add(float(p["ta"]), float(p["xa"]), float(p["tb"]), float(p["xb"]), value)
    return table


def cmd_density(p: Params) -> Table:
    _require(p, "grid")
    xs = parse_grid(p["grid"])
    if p.get("kind") and p["kind"] != "hermite":
        kind = _kind(p)
        rho = np.atleast_1d(spectral_rho(kind, xs))
        table = Table(["x", "rho"], title=f"density {kind_name(kind)}")
        for x, r in zip(xs, rho):
            table.add(float(x), float(r))
        return table
    _require(p, "n", "t")
    N, t = int(p["n"]), float(p["t"])
    rho = np.atleast_1d(density_rho_n(N, t, xs))
    wigner = np.atleast_1d(semicircle(N, t, xs))
    table = Table(["x", "rho", "semicircle"], title=f"density N={N} t={t:g}")
    for x, r, w in zip(xs, rho, wigner):
        table.add(float(x), float(r), float(w))
    return table


def cmd_corr(p: Params) -> Table:
    _require(p, "block")
    kind = _kind(p)
    request = CorrelationRequest.of(kind, [parse_block(b) for b in p["block"]])
    table = Table(["points", "value"], title=f"correlation {kind_name(kind)}")
    table.add(request.size, multitime_correlation(request))
    return table


def cmd_fredholm(p: Params) -> Table:
    _require(p, "chi")
    kind = _kind(p)
    specs = [parse_chi(c) for c in p["chi"]]
    times = sorted({s[0] for s in specs})
    chis = step_functions(specs, times)
    grid = QuadratureGrid.for_step_functions(chis, p.get("nodes"))
    value = fredholm_generating(kind, times, chis, grid, mode=p.get("mode") or "symmetric")
    table = Table(["slices", "value"], title=f"fredholm {kind_name(kind)}")
    table.add(len(times), value)
    return table


def cmd_gap(p: Params) -> Table:
    _require(p, "a", "b")
    kind = _kind(p)
    t = float(p["t"]) if p.get("t") is not None else 0.0
    if isinstance(kind, HermiteFinite):
        _require(p, "t")
    a, b = float(p["a"]), float(p["b"])
    grid = None
    if a < b:
        grid = QuadratureGrid.for_step_functions(step_functions([(t, a, b, -1.0)], [t]), p.get("nodes"))
    value = gap_probability(kind, t, (a, b), grid, mode=p.get("mode") or "symmetric")
    table = Table(["a", "b", "probability"], title=f"gap {kind_name(kind)}")
    table.add(a, b, value)
    return table


def cmd_simulate(p: Params) -> Table:
    _require(p, "n", "times")
    config = SimulationConfig(
        N=int(p["n"]),
        times=parse_floats(p["times"]),
        dt=p.get("dt") or 1e-3,
        paths=p.get("paths") or 1000,
        seed=p.get("seed") or 0,
        scheme=p.get("scheme") or "matrix",
    )
    x0 = parse_floats(p["x"]) if p.get("x") else None
    ensemble = simulate(config, x0)
    table = Table(["path", "time", "particle", "position"], title=f"simulate {config.scheme} N={config.N}")
    if ensemble.collision_events:
        table.notes.append(f"collision_events={ensemble.collision_events}")
    if p.get("binary"):
        atomic_write(p["binary"], ensemble_binary(ensemble))
        table.notes.append(f"binary={p['binary']}")
        return table
    P, T, N = ensemble.positions.shape
    for i in range(P):
        for k in range(T):
            for j in range(N):
                table.add(i, float(ensemble.times[k]), j, float(ensemble.positions[i, k, j]))
    return table


def cmd_survival(p: Params) -> Table:
    _require(p, "t", "x")
    t, x = float(p["t"]), parse_floats(p["x"])
    method = p.get("method") or "quadrature"
    table = Table(["t", "method", "estimate", "stderr"], title="survival")
    if method == "montecarlo":
        est = survival_mc(t, x, dt=p.get("dt") or 1e-3, paths=p.get("paths") or 100_000, seed=p.get("seed") or 0)
        table.add(t, method, est.estimate, est.stderr)
    elif method == "asymptotic":
        table.add(t, method, survival_asymptotic(t, x), math.nan)
    else:
        table.add(t, method, survival(t, x, method=method), 0.0)
    return table


def cmd_limits(p: Params) -> Table:
    which = p.get("which") or "bulk"
    n_list = [int(v) for v in parse_floats(p.get("n_list") or "100,200,400")]
    probes = [parse_probe(s) for s in (p.get("probe") or [])]
    return limits_table(which, n_list, probes)


_SPECFUN: Dict[str, Callable[[Params, np.ndarray], np.ndarray]] = {
    "hermite_phi": lambda p, x: hermite_phi(int(p["n"]), x),
    "phi_tx": lambda p, x: phi_tx(int(p["n"]), float(p["t"]), x),
    "hatphi_tx": lambda p, x: hatphi_tx(int(p["n"]), float(p["t"]), x),
    "airy_ai": lambda p, x: airy_ai(x),
    "airy_ai_prime": lambda p, x: airy_ai_prime(x),
    "bessel_j": lambda p, x: bessel_j(float(p["nu"]), x),
    "bessel_i": lambda p, x: bessel_i(float(p["nu"]), x),
    "heat_kernel": lambda p, x: heat_kernel(float(p["t"]), x, 0.0),
}


def cmd_specfun(p: Params) -> Table:
    _require(p, "fn", "grid")
    fn = _SPECFUN.get(p["fn"])
    if fn is None:
        raise ArgumentError(f"unknown function {p['fn']!r}; choose from {', '.join(sorted(_SPECFUN))}")
    xs = parse_grid(p["grid"])
    values = np.atleast_1d(fn(p, xs))
    table = Table(["x", p["fn"]], title=p["fn"])
    for x, v in zip(xs, values):
        table.add(float(x), float(v))
    return table


def cmd_verify(p: Params) -> Table:
    return run_suite(p.get("suite") or "fast")


COMMANDS: Dict[str, Callable[[Params], Table]] = {
    "kernel": cmd_kernel,
    "density": cmd_density,
    "corr": cmd_corr,
    "fredholm": cmd_fredholm,
    "gap": cmd_gap,
    "simulate": cmd_simulate,
    "survival": cmd_survival,
    "limits": cmd_limits,
    "specfun": cmd_specfun,
    "verify": cmd_verify,
}
