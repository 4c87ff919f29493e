# dpk/weylkm/__init__.py
from .chamber import Configuration, as_points, log_abs_vandermonde, require_chamber, vandermonde
from .gue import GueParams, SelbergCheck, gue_constant, gue_density, selberg_check, selberg_constant
from .schur import SchurCheck, partitions, schur_expansion_check, schur_polynomial
from .survival import survival, survival_asymptotic
from .transition import (
    AbsorbedDensity,
    abs_bm_1d,
    finite_t_transition,
    km_asymptotic,
    km_density,
    km_matrix,
    noncolliding_transition,
    nu_t,
)

__all__ = [
    "AbsorbedDensity",
    "Configuration",
    "GueParams",
    "SchurCheck",
    "SelbergCheck",
    "abs_bm_1d",
    "as_points",
    "finite_t_transition",
    "gue_constant",
    "gue_density",
    "km_asymptotic",
    "km_density",
    "km_matrix",
    "log_abs_vandermonde",
    "noncolliding_transition",
    "nu_t",
    "partitions",
    "require_chamber",
    "schur_expansion_check",
    "schur_polynomial",
    "selberg_check",
    "selberg_constant",
    "survival",
    "survival_asymptotic",
    "vandermonde",
]
