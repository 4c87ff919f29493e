# dpk/kernels/__init__.py
from .evaluate import bound1_diagnostic, kernel_eval, kernel_matrix, palm_density, palm_kernel, spectral_rho
from .hermite import density_rho_n, hermite_equal_time, hermite_kernel_matrix, semicircle
from .kinds import Airy, Bessel, HermiteFinite, KernelKind, LimitKind, Sine, SpaceTimePoint, is_limit, kind_name, parse_kind
from .scaling import bulk_scaled_kernel, edge_scaled_kernel, edge_shift, semicircle_scaled
from .spectral import (
    bessel_heat_kernel,
    delta_t,
    delta_t_spectral,
    equal_time_matrix,
    g_matrix,
    gbar_matrix,
    heat_matrix,
    spectral_g,
    spectral_gbar,
)

__all__ = [
    "Airy",
    "Bessel",
    "HermiteFinite",
    "KernelKind",
    "LimitKind",
    "Sine",
    "SpaceTimePoint",
    "bessel_heat_kernel",
    "bound1_diagnostic",
    "bulk_scaled_kernel",
    "delta_t",
    "delta_t_spectral",
    "density_rho_n",
    "edge_scaled_kernel",
    "edge_shift",
    "equal_time_matrix",
    "g_matrix",
    "gbar_matrix",
    "heat_matrix",
    "hermite_equal_time",
    "hermite_kernel_matrix",
    "is_limit",
    "kernel_eval",
    "kernel_matrix",
    "kind_name",
    "palm_density",
    "palm_kernel",
    "parse_kind",
    "semicircle",
    "semicircle_scaled",
    "spectral_g",
    "spectral_gbar",
    "spectral_rho",
]
