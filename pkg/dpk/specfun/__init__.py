# dpk/specfun/__init__.py
from .airy import airy_ai, airy_ai_prime, airy_pair
from .bessel import bessel_i, bessel_ie, bessel_j, bessel_j_prime
from .heat import heat_kernel, mehler_sum
from .hermite import HermiteStream, hatphi_tx, hermite_phi, hermite_phi_table, phi_tx

__all__ = [
    "HermiteStream",
    "airy_ai",
    "airy_ai_prime",
    "airy_pair",
    "bessel_i",
    "bessel_ie",
    "bessel_j",
    "bessel_j_prime",
    "hatphi_tx",
    "heat_kernel",
    "hermite_phi",
    "hermite_phi_table",
    "mehler_sum",
    "phi_tx",
]
