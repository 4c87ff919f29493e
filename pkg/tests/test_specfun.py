import math

import mpmath
import numpy as np
import pytest
from scipy import special

from dpk.config import get_settings
from dpk.errors import DomainError, RangeError
from dpk.quadrature import quad
from dpk.specfun import (
    HermiteStream,
    airy_ai,
    airy_ai_prime,
    airy_pair,
    bessel_i,
    bessel_ie,
    bessel_j,
    bessel_j_prime,
    hatphi_tx,
    heat_kernel,
    hermite_phi,
    hermite_phi_table,
    mehler_sum,
    phi_tx,
)


def phi_mp(n, x):
    mpmath.mp.dps = 50
    x = mpmath.mpf(x)
    norm = mpmath.sqrt(mpmath.power(2, n) * mpmath.factorial(n) * mpmath.sqrt(mpmath.pi))
    return float(mpmath.hermite(n, x) * mpmath.exp(-x * x / 2) / norm)


# Hermite functions

@pytest.mark.parametrize("n", [0, 1, 2, 7, 30, 200])
@pytest.mark.parametrize("x", [-3.5, -0.4, 0.0, 1.3, 6.0])
def test_hermite_phi_matches_high_precision(n, x):
    assert hermite_phi(n, x) == pytest.approx(phi_mp(n, x), rel=1e-10, abs=1e-14)


def test_hermite_phi_high_degree_stays_finite():
    n = 10_000
    xs = np.array([0.0, 50.0, math.sqrt(2 * n), math.sqrt(2 * n) + 5.0, 200.0])
    values = hermite_phi(n, xs)
    assert np.all(np.isfinite(values))
    assert np.all(np.abs(values) <= math.pi ** -0.25 + 1e-12)
    assert hermite_phi(n, 0.0) == pytest.approx(phi_mp(n, 0.0), rel=1e-8)


def test_hermite_phi_far_tail_underflows_to_zero():
    assert hermite_phi(3, 60.0) == 0.0


def test_hermite_functions_are_orthonormal():
    nodes, weights = np.polynomial.hermite.hermgauss(80)
    table = hermite_phi_table(20, nodes) * np.exp(0.5 * nodes * nodes)
    gram = (table * weights) @ table.T
    np.testing.assert_allclose(gram, np.eye(21), atol=1e-12)


def test_table_agrees_with_single_degree():
    xs = np.linspace(-4, 4, 9)
    table = hermite_phi_table(12, xs)
    for n in (0, 5, 12):
        np.testing.assert_allclose(table[n], hermite_phi(n, xs), rtol=1e-14, atol=1e-300)


def test_stream_skip_matches_take():
    stream = HermiteStream([0.3, -1.1])
    stream.skip_to(40)
    np.testing.assert_allclose(stream.value(), hermite_phi(40, np.array([0.3, -1.1])))


def test_negative_degree_is_a_domain_error():
    with pytest.raises(DomainError):
        hermite_phi(-1, 0.0)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 1), (4, 4), (2, 5), (3, 0)])
def test_phi_tx_and_hatphi_tx_are_biorthogonal(m, n):
    t = 0.7
    value = quad(lambda x: phi_tx(m, t, x) * hatphi_tx(n, t, x), -40.0, 40.0)
    assert value == pytest.approx(1.0 if m == n else 0.0, abs=1e-9)


def test_phi_tx_overflow_is_a_range_error():
    with pytest.raises(RangeError):
        phi_tx(2000, 1e-3, 0.0)


def test_phi_tx_needs_positive_time():
    with pytest.raises(DomainError):
        hatphi_tx(2, 0.0, 1.0)


# Heat kernel and Mehler

def test_heat_kernel_is_a_probability_density():
    assert quad(lambda y: heat_kernel(0.4, y, 1.0), -20, 20) == pytest.approx(1.0, abs=1e-12)


def test_heat_kernel_rejects_nonpositive_time():
    with pytest.raises(DomainError):
        heat_kernel(0.0, 0.0, 0.0)


@pytest.mark.parametrize("x,xp", [(0.0, 0.0), (-3.0, 3.0), (2.5, -1.0), (3.0, 3.0)])
def test_mehler_sum_reproduces_heat_kernel(x, xp):
    assert mehler_sum(2.0, 1.0, x, xp, 80) == pytest.approx(heat_kernel(1.0, x, xp), abs=1e-10)


def test_mehler_sum_needs_tprime_below_t():
    with pytest.raises(DomainError):
        mehler_sum(1.0, 1.0, 0.0, 0.0, 10)


# Airy

AIRY_GRID = np.concatenate([np.linspace(-15, 15, 121), [-7.0, -6.999, -7.001, 5.0, 5.001, 4.999]])


def test_airy_matches_scipy():
    ai, aip = airy_pair(AIRY_GRID)
    ref_ai, ref_aip, _, _ = special.airy(AIRY_GRID)
    scale = np.maximum(1.0, np.abs(AIRY_GRID) ** 0.25)
    np.testing.assert_allclose(ai, ref_ai, atol=1e-9)
    np.testing.assert_allclose(aip, ref_aip, atol=1e-9 * scale.max())


def test_airy_satisfies_its_differential_equation():
    cfg = get_settings().AIRY
    xs = np.linspace(-15, 15, 121)
    # central differences must not straddle a branch switch
    xs = xs[(np.abs(xs + cfg.switch_neg) > 1e-2) & (np.abs(xs - cfg.switch_pos) > 1e-2)]
    h = 1e-4
    second = (airy_ai_prime(xs + h) - airy_ai_prime(xs - h)) / (2.0 * h)
    np.testing.assert_allclose(second, xs * airy_ai(xs), atol=1e-6)


def test_airy_decaying_branch_is_relatively_accurate():
    xs = np.array([5.5, 8.0, 15.0, 30.0])
    ref_ai, ref_aip, _, _ = special.airy(xs)
    np.testing.assert_allclose(airy_ai(xs), ref_ai, rtol=1e-6)
    np.testing.assert_allclose(airy_ai_prime(xs), ref_aip, rtol=1e-6)


def test_airy_values_at_origin():
    assert airy_ai(0.0) == pytest.approx(0.3550280538878172, rel=1e-15)
    assert airy_ai_prime(0.0) ** 2 == pytest.approx(0.0669874, rel=1e-6)


def test_airy_scalar_and_array_shapes():
    assert isinstance(airy_ai(1.0), float)
    assert airy_ai(np.zeros((2, 3))).shape == (2, 3)


# Bessel

@pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.0, 2.7])
def test_bessel_j_matches_scipy(nu):
    xs = np.array([1e-3, 0.5, 2.0, 7.9, 8.1, 15.0, 40.0])
    np.testing.assert_allclose(bessel_j(nu, xs), special.jv(nu, xs), rtol=1e-9, atol=1e-12)


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.5])
def test_bessel_j_prime_matches_scipy(nu):
    xs = np.array([0.3, 3.0, 12.0])
    np.testing.assert_allclose(bessel_j_prime(nu, xs), special.jvp(nu, xs), rtol=1e-9, atol=1e-12)


@pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 3.0])
def test_bessel_ie_matches_scipy(nu):
    xs = np.array([0.01, 1.0, 10.0, 29.9, 30.1, 200.0, 1e4])
    np.testing.assert_allclose(bessel_ie(nu, xs), special.ive(nu, xs), rtol=1e-9)


def test_bessel_i_unscaled():
    np.testing.assert_allclose(bessel_i(1.0, [0.5, 4.0]), special.iv(1.0, [0.5, 4.0]), rtol=1e-10)


def test_bessel_values_at_origin():
    assert bessel_j(0.0, 0.0) == 1.0
    assert bessel_j(2.0, 0.0) == 0.0
    assert bessel_ie(0.0, 0.0) == 1.0


def test_bessel_domain_errors():
    with pytest.raises(DomainError):
        bessel_j(-1.0, 1.0)
    with pytest.raises(DomainError):
        bessel_ie(0.0, -1.0)
