import math

import numpy as np
import pytest
from scipy import special

from dpk.errors import ArgumentError, DomainError, KernelDivisionError, NumericalConsistencyError, PrecisionError
from dpk.kernels import (
    Airy,
    Bessel,
    HermiteFinite,
    Sine,
    SpaceTimePoint,
    bessel_heat_kernel,
    bound1_diagnostic,
    bulk_scaled_kernel,
    delta_t,
    delta_t_spectral,
    density_rho_n,
    edge_scaled_kernel,
    edge_shift,
    equal_time_matrix,
    g_matrix,
    gbar_matrix,
    heat_matrix,
    hermite_equal_time,
    hermite_kernel_matrix,
    kernel_eval,
    kernel_matrix,
    palm_density,
    palm_kernel,
    parse_kind,
    semicircle,
    semicircle_scaled,
    spectral_g,
    spectral_gbar,
    spectral_rho,
)
from dpk.quadrature import composite_rule, quad
from dpk.specfun import heat_kernel


# Kinds

def test_parse_kind():
    assert parse_kind("hermite", n=4) == HermiteFinite(4)
    assert parse_kind("Sine") == Sine()
    assert parse_kind("bessel", nu=0.5) == Bessel(0.5)
    with pytest.raises(ArgumentError):
        parse_kind("bessel")
    with pytest.raises(ArgumentError):
        parse_kind("laguerre")


def test_kind_validation():
    with pytest.raises(DomainError):
        HermiteFinite(0)
    with pytest.raises(DomainError):
        Bessel(-1.0)


# Finite Hermite kernel

def test_finite_and_tail_branches_sum_to_the_heat_kernel():
    t_a, t_b = 1.0, 0.5
    xs, ys = np.array([-1.0, 0.5]), np.array([0.2, 1.3])
    finite = hermite_kernel_matrix(3, t_a, xs, t_b, ys, branch="finite")
    tail = hermite_kernel_matrix(3, t_a, xs, t_b, ys, branch="tail")
    gauge = np.exp(xs[:, None] ** 2 / (4.0 * t_a) - ys[None, :] ** 2 / (4.0 * t_b))
    expected = heat_kernel(t_a - t_b, xs[:, None], ys[None, :]) * gauge
    np.testing.assert_allclose(finite - tail, expected, rtol=1e-9, atol=1e-12)


def test_auto_branch_follows_time_order():
    xs = [0.1, 0.9]
    np.testing.assert_array_equal(
        hermite_kernel_matrix(2, 0.5, xs, 1.0, xs), hermite_kernel_matrix(2, 0.5, xs, 1.0, xs, branch="finite")
    )
    np.testing.assert_array_equal(
        hermite_kernel_matrix(2, 1.0, xs, 0.5, xs), hermite_kernel_matrix(2, 1.0, xs, 0.5, xs, branch="tail")
    )


def test_tail_branch_needs_decreasing_times():
    with pytest.raises(NumericalConsistencyError):
        hermite_kernel_matrix(2, 0.5, [0.0], 1.0, [0.0], branch="tail")


def test_tail_branch_refuses_ratio_next_to_one():
    with pytest.raises(PrecisionError):
        hermite_kernel_matrix(2, 1.0, [0.0], 1.0 - 1e-13, [0.0], branch="tail")


def test_equal_time_christoffel_darboux_matches_the_sum():
    xs = np.array([-2.0, -0.3, 0.0, 0.7, 2.5])
    direct = hermite_kernel_matrix(6, 0.8, xs, 0.8, xs)
    cd = hermite_equal_time(6, 0.8, xs[:, None], xs[None, :])
    np.testing.assert_allclose(cd, direct, rtol=1e-10, atol=1e-13)


@pytest.mark.parametrize("N", [1, 5, 20])
def test_density_integrates_to_particle_count(N):
    reach = 2.0 * math.sqrt(N) + 12.0
    assert quad(lambda x: density_rho_n(N, 1.0, x), -reach, reach) == pytest.approx(N, abs=1e-6)


def test_semicircle_has_mass_n():
    N, t = 10, 2.0
    edge = 2.0 * math.sqrt(N * t)
    assert quad(lambda x: semicircle(N, t, x), -edge, edge) == pytest.approx(N, rel=1e-8)


def test_semicircle_scaling_improves_with_n():
    xis = np.linspace(-0.9, 0.9, 181)

    def error(N):
        return max(abs(semicircle_scaled(N, 1.0, xi) - 2.0 / math.pi * math.sqrt(1.0 - xi * xi)) for xi in xis)

    e50, e100 = error(50), error(100)
    assert e100 <= 0.05
    assert e100 < e50


@pytest.mark.parametrize("N,t,x", [(1, 1.0, 0.3), (5, 0.8, -1.2), (20, 1.0, 4.0)])
def test_equal_time_diagonal_is_the_off_diagonal_limit(N, t, x):
    h = 1e-4
    diagonal = hermite_equal_time(N, t, x, x)
    assert hermite_equal_time(N, t, x - 0.5 * h, x + 0.5 * h) == pytest.approx(diagonal, abs=1e-6)


def test_hermite_correlation_branch_is_positive_semidefinite():
    xs = np.linspace(-2.0, 2.0, 7)
    eig = np.linalg.eigvalsh(hermite_equal_time(4, 1.0, xs[:, None], xs[None, :]))
    assert eig.min() > -1e-12


# Limit kernels

def test_sine_equal_time():
    k = equal_time_matrix(Sine(), [0.0, 0.0], [0.0, 1.0])
    assert k[0, 0] == pytest.approx(1.0 / math.pi)
    assert k[1, 1] == pytest.approx(math.sin(1.0) / math.pi)


def test_spectral_g_at_zero_time_reproduces_equal_time_kernels():
    grid = np.linspace(-2.0, 2.0, 5)
    np.testing.assert_allclose(g_matrix(Airy(), 0.0, grid, grid), equal_time_matrix(Airy(), grid, grid), atol=1e-8)
    np.testing.assert_allclose(g_matrix(Sine(), 0.0, grid, grid), equal_time_matrix(Sine(), grid, grid), atol=1e-10)
    pos = np.array([0.3, 1.0, 2.5])
    np.testing.assert_allclose(
        g_matrix(Bessel(0.5), 0.0, pos, pos), equal_time_matrix(Bessel(0.5), pos, pos), atol=1e-8
    )


def test_sine_g_depends_on_the_difference_only():
    assert spectral_g(Sine(), 0.4, 0.3, 1.1) == pytest.approx(spectral_g(Sine(), 0.4, -0.5, 0.3), abs=1e-12)


@pytest.mark.parametrize("kind,x", [(Sine(), [-1.0, 0.0, 2.0]), (Airy(), [-3.0, 0.0, 1.5])])
def test_density_is_the_kernel_diagonal(kind, x):
    rho = spectral_rho(kind, np.array(x))
    if isinstance(kind, Sine):
        np.testing.assert_allclose(rho, 1.0 / math.pi)
    else:
        ai, aip, _, _ = special.airy(np.array(x))
        np.testing.assert_allclose(rho, aip ** 2 - np.array(x) * ai ** 2, atol=1e-9)


def test_bessel_density_closed_form():
    nu = 0.5
    xs = np.array([0.3, 1.0, 4.0])
    a = 2.0 * np.sqrt(xs)
    expected = special.jv(nu, a) ** 2 - special.jv(nu - 1, a) * special.jv(nu + 1, a)
    np.testing.assert_allclose(spectral_rho(Bessel(nu), xs), expected, atol=1e-8)


def test_limit_only_operations_reject_the_finite_kernel():
    with pytest.raises(ArgumentError):
        spectral_rho(HermiteFinite(2), 0.0)
    with pytest.raises(ArgumentError):
        spectral_g(HermiteFinite(2), 0.5, 0.0, 0.0)


@pytest.mark.parametrize("kind,t,pts", [
    (Sine(), 0.5, [-0.5, 0.4, 1.2]),
    (Airy(), 0.3, [-1.0, 0.0, 0.8]),
    (Bessel(0.5), 0.5, [0.4, 1.0, 2.0]),
])
def test_gbar_direct_matches_spectral_difference(kind, t, pts):
    direct = gbar_matrix(kind, t, pts, pts, method="direct")
    spectral = gbar_matrix(kind, t, pts, pts, method="spectral")
    np.testing.assert_allclose(direct, spectral, atol=1e-7)


def test_gbar_needs_positive_time_and_known_method():
    with pytest.raises(DomainError):
        spectral_gbar(Sine(), 0.0, 0.0, 0.0)
    with pytest.raises(ArgumentError):
        spectral_gbar(Sine(), 0.5, 0.0, 0.0, method="series")


def test_kernel_matrix_picks_the_time_ordered_branch():
    x, y = 0.2, -0.7
    assert kernel_eval(Sine(), SpaceTimePoint(0.0, x), SpaceTimePoint(0.5, y)) == pytest.approx(
        spectral_g(Sine(), 0.5, x, y)
    )
    assert kernel_eval(Sine(), SpaceTimePoint(0.5, x), SpaceTimePoint(0.0, y)) == pytest.approx(
        spectral_gbar(Sine(), 0.5, x, y)
    )
    assert kernel_matrix(Airy(), 1.0, [x], 1.0, [y])[0, 0] == pytest.approx(equal_time_matrix(Airy(), [x], [y])[0, 0])


@pytest.mark.parametrize("kind,x,y", [
    (HermiteFinite(3), -1.0, 1.5),
    (Sine(), -1.0, 1.5),
    (Airy(), -1.0, 1.5),
    (Bessel(0.5), 0.4, 2.9),
])
def test_kernel_is_continuous_across_the_time_branches(kind, x, y):
    t = 1.0
    jumps = []
    for eps in (0.2, 0.1, 0.05):
        later = kernel_eval(kind, SpaceTimePoint(t, x), SpaceTimePoint(t + eps, y))
        earlier = kernel_eval(kind, SpaceTimePoint(t + eps, x), SpaceTimePoint(t, y))
        jumps.append(abs(later - earlier))
    assert jumps[0] > jumps[1] > jumps[2]
    assert jumps[2] <= 0.5 * jumps[0]


@pytest.mark.parametrize("kind,x,z", [(Sine(), 0.3, 1.1), (Airy(), -0.5, 0.7)])
def test_heat_kernel_inverts_the_spectral_g(kind, x, z):
    t, reach = 0.3, 8.0
    nodes, weights = composite_rule(np.linspace(x - reach, x + reach, 41), 16)
    delta = heat_matrix(kind, t, [x], nodes)[0]
    g = g_matrix(kind, t, nodes, [x, z])
    rho, k = (weights * delta) @ g
    assert rho == pytest.approx(spectral_rho(kind, x), abs=1e-6)
    assert k == pytest.approx(equal_time_matrix(kind, [x], [z])[0, 0], abs=1e-6)


# Heat kernels of the N-independent operators

@pytest.mark.parametrize("kind,pairs", [
    (HermiteFinite(1), [(0.0, 0.3), (-0.5, 0.8), (1.0, 1.2)]),
    (Sine(), [(0.0, 0.0), (0.0, 0.3), (-0.4, 0.9)]),
    (Airy(), [(0.0, 0.3), (-1.0, -0.5), (0.5, 1.0)]),
    (Bessel(0.5), [(0.5, 0.7), (1.0, 1.3), (2.0, 1.5)]),
])
@pytest.mark.parametrize("t", [0.25, 0.5])
def test_delta_closed_forms_match_spectral_definitions(kind, pairs, t):
    for x, y in pairs:
        assert delta_t(kind, t, x, y) == pytest.approx(delta_t_spectral(kind, t, x, y), abs=1e-7)


def test_sine_delta_is_a_probability_density():
    assert quad(lambda y: delta_t(Sine(), 0.3, 0.5, y), -20.0, 20.0) == pytest.approx(1.0, abs=1e-10)


def test_bessel_heat_kernel_is_a_symmetric_semigroup():
    nu, x, y = 0.5, 0.8, 1.4
    assert bessel_heat_kernel(nu, 0.3, x, y) == pytest.approx(bessel_heat_kernel(nu, 0.3, y, x), rel=1e-14)
    composed = quad(lambda z: bessel_heat_kernel(nu, 0.3, x, z) * bessel_heat_kernel(nu, 0.5, z, y), 0.0, 60.0)
    assert composed == pytest.approx(bessel_heat_kernel(nu, 0.8, x, y), rel=1e-8)
    with pytest.raises(DomainError):
        bessel_heat_kernel(nu, 0.3, 0.0, y)


# Palm kernels

def test_palm_density_vanishes_at_the_conditioning_point():
    assert palm_density(Sine(), 0.4, 0.4) == pytest.approx(0.0, abs=1e-14)
    far = palm_density(Sine(), 0.0, 50.0)
    assert far == pytest.approx(1.0 / math.pi, abs=1e-3)


def test_palm_of_a_rank_one_kernel_is_empty():
    assert palm_kernel(HermiteFinite(1), 0.3, -0.2, 0.8, time=1.0) == pytest.approx(0.0, abs=1e-14)


def test_hermite_palm_density_needs_the_observation_time():
    with pytest.raises(ArgumentError):
        palm_density(HermiteFinite(3), 0.0, 1.0)
    for t in (0.5, 2.0):
        k = hermite_equal_time(3, t, np.array([[1.0], [0.0]]), np.array([[1.0, 0.0]]))
        expected = k[0, 0] - k[0, 1] * k[1, 0] / k[1, 1]
        assert palm_density(HermiteFinite(3), 0.0, 1.0, time=t) == pytest.approx(expected, rel=1e-12)
    assert palm_density(HermiteFinite(3), 0.0, 1.0, time=0.5) != pytest.approx(palm_density(HermiteFinite(3), 0.0, 1.0, time=2.0))


def test_palm_kernel_at_a_zero_of_the_density():
    with pytest.raises(KernelDivisionError):
        palm_kernel(Bessel(1.0), 0.0, 0.5, 0.7)


# Scaling limits

def test_bulk_limit_converges_to_the_sine_kernel():
    errors = [abs(bulk_scaled_kernel(N, 0.0, 0.0, 0.0, 0.0) - 1.0 / math.pi) for N in (100, 200, 400)]
    assert errors[-1] <= 0.01
    assert errors[0] > errors[1] > errors[2]
    assert bulk_scaled_kernel(400, 0.0, 0.0, 0.0, 1.0) == pytest.approx(math.sin(1.0) / math.pi, abs=0.01)


def test_bulk_limit_keeps_the_time_ratio_factor():
    expected = quad(lambda u: math.exp(u * u), 0.0, 1.0) / math.pi
    assert spectral_g(Sine(), 1.0, 0.0, 0.0) == pytest.approx(expected, abs=1e-9)
    assert bulk_scaled_kernel(400, 0.0, 0.0, 1.0, 0.0) == pytest.approx(expected, abs=0.02)


def test_bulk_scaling_needs_even_n():
    with pytest.raises(ArgumentError):
        bulk_scaled_kernel(101, 0.0, 0.0, 0.0, 0.0)


def test_edge_limit_converges_to_the_airy_kernel():
    target = 0.0669874
    errors = [abs(edge_scaled_kernel(N, 0.0, 0.0, 0.0, 0.0) - target) for N in (50, 100, 200)]
    assert errors[-1] <= 0.05
    assert errors[0] > errors[1] > errors[2]


def test_edge_shift():
    assert edge_shift(8, 0.0) == pytest.approx(8.0)
    assert edge_shift(8, 1.0) == pytest.approx(8.0 + 4.0 - 1.0)


# Fourth-moment diagnostic

def test_bound1_sine_is_exact():
    for t in (1.0, 0.5, 0.25, 0.125):
        assert bound1_diagnostic(Sine(), t, 0.0) == pytest.approx(12.0 * t * t, abs=1e-9)


def test_bound1_airy_closed_form():
    for t in (1.0, 0.5, 0.25, 0.125):
        expected = math.exp(t ** 3 / 3.0) * (t ** 8 + 12.0 * t ** 5 + 12.0 * t * t)
        assert bound1_diagnostic(Airy(), t, 0.0) == pytest.approx(expected, abs=1e-8)


def test_bound1_hermite_is_order_t_squared():
    ratios = [bound1_diagnostic(HermiteFinite(1), t, 0.0) / (t * t) for t in (1.0, 0.5, 0.25, 0.125)]
    assert (max(ratios) - min(ratios)) / min(ratios) < 0.2


def test_bound1_domain():
    with pytest.raises(DomainError):
        bound1_diagnostic(Sine(), 1.5, 0.0)
    with pytest.raises(DomainError):
        bound1_diagnostic(Bessel(0.5), 0.5, 0.0)
