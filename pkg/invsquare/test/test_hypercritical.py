import math

import pytest

from invsquare import hypercritical, oracle, specialfn
from invsquare.exceptions import DomainError, OutOfRangeError
from invsquare.model import SpectrumLadder
from invsquare.test.conftest import rel


@pytest.mark.parametrize('mu', [0.5, 1.0, 2.0, 10.0])
def test_ladder_ratio(mu):
    spectrum = hypercritical.ladder(mu, 2.5, -3, 3)
    assert isinstance(spectrum, SpectrumLadder)
    assert spectrum.indices == list(range(-3, 4))
    assert spectrum.energies[3] == -2.5
    ratio = math.exp(2 * math.pi / mu)
    for a, b in zip(spectrum.energies, spectrum.energies[1:]):
        assert rel(b / a, ratio) <= 1e-14
        assert b < a < 0


def test_ladder_errors():
    with pytest.raises(OutOfRangeError):
        hypercritical.ladder(0.01, 1.0, 0, 2)
    with pytest.raises(OutOfRangeError):
        hypercritical.ladder(1.0, 1e300, 0, 100)
    with pytest.raises(DomainError):
        hypercritical.ladder(1.0, 1.0, 2, 1)
    with pytest.raises(DomainError):
        hypercritical.ladder(1.0, 1.0, 0.0, 1)
    with pytest.raises(DomainError):
        hypercritical.ladder(1.0, -1.0, 0, 1)
    with pytest.raises(DomainError):
        hypercritical.ladder(0.0, 1.0, 0, 1)


@pytest.mark.parametrize('mu', [0.5, 1.0, 3.0])
def test_chi_hyper_solves_radial_equation(mu):
    res = oracle.ode_residual(lambda rho: hypercritical.chi_hyper(mu, rho),
                              [1.0, 2.0, 3.0, 5.0], 0.25 + mu * mu, -1,
                              rel_step=1e-2)
    assert res <= 1e-6


def test_chi_hyper_errors():
    with pytest.raises(DomainError):
        hypercritical.chi_hyper(1.0, 0.0)
    with pytest.raises(DomainError):
        hypercritical.chi_hyper(0.0, 1.0)


@pytest.mark.parametrize('mu', [0.5, 1.0, 2.0])
@pytest.mark.parametrize('rho', [1e-4, 1e-3, 1e-2])
def test_near_origin_matches_exact(mu, rho):
    amplitude = hypercritical.matching_amplitude(mu)
    approx = hypercritical.chi_near_origin_hyper(mu, rho, amplitude)
    exact = hypercritical.chi_hyper(mu, rho)
    envelope = math.sqrt(rho * math.pi / (mu * math.sinh(math.pi * mu)))
    assert abs(approx - exact) <= 1e-3 * envelope


def test_weak_coupling_amplitude_limit():
    mu, rho = 1e-4, 0.01
    amplitude = hypercritical.weak_coupling_amplitude(mu)
    value = hypercritical.chi_near_origin_hyper(mu, rho, amplitude)
    expected = math.sqrt(rho) * (specialfn.digamma(1.0) - math.log(rho / 2))
    assert value == pytest.approx(expected, rel=1e-6)


def test_near_origin_errors():
    with pytest.raises(DomainError):
        hypercritical.chi_near_origin_hyper(1.0, 0.1)
    with pytest.raises(DomainError):
        hypercritical.chi_near_origin_hyper(1.0, 0.0)
    with pytest.raises(DomainError):
        hypercritical.matching_amplitude(-1.0)


@pytest.mark.parametrize('mu', [0.3, 1.0, 5.0])
@pytest.mark.parametrize('n, m', [(0, 1), (-2, 3), (4, -1), (0, 7)])
def test_orthogonality_phase(mu, n, m):
    assert hypercritical.orthogonality_phase_check(mu, n, m) <= 1e-10


@pytest.mark.parametrize('mu, n, m', [(0.5, 0, 60), (1.0, -200, 3),
                                      (0.01, 5, -5), (2.0, 10 ** 4, 1)])
def test_orthogonality_phase_far_apart(mu, n, m):
    # energies far outside double precision
    assert hypercritical.orthogonality_phase_check(mu, n, m) <= 1e-10
    assert hypercritical.orthogonality_phase_check(mu, n, m,
                                                   E0=1e-30) <= 1e-10


def test_phase_defect():
    assert hypercritical.phase_defect(1.0, -1.0, -2.0) == pytest.approx(
        0.5 * math.log(2))
    assert hypercritical.phase_defect(1.0, -1.0, -1.0) == 0.0
    with pytest.raises(DomainError):
        hypercritical.phase_defect(1.0, 1.0, -1.0)
    with pytest.raises(DomainError):
        hypercritical.orthogonality_phase_check(1.0, 2, 2)
    with pytest.raises(DomainError):
        hypercritical.orthogonality_phase_check(1.0, 0, 1, E0=0.0)


@pytest.mark.parametrize('mu', [0.5, 1.0])
def test_normalization(mu):
    closed = hypercritical.normalization_closed_hyper(mu)
    assert closed == pytest.approx(0.5 * math.pi * mu
                                   / math.sinh(math.pi * mu))
    assert rel(hypercritical.normalization_numeric_hyper(mu), closed) <= 1e-7


def test_predicted_zeros():
    mu = 1.0
    zeros = hypercritical.predicted_zeros(mu, 1e-6, 1e-2)
    assert zeros
    ms = [m for m, _ in zeros]
    assert ms == list(range(ms[0], ms[-1] + 1))
    for (_, a), (_, b) in zip(zeros, zeros[1:]):
        assert b / a == pytest.approx(math.exp(math.pi / mu))
    phi = specialfn.arg_gamma_1p_i(mu)
    for _, rho in zeros:
        assert math.sin(mu * math.log(rho / 2) - phi) == pytest.approx(
            0, abs=1e-12)

    with pytest.raises(DomainError):
        hypercritical.predicted_zeros(mu, 1e-2, 1e-6)


def test_computed_zeros():
    mu = 1.0
    zeros = hypercritical.computed_zeros(mu, 1e-6, 1e-2)
    assert zeros == sorted(zeros)
    scale = math.sqrt(1e-2)
    for z in zeros:
        assert abs(hypercritical.chi_hyper(mu, z)) <= 1e-10 * scale


@pytest.mark.parametrize('mu', [0.5, 1.0, 2.0])
@pytest.mark.parametrize('a, b', [(1e-6, 1e-2), (1e-3, 0.05)])
def test_zero_density(mu, a, b):
    count = len(hypercritical.computed_zeros(mu, a, b))
    expected = math.floor(mu / math.pi * math.log(b / a))
    assert abs(count - expected) <= 1


@pytest.mark.parametrize('mu', [0.5, 1.0])
def test_zero_table(mu):
    rows = hypercritical.zero_table(mu, 1e-2, rho_min=1e-6)
    assert rows
    for row in rows:
        assert row.relative_deviation <= 0.01
        assert 1e-6 < row.predicted < 1e-2

    default = hypercritical.zero_table(mu, 0.05)
    assert default

    with pytest.raises(DomainError):
        hypercritical.zero_table(mu, 0.1)
