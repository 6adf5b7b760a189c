import math

import pytest

from invsquare import continuum, oracle
from invsquare.exceptions import DomainError, OutOfRangeError
from invsquare.model import (ContinuumBranch, ContinuumCoefficients,
                             ContinuumState)
from invsquare.test.conftest import rel


def test_coefficient_ratio_branches():
    assert continuum.coefficient_ratio(0.0, 1.0, 2.0) == pytest.approx(
        2 / math.pi * math.log(0.5))
    nu = 0.3
    assert continuum.coefficient_ratio(nu, 1.0, 1.0) == pytest.approx(
        math.tan(math.pi * nu / 2))
    expected = (((1 / 3) ** (2 * nu) - math.cos(math.pi * nu))
                / math.sin(math.pi * nu))
    assert continuum.coefficient_ratio(nu, 1.0, 3.0) == pytest.approx(
        expected, rel=1e-13)


@pytest.mark.parametrize('k0, k1', [(1.0, 2.0), (1.0, 0.5), (3.0, 3.1)])
def test_coefficient_ratio_continuous_at_zero(k0, k1):
    zero = continuum.coefficient_ratio(0.0, k0, k1)
    assert rel(continuum.coefficient_ratio(1e-4, k0, k1), zero) <= 1e-3


def test_coefficient_ratio_warns_below_threshold():
    with pytest.warns(UserWarning):
        value = continuum.coefficient_ratio(1e-8, 1.0, 2.0)
    assert value == pytest.approx(2 / math.pi * math.log(0.5), rel=1e-6)


@pytest.mark.parametrize('nu, k0, k1', [(0.5, 1.0, 1.0), (-0.1, 1.0, 1.0),
                                        (0.25, 0.0, 1.0), (0.25, 1.0, -1.0)])
def test_coefficient_ratio_errors(nu, k0, k1):
    with pytest.raises(DomainError):
        continuum.coefficient_ratio(nu, k0, k1)


@pytest.mark.parametrize('nu, k0, k1', [(0.49, 1.0, 1e-320),
                                        (0.25, 1e300, 1e-300)])
def test_coefficient_ratio_overflow(nu, k0, k1):
    with pytest.raises(OutOfRangeError):
        continuum.coefficient_ratio(nu, k0, k1)
    # the opposite extreme stays finite
    assert continuum.coefficient_ratio(nu, k1, k0) == pytest.approx(
        -1 / math.tan(math.pi * nu))


def test_coefficients():
    c = continuum.coefficients(0.0, 1.0, 2.0)
    assert isinstance(c, ContinuumCoefficients)
    assert c.branch == ContinuumBranch.NU_ZERO
    assert c.defect is None
    assert 'defect' not in c.to_dict()
    c = continuum.coefficients(0.25, 1.0, 2.0)
    assert c.branch == ContinuumBranch.NU_NONZERO


def test_orthogonalized_state():
    state = ContinuumState.orthogonalized(0.25, 1.0, 2.0)
    assert max(abs(state.A1), abs(state.B1)) == 1.0
    assert state.ratio == pytest.approx(
        continuum.coefficient_ratio(0.25, 1.0, 2.0))


@pytest.mark.parametrize('nu', [0.0, 0.25, 0.4])
def test_chi_continuum_solves_radial_equation(nu):
    state = ContinuumState(nu=nu, k1=1.0, A1=0.3, B1=-1.0)
    res = oracle.ode_residual(lambda r: continuum.chi_continuum(state, r),
                              [0.5, 1.0, 2.0, 7.0], 0.25 - nu * nu, 1)
    assert res <= 1e-6


def test_chi_continuum_prime():
    state = ContinuumState(nu=0.25, k1=2.0, A1=0.3, B1=-1.0)
    h = 1e-5
    for r in [0.1, 1.0, 3.0]:
        fd = (continuum.chi_continuum(state, r + h)
              - continuum.chi_continuum(state, r - h)) / (2 * h)
        assert continuum.chi_continuum_prime(state, r) == pytest.approx(
            fd, rel=1e-7, abs=1e-9)


@pytest.mark.parametrize('nu, k0, k1', [(0.25, 1.0, 2.0), (0.0, 1.0, 3.0),
                                        (0.4, 1.0, 0.5)])
def test_wronskian_vanishes_at_origin(nu, k0, k1):
    state = ContinuumState.orthogonalized(nu, k0, k1)
    assert abs(continuum.wronskian_boundary(nu, k0, state, 1e-6)) < 1e-6

    j_only = ContinuumState(nu=nu, k1=k1, A1=1.0, B1=0.0)
    assert abs(continuum.wronskian_boundary(nu, k0, j_only, 1e-6)) > 0.1


def test_bound_norm():
    assert continuum.bound_norm(0.0, 2.0) == pytest.approx(0.5)
    assert continuum.bound_norm(0.25, 1.0) == pytest.approx(
        math.sqrt(math.pi * 0.25 / (2 * math.sin(math.pi * 0.25))))


@pytest.mark.parametrize('nu, k0, k1', [(0.25, 1.0, 2.0), (0.0, 1.0, 3.0),
                                        (0.4, 1.0, 0.5)])
def test_orthogonality_defect(nu, k0, k1):
    bound = 1e-4 * continuum.bound_norm(nu, k0)
    state = ContinuumState.orthogonalized(nu, k0, k1)
    assert abs(continuum.orthogonality_defect(nu, k0, state)) <= bound


def test_orthogonality_defect_detects_j_only_state():
    nu, k0 = 0.25, 1.0
    bound = 1e-4 * continuum.bound_norm(nu, k0)
    j_only = ContinuumState(nu=nu, k1=2.0, A1=1.0, B1=0.0)
    assert abs(continuum.orthogonality_defect(nu, k0, j_only)) >= 10 * bound

    c = continuum.coefficients(nu, k0, 2.0, defect=True)
    assert abs(c.defect) <= bound


def test_orthogonality_defect_errors():
    state = ContinuumState.orthogonalized(0.25, 1.0, 2.0)
    with pytest.raises(DomainError):
        continuum.orthogonality_defect(0.25, 1.0, state, eps_list=[0.1])
    with pytest.raises(DomainError):
        continuum.orthogonality_defect(0.25, 1.0, state,
                                       eps_list=[0.05, 0.1])
    with pytest.raises(DomainError):
        continuum.orthogonality_defect(0.25, 1.0, state,
                                       eps_list=[0.1, 0.0])
    with pytest.raises(DomainError):
        continuum.orthogonality_defect(0.1, 1.0, state)
    with pytest.raises(TypeError):
        continuum.orthogonality_defect(0.25, 1.0, (1.0, 0.0))
