import math

import pytest

from invsquare import coupling
from invsquare.exceptions import DomainError
from invsquare.model import FluxKind, Regime


@pytest.mark.parametrize('ell, gamma, regime',
                         [(0, 0.1, Regime.BOUND_ALLOWED),
                          (0, 0.25, Regime.TRANSITIONAL),
                          (0, 0.3, Regime.HYPERCRITICAL),
                          (1, 2.0, Regime.NO_BOUND),
                          (1, 2.1, Regime.BOUND_ALLOWED),
                          (1, 2.25, Regime.TRANSITIONAL),
                          (2, 1.0, Regime.NO_BOUND),
                          (2, 6.25, Regime.TRANSITIONAL),
                          (2, 7.0, Regime.HYPERCRITICAL)])
def test_regime_of(ell, gamma, regime):
    assert coupling.regime_of(ell, gamma) == regime
    params = coupling.make_params(ell, gamma)
    assert params.regime == regime
    assert coupling.classify_regime(params) == regime


def test_make_params():
    p = coupling.make_params(0, 0.09)
    assert p.Gamma_eff == 0.09
    assert p.nu == pytest.approx(0.4)

    p = coupling.make_params(1, 3.25)
    assert p.Gamma_eff == 1.25
    assert p.mu == pytest.approx(1.0)
    assert p.is_hypercritical

    p = coupling.make_params(0, 0.25)
    assert p.nu == 0.0

    with pytest.raises(DomainError):
        coupling.make_params(0, 0.09).mu
    with pytest.raises(DomainError):
        coupling.make_params(0, 1.25).nu


@pytest.mark.parametrize('ell, gamma', [(-1, 0.1), (1.0, 2.1), (True, 0.1),
                                        (0, 0.0), (0, -0.1)])
def test_make_params_errors(ell, gamma):
    with pytest.raises(DomainError):
        coupling.make_params(ell, gamma)


def test_flux_limit():
    assert coupling.flux_limit(0.0).kind == FluxKind.ZERO
    assert coupling.flux_limit(0.25).kind == FluxKind.ZERO
    half = coupling.flux_limit(0.5)
    assert half.kind == FluxKind.FINITE
    assert half.value == pytest.approx(-4 * math.pi)
    assert coupling.flux_limit(0.7).kind == FluxKind.DIVERGENT
    assert coupling.flux_limit(0.7).value is None

    with pytest.raises(DomainError):
        coupling.flux_limit(-0.1)


@pytest.mark.parametrize('ell', [0, 1, 2])
def test_bound_state_allowed_window(ell):
    lower, upper = ell * (ell + 1), (ell + 0.5) ** 2
    for gamma in [lower + 1e-9, (lower + upper) / 2, upper]:
        assert coupling.bound_state_allowed(coupling.make_params(ell, gamma))
    for gamma in [upper + 1e-9, upper + 1.0]:
        assert not coupling.bound_state_allowed(
            coupling.make_params(ell, gamma))
    if lower:
        assert not coupling.bound_state_allowed(
            coupling.make_params(ell, lower))
        # the lower edge has nu = 1/2 and a finite flux
        p = coupling.make_params(ell, lower)
        assert coupling.flux_limit(p.nu).kind == FluxKind.FINITE
