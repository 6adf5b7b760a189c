"""Coupling parameters, regime classification and admissibility.

The radial problem for ``V = -lambda / r**2`` with angular momentum ``l``
reduces to ``chi'' + (-1 + Gamma / rho**2) chi = 0`` with the effective
coupling ``Gamma = gamma - l (l + 1)`` and order ``nu = sqrt(1/4 - Gamma)``.
All comparisons against the regime boundaries are exact.
"""
import math

from .exceptions import DomainError
from .model import CouplingParams, FluxKind, FluxLimit, Regime

__all__ = ('regime_of', 'make_params', 'classify_regime', 'flux_limit',
           'bound_state_allowed')


def regime_of(ell, gamma):
    """The regime of ``(ell, gamma)``.

    - ``gamma > (ell + 1/2)**2``: ``HYPERCRITICAL``
    - ``gamma == (ell + 1/2)**2``: ``TRANSITIONAL``
    - ``ell (ell + 1) < gamma < (ell + 1/2)**2``: ``BOUND_ALLOWED``
    - otherwise: ``NO_BOUND``
    """
    critical = (ell + 0.5) ** 2
    if gamma > critical:
        return Regime.HYPERCRITICAL
    elif gamma == critical:
        return Regime.TRANSITIONAL
    elif gamma > ell * (ell + 1):
        return Regime.BOUND_ALLOWED
    return Regime.NO_BOUND


def make_params(ell, gamma):
    """Build the coupling parameters for ``(ell, gamma)``.

    Parameters
    ----------
    ell : int
        Angular momentum quantum number, ``ell >= 0``.
    gamma : float
        Dimensionless coupling ``2 m lambda / hbar**2 > 0``.

    Returns
    -------
    params : CouplingParams

    Examples
    --------
    >>> make_params(0, 0.25).regime
    Regime.TRANSITIONAL
    """
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 0:
        raise DomainError("ell must be a nonnegative integer, got %r" % ell)
    if not gamma > 0:
        raise DomainError("gamma must be > 0, got %r" % gamma)
    gamma = float(gamma)
    Gamma_eff = gamma - ell * (ell + 1)
    if Gamma_eff <= 0.25:
        nu_or_mu = math.sqrt(0.25 - Gamma_eff)
    else:
        nu_or_mu = math.sqrt(Gamma_eff - 0.25)
    return CouplingParams(ell=ell, gamma=gamma, Gamma_eff=Gamma_eff,
                          nu_or_mu=nu_or_mu, regime=regime_of(ell, gamma))


def classify_regime(params):
    """The regime of a set of coupling parameters."""
    return regime_of(params.ell, params.gamma)


def flux_limit(nu):
    """Limit of the surface flux ``-4 pi (1/2 + nu) r**(1/2 - nu)`` at r -> 0.

    Parameters
    ----------
    nu : float
        Real order, ``nu >= 0``.

    Returns
    -------
    limit : FluxLimit
        ``ZERO`` for ``nu < 1/2``, ``FINITE`` with value ``-4 pi`` for
        ``nu == 1/2`` and ``DIVERGENT`` for ``nu > 1/2``.
    """
    if not nu >= 0:
        raise DomainError("nu must be >= 0, got %r" % nu)
    if nu < 0.5:
        return FluxLimit(FluxKind.ZERO)
    elif nu == 0.5:
        return FluxLimit(FluxKind.FINITE, -4 * math.pi)
    return FluxLimit(FluxKind.DIVERGENT)


def bound_state_allowed(params):
    """Whether the pure inverse-square problem admits a bound state.

    True iff ``ell (ell + 1) < gamma <= (ell + 1/2)**2``, i.e. the order is
    real with ``0 <= nu < 1/2`` and the flux at the origin vanishes.
    """
    return classify_regime(params) in (Regime.BOUND_ALLOWED,
                                       Regime.TRANSITIONAL)
