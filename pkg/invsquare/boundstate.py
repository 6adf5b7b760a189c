"""The subcritical bound state ``chi = rho**(1/2) K_nu(rho)``.

Everything is expressed in the dimensionless ``rho = kappa r`` with
``hbar = 2m = 1``. The closed forms that carry a length scale (boundary
term, Hardy integral) take ``kappa`` as an explicit factor; the
normalization integral is returned in rho-units.

The bound state energy ``-kappa**2`` is not fixed by the pure inverse-square
problem, so ``kappa`` is always an input.
"""
import logging
import math

from .config import properties
from .exceptions import DomainError, PoleError, context
from .model import BoundState, ClosedFormChecks
from . import oracle, specialfn

__all__ = ('chi_nu', 'chi', 'chi_r', 'chi_prime_nu', 'chi_near_origin_nu',
           'chi_near_origin', 'boundary_bracket', 'boundary_term_closed',
           'boundary_term_numeric', 'normalization_closed',
           'normalization_numeric', 'hardy_integrand', 'hardy_integral_closed',
           'hardy_integral_numeric', 'energy_balance', 'numerical_checks',
           'coefficient_ratio_BA')

logger = logging.getLogger(__name__)


def _check_rho(rho):
    if not rho > 0:
        raise DomainError("rho must be > 0, got %r" % rho)


def _check_kappa(kappa):
    if not kappa > 0:
        raise DomainError("kappa must be > 0, got %r" % kappa)


def _check_state(state):
    if not isinstance(state, BoundState):
        raise context.TypeError("state must be a BoundState")


def _check_open_order(nu, name):
    """Require ``0 < nu < 1``; the endpoints are poles of ``csc(pi nu)``."""
    if nu == 0 or nu == 1:
        raise PoleError("%s has a pole at nu=%r" % (name, nu), where=nu)
    if not 0 < nu < 1:
        raise DomainError("%s requires 0 < nu < 1, got %r" % (name, nu))


def _csc_pi(nu):
    return 1.0 / math.sin(math.pi * nu)


def chi_nu(nu, rho):
    """``rho**(1/2) K_nu(rho)`` for a real order ``0 <= nu < 1``."""
    _check_rho(rho)
    return math.sqrt(rho) * specialfn.bessel_k(nu, rho).value


def chi_prime_nu(nu, rho):
    """Derivative of :func:`chi_nu` with respect to ``rho``."""
    _check_rho(rho)
    k = specialfn.bessel_k(nu, rho).value
    kp = specialfn.bessel_kp(nu, rho).value
    return 0.5 * k / math.sqrt(rho) + math.sqrt(rho) * kp


def chi(state, rho):
    """The bound state eigenfunction ``rho**(1/2) K_nu(rho)``.

    Parameters
    ----------
    state : BoundState
    rho : float
        ``kappa r > 0``.

    Returns
    -------
    chi : float
        Positive for all ``rho``, decaying as ``sqrt(pi/2) exp(-rho)``.
    """
    _check_state(state)
    return chi_nu(state.nu, rho)


def chi_r(state, r):
    """The eigenfunction evaluated at the radius ``r`` (``rho = kappa r``)."""
    _check_state(state)
    return chi_nu(state.nu, state.kappa * r)


def chi_near_origin_nu(nu, rho):
    """Four-term expansion of ``rho**(1/2) K_nu(rho)`` about the origin.

    For ``nu > 0`` this is the ``n <= 1`` truncation of
    ``(pi/2) csc(pi nu) [I_{-nu} - I_nu]``; orders below
    ``properties.nu_zero_threshold`` use the logarithmic ``nu = 0`` form
    ``rho**(1/2) [psi(1) - ln(rho/2) + (rho/2)**2 (psi(2) - ln(rho/2))]``.
    The relative deviation from :func:`chi_nu` is bounded by
    ``properties.near_origin_constant * rho**(4 - nu)``.
    """
    _check_rho(rho)
    if not 0 <= nu < 1:
        raise DomainError("nu must satisfy 0 <= nu < 1, got %r" % nu)
    if rho > properties.near_origin_rho_max:
        raise DomainError("near-origin expansion requires rho <= %r, got %r"
                          % (properties.near_origin_rho_max, rho))
    half = 0.5 * rho
    if nu < properties.nu_zero_threshold:
        log_half = math.log(half)
        return math.sqrt(rho) * (specialfn.digamma(1.0) - log_half
                                 + half ** 2 * (specialfn.digamma(2.0)
                                                - log_half))
    g = specialfn.gamma_fn
    series = (half ** -nu / g(1 - nu) + half ** (2 - nu) / g(2 - nu)
              - half ** nu / g(1 + nu) - half ** (2 + nu) / g(2 + nu))
    return 0.5 * math.pi * _csc_pi(nu) * math.sqrt(rho) * series


def chi_near_origin(state, rho):
    """Near-origin expansion of the bound state, ``0 < rho <= 0.1``."""
    _check_state(state)
    return chi_near_origin_nu(state.nu, rho)


def boundary_bracket(nu, rho):
    """``chi (chi' + (nu - 1/2) chi / rho)`` at ``rho``.

    Identically equal to ``-rho K_nu(rho) K_{1-nu}(rho)``.
    """
    _check_rho(rho)
    k = specialfn.bessel_k(nu, rho).value
    kp = specialfn.bessel_kp(nu, rho).value
    return rho * k * (kp + nu * k / rho)


def boundary_term_closed(nu, kappa):
    """The evaluated boundary bracket ``(pi/2) kappa csc(pi nu)``.

    Parameters
    ----------
    nu : float
        Real order, ``0 < nu < 1``.
    kappa : float
        Energy scale, ``kappa > 0``.

    Raises
    ------
    PoleError
        At ``nu = 0`` and ``nu = 1``.
    """
    _check_open_order(nu, 'boundary term')
    _check_kappa(kappa)
    return 0.5 * math.pi * kappa * _csc_pi(nu)


def boundary_term_numeric(nu, kappa):
    """The boundary bracket evaluated from the eigenfunction.

    The bracket is sampled at ``properties.boundary_rhos`` and extrapolated
    to ``rho = 0`` with corrections in ``rho**(2 nu)`` and
    ``rho**(2 - 2 nu)``; the upper end is taken at ``properties.rho_max``.
    """
    _check_open_order(nu, 'boundary term')
    _check_kappa(kappa)
    samples = [(rho, boundary_bracket(nu, rho))
               for rho in properties.boundary_rhos]
    exponents = [0, 2 * nu]
    if 2 - 2 * nu != 2 * nu:
        exponents.append(2 - 2 * nu)
    lower = oracle.richardson(samples, exponents=exponents)
    upper = boundary_bracket(nu, properties.rho_max)
    logger.debug("Boundary bracket for nu=%r: lower=%r, upper=%r",
                 nu, lower, upper)
    return kappa * (upper - lower)


def normalization_closed(nu):
    """``int_0^inf rho K_nu(rho)**2 d rho``.

    ``pi nu / (2 sin(pi nu))`` for ``0 < nu < 1`` and its limit ``1/2`` at
    ``nu = 0``.
    """
    if not 0 <= nu < 1:
        raise DomainError("nu must satisfy 0 <= nu < 1, got %r" % nu)
    if nu == 0:
        return 0.5
    return 0.5 * math.pi * nu * _csc_pi(nu)


def _tail():
    # int_{rho_max}^inf (pi/2) exp(-2 rho) d rho
    return 0.25 * math.pi * math.exp(-2 * properties.rho_max)


def normalization_numeric(nu):
    """Quadrature of ``rho K_nu(rho)**2`` over ``(0, rho_max]`` plus tail."""
    if not 0 <= nu < 1:
        raise DomainError("nu must satisfy 0 <= nu < 1, got %r" % nu)
    res = oracle.integrate(lambda rho: chi_nu(nu, rho) ** 2,
                           0, properties.rho_max)
    return res.value + _tail()


def hardy_integrand(nu, rho):
    """``(chi' + (nu - 1/2) chi / rho)**2``, equal to ``rho K_{1-nu}**2``."""
    _check_rho(rho)
    k = specialfn.bessel_k(nu, rho).value
    kp = specialfn.bessel_kp(nu, rho).value
    return rho * (kp + nu * k / rho) ** 2


def hardy_integral_closed(nu, kappa):
    """The Hardy integral ``(pi/2) kappa (1 - nu) csc(pi nu)``.

    Raises
    ------
    PoleError
        At ``nu = 0`` and ``nu = 1``.
    """
    _check_open_order(nu, 'Hardy integral')
    _check_kappa(kappa)
    return 0.5 * math.pi * kappa * (1 - nu) * _csc_pi(nu)


def hardy_integral_numeric(nu, kappa):
    """Quadrature of :func:`hardy_integrand` times ``kappa``, plus tail."""
    _check_open_order(nu, 'Hardy integral')
    _check_kappa(kappa)
    res = oracle.integrate(lambda rho: hardy_integrand(nu, rho),
                           0, properties.rho_max)
    return kappa * (res.value + _tail())


def energy_balance(nu, kappa):
    """The closed forms and their balance ``hardy - boundary = -kappa N``.

    Parameters
    ----------
    nu : float
        Real order, ``0 < nu < 1``.
    kappa : float
        Energy scale, ``kappa > 0``.

    Returns
    -------
    checks : ClosedFormChecks
        ``consistency_residual`` is
        ``|hardy_integral - boundary_term + kappa * normalization|``.
    """
    boundary = boundary_term_closed(nu, kappa)
    hardy = hardy_integral_closed(nu, kappa)
    norm = normalization_closed(nu)
    return ClosedFormChecks(boundary_term=boundary, normalization=norm,
                            hardy_integral=hardy,
                            consistency_residual=abs(hardy - boundary
                                                     + kappa * norm))


def numerical_checks(nu, kappa):
    """The quadrature and extrapolation counterpart of :func:`energy_balance`.
    """
    boundary = boundary_term_numeric(nu, kappa)
    hardy = hardy_integral_numeric(nu, kappa)
    norm = normalization_numeric(nu)
    return ClosedFormChecks(boundary_term=boundary, normalization=norm,
                            hardy_integral=hardy,
                            consistency_residual=abs(hardy - boundary
                                                     + kappa * norm))


def coefficient_ratio_BA(nu, kappa):
    """Ratio of the ``r**(1/2 - nu)`` and ``r**(1/2 + nu)`` coefficients.

    ``B/A = -Gamma(1 + nu) (kappa/2)**(-2 nu) / Gamma(1 - nu)``, which tends
    to zero only as ``kappa -> inf``.

    Parameters
    ----------
    nu : float
        Real order, ``0 < nu < 1/2``.
    kappa : float
        Energy scale, ``kappa > 0``.
    """
    if not 0 < nu < 0.5:
        raise DomainError("nu must satisfy 0 < nu < 1/2, got %r" % nu)
    _check_kappa(kappa)
    return (-specialfn.gamma_fn(1 + nu) * (0.5 * kappa) ** (-2 * nu)
            / specialfn.gamma_fn(1 - nu))
