"""Continuum states orthogonal to the subcritical bound state.

A positive energy state ``chi_1 = (k1 r)**(1/2) [A1 J_nu + B1 Y_nu](k1 r)``
is orthogonal to the bound state ``chi_0 = (k0 r)**(1/2) K_nu(k0 r)`` iff the
Wronskian ``chi_0 chi_1' - chi_1 chi_0'`` vanishes at the origin, since

    int_0^inf chi_0 chi_1 dr = W(0) / (k0**2 + k1**2).

This fixes ``A1/B1`` as a function of ``nu`` and ``k0/k1`` alone.
"""
import logging
import math

from .config import properties
from .exceptions import (ConvergenceError, DomainError, OutOfRangeError,
                         context)
from .model import ContinuumBranch, ContinuumCoefficients, ContinuumState
from . import boundstate, oracle, specialfn

__all__ = ('coefficient_ratio', 'coefficients', 'chi_continuum',
           'chi_continuum_prime', 'wronskian_boundary', 'bound_norm',
           'orthogonality_defect')

logger = logging.getLogger(__name__)


def _check_nu(nu):
    if not 0 <= nu < 0.5:
        raise DomainError("nu must satisfy 0 <= nu < 1/2, got %r" % nu)


def _check_positive(x, name):
    if not x > 0:
        raise DomainError("%s must be > 0, got %r" % (name, x))


def coefficient_ratio(nu, k0, k1):
    """The ratio ``A1/B1`` orthogonalizing a continuum state.

    Parameters
    ----------
    nu : float
        Real order, ``0 <= nu < 1/2``.
    k0 : float
        Bound state scale ``kappa``.
    k1 : float
        Continuum wave number.

    Returns
    -------
    ratio : float
        ``[(k0/k1)**(2 nu) - cos(pi nu)] csc(pi nu)`` for ``nu > 0`` and
        ``(2/pi) ln(k0/k1)`` for ``nu == 0``.

    Raises
    ------
    OutOfRangeError
        If the ratio is not representable, for extreme ``k0/k1``.
    """
    _check_nu(nu)
    _check_positive(k0, 'k0')
    _check_positive(k1, 'k1')
    log_ratio = math.log(k0) - math.log(k1)
    if nu == 0:
        return 2 / math.pi * log_ratio
    if nu < properties.nu_zero_threshold:
        context.warn("nu=%r is below nu_zero_threshold; using the nu > 0 "
                     "branch of the coefficient ratio" % nu)
    # (k0/k1)**(2 nu) - cos(pi nu), without cancellation for small nu
    try:
        numerator = (math.expm1(2 * nu * log_ratio)
                     + 2 * math.sin(0.5 * math.pi * nu) ** 2)
    except OverflowError:
        raise OutOfRangeError("(k0/k1)**(2 nu) overflows for nu=%r, k0=%r, "
                              "k1=%r" % (nu, k0, k1))
    ratio = numerator / math.sin(math.pi * nu)
    if not math.isfinite(ratio):
        raise OutOfRangeError("A1/B1 overflows for nu=%r, k0=%r, k1=%r"
                              % (nu, k0, k1))
    return ratio


def coefficients(nu, k0, k1, defect=False):
    """The orthogonalizing ratio with its branch and, optionally, the
    extrapolated orthogonality defect.

    Returns
    -------
    coefficients : ContinuumCoefficients
    """
    ratio = coefficient_ratio(nu, k0, k1)
    branch = (ContinuumBranch.NU_ZERO if nu == 0
              else ContinuumBranch.NU_NONZERO)
    value = None
    if defect:
        state = ContinuumState.orthogonalized(nu, k0, k1)
        value = orthogonality_defect(nu, k0, state)
    return ContinuumCoefficients(nu=nu, k0=k0, k1=k1, ratio=ratio,
                                 branch=branch, defect=value)


def chi_continuum(state, r):
    """``(k1 r)**(1/2) [A1 J_nu(k1 r) + B1 Y_nu(k1 r)]``"""
    _check_positive(r, 'r')
    z = state.k1 * r
    value = state.A1 * specialfn.bessel_j(state.nu, z).value
    if state.B1 != 0:
        value += state.B1 * specialfn.bessel_y(state.nu, z).value
    return math.sqrt(z) * value


def chi_continuum_prime(state, r):
    """Derivative of :func:`chi_continuum` with respect to ``r``."""
    _check_positive(r, 'r')
    nu, z = state.nu, state.k1 * r
    value = state.A1 * specialfn.bessel_j(nu, z).value
    deriv = state.A1 * specialfn.bessel_jp(nu, z).value
    if state.B1 != 0:
        value += state.B1 * specialfn.bessel_y(nu, z).value
        deriv += state.B1 * specialfn.bessel_yp(nu, z).value
    return state.k1 * (0.5 * value / math.sqrt(z) + math.sqrt(z) * deriv)


def _check_state(nu, state):
    if not isinstance(state, ContinuumState):
        raise context.TypeError("state must be a ContinuumState")
    if state.nu != nu:
        raise DomainError("state has order %r, expected %r"
                          % (state.nu, nu))


def wronskian_boundary(nu, k0, state, r):
    """``chi_0 chi_1' - chi_1 chi_0'`` at radius ``r``.

    ``chi_0`` is the bound state of scale ``k0``. The limit ``r -> 0`` is
    zero iff ``state`` is orthogonal to it.
    """
    _check_nu(nu)
    _check_positive(k0, 'k0')
    _check_positive(r, 'r')
    _check_state(nu, state)
    chi0 = boundstate.chi_nu(nu, k0 * r)
    dchi0 = k0 * boundstate.chi_prime_nu(nu, k0 * r)
    return (chi0 * chi_continuum_prime(state, r)
            - chi_continuum(state, r) * dchi0)


def bound_norm(nu, k0):
    """The norm ``(int_0^inf chi_0**2 dr)**(1/2)`` of the bound state."""
    _check_positive(k0, 'k0')
    return math.sqrt(boundstate.normalization_closed(nu) / k0)


def orthogonality_defect(nu, k0, state, eps_list=None):
    """The Abel-regularized overlap of the bound and continuum states.

    ``I(eps) = int_0^inf chi_0 chi_1 exp(-eps r) dr`` is computed by
    quadrature over ``(0, rho_max / k0]`` for each ``eps`` and extrapolated
    to ``eps = 0`` with a polynomial through all samples.

    Parameters
    ----------
    nu : float
        Real order, ``0 <= nu < 1/2``.
    k0 : float
        Bound state scale.
    state : ContinuumState
    eps_list : sequence of float, optional
        Decreasing positive regularization parameters. Defaults to
        ``properties.abel_eps``.

    Returns
    -------
    defect : float
    """
    _check_nu(nu)
    _check_positive(k0, 'k0')
    _check_state(nu, state)
    eps_list = list(properties.abel_eps if eps_list is None else eps_list)
    if len(eps_list) < 2:
        raise DomainError("eps_list needs at least 2 values")
    if not all(e > 0 for e in eps_list):
        raise DomainError("eps_list must be positive")
    if not all(a > b for a, b in zip(eps_list, eps_list[1:])):
        raise DomainError("eps_list must be strictly decreasing")

    r_max = properties.rho_max / k0
    samples = []
    for eps in eps_list:
        def integrand(r):
            return (boundstate.chi_nu(nu, k0 * r) * chi_continuum(state, r)
                    * math.exp(-eps * r))
        try:
            res = oracle.integrate(integrand, 0, r_max)
        except ConvergenceError as exc:
            raise ConvergenceError("Overlap quadrature failed at eps=%r: %s"
                                   % (eps, exc))
        logger.debug("Overlap at eps=%r: %r (abserr=%g, %d subdivisions)",
                     eps, res.value, res.abs_error_estimate, res.subdivisions)
        samples.append((eps, res.value))
    return oracle.richardson(samples)
