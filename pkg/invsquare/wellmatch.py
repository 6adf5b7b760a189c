"""Matching an interior square well to the inverse-square exterior.

For ``l = 0`` the potential ``-gamma/r**2`` is replaced inside ``r0`` by the
well ``-gamma'/r0**2``. Equating the logarithmic derivatives ``r d/dr ln u``
at ``r0`` gives

    1/2 + x K'_nu(x) / K_nu(x) = Lambda**(1/2) cot Lambda**(1/2)

with ``x = kappa r0`` and ``Lambda = gamma' - x**2``. As ``r0 -> 0`` the
condition becomes ``gamma'**(1/2) cot gamma'**(1/2) = 1/2 - nu``, which fixes
``gamma'`` as a function of ``gamma`` alone.
"""
import logging
import math
from collections import namedtuple

import numpy as np

from .config import properties
from .exceptions import DomainError, NoRootError, PoleError
from .model import FitResult, WellMatchResult
from . import oracle, specialfn

__all__ = ('matching_rhs', 'gamma_prime_limit', 'gamma_prime_for_gamma',
           'finite_r0_match', 'two_term_match', 'fit_curve', 'fig1_table',
           'GammaPrimeRow')

logger = logging.getLogger(__name__)


GammaPrimeRow = namedtuple('GammaPrimeRow', ['half_minus_nu', 'gamma',
                                             'gamma_prime',
                                             'gamma_prime_linear_fit'])


def matching_rhs(Lambda):
    """``Lambda**(1/2) cot Lambda**(1/2)``.

    Parameters
    ----------
    Lambda : float
        Nonnegative; the value at ``Lambda = 0`` is the limit 1.

    Raises
    ------
    PoleError
        If ``Lambda**(1/2)`` is a nonzero multiple of ``pi``.
    """
    if not Lambda >= 0:
        raise DomainError("Lambda must be >= 0, got %r" % Lambda)
    s = math.sqrt(Lambda)
    if s < 1e-4:
        return 1.0 - Lambda / 3.0
    if math.remainder(s, math.pi) == 0:
        raise PoleError("cot has a pole at sqrt(Lambda)=%r" % s, where=Lambda)
    return s / math.tan(s)


def _check_nu(nu):
    if not 0 <= nu <= 0.5:
        raise DomainError("nu must satisfy 0 <= nu <= 1/2, got %r" % nu)


def gamma_prime_limit(nu):
    """The well strength ``gamma'`` matching order ``nu`` as ``r0 -> 0``.

    Solves ``s cot s = 1/2 - nu`` for ``s = gamma'**(1/2)`` in
    ``properties.match_bracket`` with Brent's method.

    Parameters
    ----------
    nu : float
        Real order, ``0 <= nu <= 1/2``.

    Returns
    -------
    result : WellMatchResult

    Examples
    --------
    >>> round(gamma_prime_limit(0).gamma_prime, 5)
    1.35853
    """
    _check_nu(nu)
    level = 0.5 - nu

    def f(s):
        return s / math.tan(s) - level

    lo, hi = properties.match_bracket
    s, iterations = oracle.brent_root(f, lo, hi, full_output=True)
    return WellMatchResult(gamma=0.25 - nu * nu, nu=nu, gamma_prime=s * s,
                           residual=abs(f(s)), iterations=iterations)


def gamma_prime_for_gamma(gamma):
    """:func:`gamma_prime_limit` for an ``l = 0`` coupling ``0 <= gamma <= 1/4``.
    """
    if not 0 <= gamma <= 0.25:
        raise DomainError("gamma must satisfy 0 <= gamma <= 1/4, got %r"
                          % gamma)
    result = gamma_prime_limit(math.sqrt(0.25 - gamma))
    result.gamma = float(gamma)
    return result


def _order_for(gamma):
    if not 0 <= gamma <= 0.25:
        raise DomainError("finite-r0 matching requires 0 <= gamma <= 1/4, "
                          "got %r" % gamma)
    return math.sqrt(0.25 - gamma)


def _exterior_log_derivative(nu, x):
    """``1/2 + x K'_nu(x) / K_nu(x)``"""
    return 0.5 + x * (specialfn.bessel_kp(nu, x).value
                      / specialfn.bessel_k(nu, x).value)


def finite_r0_match(gamma, gamma_prime, tol=None):
    """Solve the exact finite-``r0`` matching condition for ``x = kappa r0``.

    Parameters
    ----------
    gamma : float
        Exterior coupling with ``l = 0``, ``0 <= gamma <= 1/4``.
    gamma_prime : float
        Interior well strength, ``gamma'* < gamma' < pi**2`` where
        ``gamma'*`` is :func:`gamma_prime_limit` of the exterior order.
    tol : float, optional
        Largest accepted matching residual. Defaults to
        ``properties.root_tol``.

    Returns
    -------
    x : float
        The root in ``[properties.match_x_min, gamma'**(1/2)]``, or ``0.0``
        when ``gamma'`` is the ``r0 -> 0`` limit itself (to ``tol``).

    Raises
    ------
    NoRootError
        If ``gamma' <= gamma'*``, ``gamma' >= pi**2``, or the root lies below
        ``properties.match_x_min``.
    """
    tol = properties.root_tol if tol is None else tol
    nu = _order_for(gamma)
    if not 0 < gamma_prime < math.pi ** 2:
        raise NoRootError("gamma' must lie in (0, pi**2), got %r"
                          % gamma_prime)

    at_origin = 0.5 - nu - matching_rhs(gamma_prime)
    if abs(at_origin) <= tol:
        return 0.0
    if at_origin < 0:
        raise NoRootError("gamma'=%r is below the r0 -> 0 limit for nu=%r; "
                          "no bound state" % (gamma_prime, nu))

    def g(x):
        Lam = max(gamma_prime - x * x, 0.0)
        return _exterior_log_derivative(nu, x) - matching_rhs(Lam)

    # in ln x; near nu = 0 the root lies many decades below 1
    lo, hi = properties.match_x_min, math.sqrt(gamma_prime)
    try:
        t, iterations = oracle.brent_root(lambda t: g(math.exp(t)),
                                          math.log(lo), math.log(hi),
                                          tol=tol, full_output=True)
    except NoRootError:
        raise NoRootError("The root for gamma=%r, gamma'=%r lies below "
                          "x=%r" % (gamma, gamma_prime, lo))
    x = math.exp(t)
    logger.debug("Finite-r0 match for gamma=%r, gamma'=%r: x=%r after %d "
                 "iterations", gamma, gamma_prime, x, iterations)
    return x


def two_term_match(gamma, gamma_prime, x):
    """Matching mismatch with the two-term exterior ``A r**(1/2+nu) + B
    r**(1/2-nu)``.

    ``B/A`` is given by :func:`~invsquare.boundstate.coefficient_ratio_BA`,
    so that the exterior logarithmic derivative at ``x = kappa r0`` is

        ((1/2 + nu) + (1/2 - nu) t) / (1 + t),
        t = -Gamma(1 + nu) (x/2)**(-2 nu) / Gamma(1 - nu)

    Returns the exterior minus interior logarithmic derivative. Agrees with
    the exact condition as ``x -> 0``.
    """
    nu = _order_for(gamma)
    if not x > 0:
        raise DomainError("x must be > 0, got %r" % x)
    t = (-specialfn.gamma_fn(1 + nu) * (0.5 * x) ** (-2 * nu)
         / specialfn.gamma_fn(1 - nu))
    exterior = ((0.5 + nu) + (0.5 - nu) * t) / (1 + t)
    return exterior - matching_rhs(max(gamma_prime - x * x, 0.0))


def _sample(grid_size):
    u = np.linspace(0.0, 0.5, grid_size)
    gp = np.array([gamma_prime_limit(0.5 - ui).gamma_prime for ui in u])
    return u, gp


def fit_curve(degree, grid_size=None):
    """Least-squares fit of ``gamma'`` as a polynomial in ``(1/2 - nu)``.

    Parameters
    ----------
    degree : {1, 2}
    grid_size : int, optional
        Number of points of the uniform grid over ``(1/2 - nu)`` in
        ``[0, 1/2]``, at least 20. Defaults to ``properties.fit_grid_size``.

    Returns
    -------
    fit : FitResult
    """
    if degree not in (1, 2):
        raise DomainError("degree must be 1 or 2, got %r" % degree)
    grid_size = properties.fit_grid_size if grid_size is None else grid_size
    if isinstance(grid_size, bool) or not isinstance(grid_size, int):
        raise DomainError("grid_size must be an integer")
    if grid_size < 20:
        raise DomainError("grid_size must be >= 20, got %d" % grid_size)
    u, gp = _sample(grid_size)
    coeffs = np.polyfit(u, gp, degree)[::-1]
    deviation = np.max(np.abs(np.polynomial.Polynomial(coeffs)(u) - gp))
    return FitResult(degree=degree, coefficients=[float(c) for c in coeffs],
                     max_abs_deviation=float(deviation))


def fig1_table(n_points):
    """The ``gamma -> gamma'`` curve sampled uniformly in ``(1/2 - nu)``.

    Parameters
    ----------
    n_points : int
        At least 2.

    Returns
    -------
    rows : list of GammaPrimeRow
        Ascending in ``half_minus_nu``. The last column is the degree-1
        :func:`fit_curve` evaluated at each point.
    """
    if isinstance(n_points, bool) or not isinstance(n_points, int):
        raise DomainError("n_points must be an integer")
    if n_points < 2:
        raise DomainError("n_points must be >= 2, got %d" % n_points)
    fit = fit_curve(1)
    u, gp = _sample(n_points)
    return [GammaPrimeRow(float(ui), 0.25 - (0.5 - float(ui)) ** 2, float(g),
                    float(fit(ui)))
            for ui, g in zip(u, gp)]
