"""Brute-force numerical machinery used to cross-check the closed forms.

Nothing here knows about the formulas it checks: the quadrature, root
finding, extrapolation and finite-difference routines are generic, and the
Numerov integrator solves the regularized radial problem directly.
"""
import logging
import math

import numpy as np
from scipy import integrate as _integrate
from scipy import optimize

from .config import properties
from .exceptions import ConvergenceError, DomainError, NoRootError
from .model import NumerovSolution, QuadratureResult

__all__ = ('integrate', 'brent_root', 'richardson', 'ode_residual',
           'numerov_bound_state')

logger = logging.getLogger(__name__)


def integrate(f, a, b, tol=None, points=None):
    """Adaptive Gauss-Kronrod quadrature of ``f`` over ``(a, b)``.

    Integrable endpoint singularities are handled by QUADPACK's
    extrapolation; ``b`` may be ``inf``.

    Parameters
    ----------
    f : callable
        Real valued integrand.
    a, b : float
        Integration limits.
    tol : float, optional
        Absolute and relative tolerance. Defaults to
        ``properties.quad_tol``.
    points : sequence of float, optional
        Interior break points (finite limits only).

    Returns
    -------
    result : QuadratureResult

    Raises
    ------
    ConvergenceError
        If QUADPACK reports a failure and its error estimate exceeds
        ``properties.quad_slack`` times the requested tolerance.
    """
    tol = properties.quad_tol if tol is None else tol
    kwargs = dict(epsabs=tol, epsrel=tol, limit=properties.quad_limit,
                  full_output=1)
    if points is not None:
        kwargs['points'] = points
    out = _integrate.quad(f, a, b, **kwargs)
    value, abserr, info = out[:3]
    if len(out) > 3:
        if not abserr <= properties.quad_slack * max(tol, tol * abs(value)):
            raise ConvergenceError("Quadrature over (%r, %r) failed to "
                                   "converge (abserr=%g): %s"
                                   % (a, b, abserr, out[3]))
        logger.debug("Accepted quadrature over (%r, %r) with abserr=%g: %s",
                     a, b, abserr, out[3])
    return QuadratureResult(value=value, abs_error_estimate=abserr,
                            subdivisions=int(info['last']))


def brent_root(f, lo, hi, tol=None, full_output=False):
    """Find a root of ``f`` in ``[lo, hi]`` with Brent's method.

    Parameters
    ----------
    f : callable
        Continuous real function.
    lo, hi : float
        The bracket. ``f(lo)`` and ``f(hi)`` must differ in sign (or one of
        them vanish).
    tol : float, optional
        Largest accepted ``|f(root)|``. Defaults to ``properties.root_tol``.
    full_output : bool, optional
        If True, also return the number of iterations.

    Returns
    -------
    root : float
    iterations : int
        Only if ``full_output``.
    """
    tol = properties.root_tol if tol is None else tol
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0 or f_hi == 0:
        root = lo if f_lo == 0 else hi
        return (root, 0) if full_output else root
    if np.sign(f_lo) == np.sign(f_hi):
        raise NoRootError("No sign change on [%r, %r]: f(lo)=%r, f(hi)=%r"
                          % (lo, hi, f_lo, f_hi))
    root, info = optimize.brentq(f, lo, hi, xtol=1e-300,
                                 maxiter=properties.root_maxiter,
                                 full_output=True, disp=False)
    if not info.converged:
        raise ConvergenceError("Root finding on [%r, %r] did not converge in "
                               "%d iterations" % (lo, hi, info.iterations))
    residual = abs(f(root))
    if residual > tol:
        raise ConvergenceError("Root %r on [%r, %r] has residual %g > %g"
                               % (root, lo, hi, residual, tol))
    logger.debug("Root %r on [%r, %r] after %d iterations, residual %g",
                 root, lo, hi, info.iterations, residual)
    return (root, info.iterations) if full_output else root


def richardson(seq, exponents=None):
    """Extrapolate a sequence ``(h, value)`` to ``h = 0``.

    The values are fit to ``sum_j c_j h**p_j`` and ``c_0`` is returned.

    Parameters
    ----------
    seq : list of (float, float)
        Samples ``(h, value)`` with distinct ``h``.
    exponents : list of float, optional
        The powers ``p_j``; the first must be 0. Defaults to
        ``0, 1, ..., len(seq) - 1`` (polynomial extrapolation, exact for
        polynomials of degree below the sample count). With fewer exponents
        than samples, the fit is least squares.

    Returns
    -------
    limit : float
    """
    if len(seq) < 2:
        raise DomainError("richardson requires at least 2 samples")
    h = np.array([s[0] for s in seq], dtype=float)
    values = np.array([s[1] for s in seq], dtype=float)
    if len(set(h)) != len(h):
        raise DomainError("richardson requires distinct h, got %r"
                          % h.tolist())
    if exponents is None:
        exponents = range(len(seq))
    exponents = list(exponents)
    if not exponents or exponents[0] != 0:
        raise DomainError("the first exponent must be 0")
    if len(exponents) > len(seq):
        raise DomainError("more exponents than samples")

    mat = h[:, None] ** np.array(exponents, dtype=float)[None, :]
    if len(exponents) == len(seq):
        coeffs = np.linalg.solve(mat, values)
    else:
        coeffs = np.linalg.lstsq(mat, values, rcond=None)[0]
    return float(coeffs[0])


def ode_residual(chi, rho_samples, Gamma_eff, energy_sign, scale=None,
                 rel_step=None):
    """Residual of ``chi'' + (energy_sign + Gamma_eff / rho**2) chi = 0``.

    The second derivative is a five-point central difference with step
    ``rel_step * min(rho, 1)``.

    Parameters
    ----------
    chi : callable
        The candidate solution.
    rho_samples : sequence of float
        Positive sample points.
    Gamma_eff : float
        The effective coupling.
    energy_sign : {-1, 1}
        -1 for bound (``E < 0``) and 1 for continuum (``E > 0``) states.
    scale : float, optional
        Lower bound of the normalization of each residual. Defaults to the
        largest ``|chi|`` over the samples.
    rel_step : float, optional
        Defaults to ``properties.fd_rel_step``.

    Returns
    -------
    residual : float
        ``max |chi'' + (energy_sign + Gamma_eff/rho**2) chi| / max(|chi|,
        scale)`` over the samples.
    """
    if energy_sign not in (-1, 1):
        raise DomainError("energy_sign must be -1 or 1")
    rel_step = properties.fd_rel_step if rel_step is None else rel_step
    rhos = [float(r) for r in rho_samples]
    if not rhos or min(rhos) <= 0:
        raise DomainError("rho_samples must be positive")
    values = [chi(r) for r in rhos]
    if scale is None:
        scale = max(abs(v) for v in values)

    worst = 0.0
    for rho, c0 in zip(rhos, values):
        h = rel_step * min(rho, 1.0)
        second = (-chi(rho + 2 * h) + 16 * chi(rho + h) - 30 * c0
                  + 16 * chi(rho - h) - chi(rho - 2 * h)) / (12 * h * h)
        res = abs(second + (energy_sign + Gamma_eff / rho ** 2) * c0)
        worst = max(worst, res / max(abs(c0), scale))
    return worst


def _numerov(F, w0, w1, h):
    """Integrate ``w'' = F w`` along ``F`` from the two initial values."""
    c = h * h / 12.0
    q = 1.0 - c * F
    w = np.empty(len(F))
    w[0], w[1] = w0, w1
    for i in range(1, len(F) - 1):
        w[i + 1] = ((12.0 - 10.0 * q[i]) * w[i] - q[i - 1] * w[i - 1]) / q[i + 1]
    return w


def _grid(start, stop, step):
    n = max(int(math.ceil(abs(stop - start) / step)), 4)
    return np.linspace(start, stop, n + 1), abs(stop - start) / n


def _sign_changes(w):
    s = np.sign(w)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


class _RegularizedWell(object):
    """The ``l = 0`` well plus tail problem on a logarithmic grid.

    With ``s = ln r`` and ``u = exp(s/2) w`` the radial equation becomes
    ``w'' = F(s) w`` with

    - ``F = 1/4 - (gamma' - x**2) (r/r0)**2`` inside ``r0``
    - ``F = kappa**2 r**2 + nu**2`` outside

    where ``x = kappa r0`` and ``nu**2 = 1/4 - gamma``.
    """
    def __init__(self, gamma, gamma_prime, r0, r_max=None):
        self.gamma = gamma
        self.gamma_prime = gamma_prime
        self.r0 = r0
        self.r_max = r_max
        self.s0 = math.log(r0)

    def interior(self, x):
        """Interior solution and its log derivative ``r u'/u`` at ``r0``."""
        Lam = self.gamma_prime - x * x
        s, h = _grid(self.s0 - properties.numerov_interior_span, self.s0,
                     properties.numerov_step)
        F = 0.25 - Lam * np.exp(2 * (s - self.s0))
        w = _numerov(F, math.exp(s[0] / 2), math.exp(s[1] / 2), h)
        # backward Taylor step at s0
        f, f1, f2 = 0.25 - Lam, -2 * Lam, -4 * Lam
        a = 1 + h * h * f / 2 - h ** 3 * f1 / 6 + h ** 4 * (f2 + f * f) / 24
        b = h + h ** 3 * f / 6 - h ** 4 * f1 / 12
        dw = (w[-1] * a - w[-2]) / b
        return w, 0.5 + dw / w[-1]

    def exterior(self, x):
        """Exterior solution (outermost point first) and log derivative."""
        kappa = x / self.r0
        r_max = properties.numerov_decay / kappa
        if self.r_max is not None:
            r_max = min(r_max, self.r_max)
        nu2 = 0.25 - self.gamma
        s, h = _grid(math.log(r_max), self.s0, properties.numerov_step)
        F = kappa * kappa * np.exp(2 * s) + nu2
        w_start = [math.exp(-kappa * r) / math.sqrt(r)
                   for r in np.exp(s[:2])]
        w = _numerov(F, w_start[0], w_start[1], h)
        # forward Taylor step at s0
        f, f1, f2 = x * x + nu2, 2 * x * x, 4 * x * x
        a = 1 + h * h * f / 2 + h ** 3 * f1 / 6 + h ** 4 * (f2 + f * f) / 24
        b = h + h ** 3 * f / 6 + h ** 4 * f1 / 12
        dw = (w[-2] - w[-1] * a) / b
        return w, 0.5 + dw / w[-1]

    def mismatch(self, x):
        return self.interior(x)[1] - self.exterior(x)[1]

    def node_count(self, x):
        return (_sign_changes(self.interior(x)[0])
                + _sign_changes(self.exterior(x)[0]))


def numerov_bound_state(gamma, gamma_prime, r0, r_max=None, E_bracket=None):
    """Ground state of the ``l = 0`` regularized potential by shooting.

    The potential is ``-gamma'/r0**2`` for ``r <= r0`` and ``-gamma/r**2``
    beyond (units ``hbar = 2m = 1``). Numerov integration on a logarithmic
    grid runs outward from ``r0 exp(-numerov_interior_span)`` and inward from
    ``r_max``; the logarithmic derivatives are matched at ``r0``.

    Parameters
    ----------
    gamma : float
        Exterior coupling, ``0 <= gamma <= 1/4``.
    gamma_prime : float
        Interior well strength, ``gamma' < pi**2``.
    r0 : float
        The regularization radius.
    r_max : float, optional
        Outer boundary. Defaults to (and is capped at)
        ``properties.numerov_decay / kappa``.
    E_bracket : tuple of float, optional
        Two negative energies straddling the ground state. Defaults to the
        full range ``-gamma'/r0**2 < E < 0``.

    Returns
    -------
    solution : NumerovSolution
    """
    if not 0 <= gamma <= 0.25:
        raise DomainError("gamma must lie in [0, 1/4], got %r" % gamma)
    if not r0 > 0:
        raise DomainError("r0 must be > 0, got %r" % r0)
    if not 0 < gamma_prime < math.pi ** 2:
        raise NoRootError("gamma' must lie in (0, pi**2) for a nodeless "
                          "interior, got %r" % gamma_prime)
    problem = _RegularizedWell(gamma, gamma_prime, r0, r_max=r_max)

    if E_bracket is None:
        lo, hi = 1e-10, math.sqrt(gamma_prime)
    else:
        e_lo, e_hi = E_bracket
        if not (e_lo < 0 and e_hi < 0):
            raise DomainError("E_bracket must contain negative energies")
        lo, hi = sorted(math.sqrt(-e) * r0 for e in (e_lo, e_hi))
        hi = min(hi, math.sqrt(gamma_prime))

    try:
        x, iterations = brent_root(problem.mismatch, lo, hi, tol=1e-8,
                                   full_output=True)
    except NoRootError:
        raise NoRootError("No bound state for gamma=%r, gamma'=%r in "
                          "x = kappa*r0 in [%r, %r]"
                          % (gamma, gamma_prime, lo, hi))
    logger.debug("Numerov shooting converged to x=%r in %d iterations",
                 x, iterations)
    return NumerovSolution(r0=r0, gamma=gamma, gamma_prime=gamma_prime,
                           energy=-(x / r0) ** 2,
                           node_count=problem.node_count(x),
                           residual=abs(problem.mismatch(x)))
