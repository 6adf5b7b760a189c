"""The cross-check suite run by ``invsquare verify``.

Each check compares a closed form against an independent numerical oracle
(or a reference constant) and reports whether it holds within tolerance.
"""
import logging
import math
from collections import namedtuple

import numpy as np

from .exceptions import InvSquareError
from .model import ContinuumState, FluxKind
from .utils import relative_difference
from . import (boundstate, continuum, coupling, hypercritical, oracle,
               wellmatch)

__all__ = ('CheckResult', 'CHECKS', 'check_names', 'run_checks')

logger = logging.getLogger(__name__)


CheckResult = namedtuple('CheckResult', ['name', 'passed', 'detail'])

CHECKS = {}


def check(name):
    def _(func):
        CHECKS[name] = func
        return func
    return _


def _within(value, expected, rtol):
    return relative_difference(value, expected) <= rtol


@check('gamma-prime-endpoints')
def check_gamma_prime_endpoints():
    lo = wellmatch.gamma_prime_limit(0.0).gamma_prime
    hi = wellmatch.gamma_prime_limit(0.5).gamma_prime
    passed = abs(lo - 1.35853) <= 1e-4 and abs(hi - 2.46740) <= 1e-4
    return passed, "gamma'(0)=%.6f, gamma'(1/2)=%.6f" % (lo, hi)


@check('bracket-roots')
def check_bracket_roots():
    half = oracle.brent_root(lambda x: x / math.tan(x) - 0.5, 1.0, 1.5)
    zero = oracle.brent_root(lambda x: x / math.tan(x), 1.4, 1.6)
    passed = abs(half - 1.16556) <= 1e-5 and abs(zero - 1.570796) <= 1e-6
    return passed, "x cot x = 1/2 at %.7f, = 0 at %.7f" % (half, zero)


@check('fit-coefficients')
def check_fit_coefficients():
    linear = wellmatch.fit_curve(1)
    quadratic = wellmatch.fit_curve(2)
    in_nu = linear.nu_coefficients()
    passed = (all(_within(c, e, 0.02) for c, e in
                  zip(linear.coefficients, (2.4867, -2.2265))) and
              all(_within(c, e, 0.02) for c, e in
                  zip(in_nu, (1.3734, 2.2265))) and
              all(_within(c, e, 0.05) for c, e in
                  zip(quadratic.coefficients, (2.4671, -1.9905, -0.4520))))
    detail = "linear=%s, quadratic=%s" % (
        ', '.join('%.4f' % c for c in linear.coefficients),
        ', '.join('%.4f' % c for c in quadratic.coefficients))
    return passed, detail


@check('closed-form-quadrature')
def check_closed_form_quadrature():
    worst = 0.0
    for nu in (0.1, 0.25, 0.4):
        closed = boundstate.energy_balance(nu, 1.0)
        numeric = boundstate.numerical_checks(nu, 1.0)
        for field in ('boundary_term', 'normalization', 'hardy_integral'):
            worst = max(worst, relative_difference(getattr(closed, field),
                                                   getattr(numeric, field)))
    passed = worst <= 1e-7 and boundstate.normalization_closed(0.0) == 0.5
    return passed, "largest relative deviation %.2e" % worst


@check('energy-balance')
def check_energy_balance():
    worst = 0.0
    negative = True
    for nu in np.linspace(0.05, 0.95, 19):
        for kappa in (0.5, 1.0, 3.0):
            checks = boundstate.energy_balance(float(nu), kappa)
            worst = max(worst, checks.consistency_residual)
            negative &= -kappa * checks.normalization < 0
    passed = worst <= 1e-10 and negative
    return passed, "largest residual %.2e" % worst


@check('numerov-cross-oracle')
def check_numerov_cross_oracle():
    worst = 0.0
    monotone = True
    for nu in (0.1, 0.25, 0.4):
        gamma = 0.25 - nu * nu
        limit = wellmatch.gamma_prime_limit(nu).gamma_prime
        xs = []
        for delta in (0.2, 0.05):
            gamma_prime = limit + delta
            x = wellmatch.finite_r0_match(gamma, gamma_prime)
            for r0 in (0.5, 1.0, 2.0):
                sol = oracle.numerov_bound_state(gamma, gamma_prime, r0)
                worst = max(worst, relative_difference(sol.x, x))
                monotone &= sol.node_count == 0
            xs.append(x)
        monotone &= xs[0] > xs[1] > 0
    passed = worst <= 1e-6 and monotone
    return passed, "largest relative deviation %.2e" % worst


@check('continuum-orthogonality')
def check_continuum_orthogonality():
    worst = 0.0
    for nu, k0, k1 in ((0.25, 1.0, 2.0), (0.0, 1.0, 3.0), (0.4, 1.0, 0.5)):
        state = ContinuumState.orthogonalized(nu, k0, k1)
        defect = continuum.orthogonality_defect(nu, k0, state)
        worst = max(worst, abs(defect) / continuum.bound_norm(nu, k0))
    shortley = ContinuumState(nu=0.25, k1=2.0, A1=1.0, B1=0.0)
    bad = (abs(continuum.orthogonality_defect(0.25, 1.0, shortley))
           / continuum.bound_norm(0.25, 1.0))
    seam = relative_difference(continuum.coefficient_ratio(1e-4, 1.0, 2.0),
                               continuum.coefficient_ratio(0.0, 1.0, 2.0))
    passed = worst <= 1e-4 and bad >= 1e-3 and seam <= 1e-3
    return passed, ("compliant %.2e, J-only %.2e, branch seam %.2e"
                    % (worst, bad, seam))


@check('hypercritical-ladder')
def check_hypercritical_ladder():
    worst_ratio = 0.0
    for mu in (0.5, 1.0, 2.0):
        energies = hypercritical.ladder(mu, 1.0, -3, 3).energies
        for a, b in zip(energies, energies[1:]):
            worst_ratio = max(worst_ratio, relative_difference(
                b / a, math.exp(2 * math.pi / mu)))
    worst_zero = 0.0
    found = True
    for mu in (0.5, 1.0):
        rows = hypercritical.zero_table(mu, 1e-2, rho_min=1e-6)
        found &= bool(rows)
        for row in rows:
            worst_zero = max(worst_zero, row.relative_deviation)
    worst_phase = max(hypercritical.orthogonality_phase_check(mu, n, m)
                      for mu in (0.7, 1.0, 3.0)
                      for n, m in ((0, 1), (-2, 3), (4, -1)))
    passed = (worst_ratio <= 1e-14 and found and worst_zero <= 0.01 and
              worst_phase <= 1e-10)
    return passed, ("ratio %.2e, zeros %.2e, phase %.2e"
                    % (worst_ratio, worst_zero, worst_phase))


@check('admissibility-partition')
def check_admissibility_partition():
    failures = 0
    for ell in (0, 1, 2):
        lower, upper = ell * (ell + 1), (ell + 0.5) ** 2
        grid = list(np.linspace(1e-3, 7.0, 1000)) + [float(lower or 1e-3),
                                                    upper]
        for gamma in grid:
            params = coupling.make_params(ell, float(gamma))
            expected = lower < gamma <= upper
            failures += coupling.bound_state_allowed(params) != expected
            if not params.is_hypercritical:
                zero = (coupling.flux_limit(params.nu).kind == FluxKind.ZERO)
                failures += zero != (params.nu < 0.5)
    return failures == 0, "%d mismatches" % failures


def check_names():
    """The names of all registered checks, in run order."""
    return list(CHECKS)


def run_checks(names=None):
    """Run the named checks (all by default).

    Returns
    -------
    results : list of CheckResult
    """
    names = check_names() if names is None else list(names)
    unknown = set(names).difference(CHECKS)
    if unknown:
        raise ValueError("Unknown checks: %s" % ', '.join(sorted(unknown)))
    results = []
    for name in names:
        try:
            passed, detail = CHECKS[name]()
        except InvSquareError as exc:
            passed, detail = False, '%s: %s' % (type(exc).__name__, exc)
        logger.debug("Check %s: passed=%s (%s)", name, passed, detail)
        results.append(CheckResult(name, bool(passed), detail))
    return results
