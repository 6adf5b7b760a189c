"""Strong coupling, ``Gamma > 1/4``: imaginary order ``i mu``.

The eigenfunctions ``chi = rho**(1/2) K_{i mu}(rho)`` oscillate infinitely
often as ``rho -> 0``,

    chi ~ A rho**(1/2) csch(pi mu) sin(mu ln(rho/2) - Phi_mu),
    Phi_mu = arg Gamma(1 + i mu),

and the levels sharing a common near-origin phase form the geometric ladder
``E_n = -|E0| exp(2 pi n / mu)``.
"""
import logging
import math
from collections import namedtuple

import numpy as np

from .config import properties
from .exceptions import DomainError, OutOfRangeError
from .model import SpectrumLadder
from . import oracle, specialfn

__all__ = ('ladder', 'chi_hyper', 'chi_near_origin_hyper',
           'matching_amplitude', 'weak_coupling_amplitude', 'phase_defect',
           'orthogonality_phase_check', 'normalization_closed_hyper',
           'normalization_numeric_hyper', 'predicted_zeros', 'computed_zeros',
           'zero_table', 'ZeroRow')

logger = logging.getLogger(__name__)


ZeroRow = namedtuple('ZeroRow', ['m', 'predicted', 'computed',
                                 'relative_deviation'])


def _check_mu(mu):
    if not mu > 0:
        raise DomainError("mu must be > 0, got %r" % mu)


def _check_int(x, name):
    if isinstance(x, bool) or not isinstance(x, int):
        raise DomainError("%s must be an integer, got %r" % (name, x))


def ladder(mu, E0, n_min, n_max):
    """The bound state ladder ``E_n = -|E0| exp(2 pi n / mu)``.

    Larger ``n`` is deeper; the accumulation point at zero energy is
    ``n -> -inf``.

    Parameters
    ----------
    mu : float
        ``sqrt(Gamma - 1/4) > 0``.
    E0 : float
        The arbitrary reference scale ``|E0| > 0``.
    n_min, n_max : int
        The inclusive index range.

    Returns
    -------
    ladder : SpectrumLadder

    Raises
    ------
    OutOfRangeError
        If any exponent ``2 pi n / mu`` exceeds ``properties.exp_max`` in
        magnitude, or an energy is not representable.
    """
    _check_mu(mu)
    if not E0 > 0:
        raise DomainError("E0 must be > 0, got %r" % E0)
    _check_int(n_min, 'n_min')
    _check_int(n_max, 'n_max')
    if n_min > n_max:
        raise DomainError("n_min must be <= n_max")
    step = 2 * math.pi / mu
    worst = max(abs(n_min), abs(n_max)) * step
    if worst > properties.exp_max:
        raise OutOfRangeError("Ladder exponent %g exceeds %g for mu=%r, "
                              "n in [%d, %d]" % (worst, properties.exp_max,
                                                 mu, n_min, n_max))
    energies = [-E0 * math.exp(step * n) for n in range(n_min, n_max + 1)]
    if not all(math.isfinite(e) and e != 0 for e in energies):
        raise OutOfRangeError("Ladder energies are not representable for "
                              "E0=%r" % E0)
    return SpectrumLadder(mu=mu, E0_magnitude=E0, n_min=n_min, n_max=n_max,
                          energies=energies)


def chi_hyper(mu, rho):
    """``rho**(1/2) K_{i mu}(rho)``"""
    k = specialfn.bessel_k_imag(mu, rho).value
    return math.sqrt(rho) * k


def matching_amplitude(mu):
    """The amplitude for which :func:`chi_near_origin_hyper` is the small-rho
    limit of :func:`chi_hyper`: ``-(pi sinh(pi mu) / mu)**(1/2)``."""
    _check_mu(mu)
    return -math.sqrt(math.pi * math.sinh(math.pi * mu) / mu)


def weak_coupling_amplitude(mu):
    """The amplitude ``-sinh(pi mu) / mu``.

    With it the near-origin form tends to the ``nu = 0`` profile
    ``rho**(1/2) [psi(1) - ln(rho/2)]`` as ``mu -> 0``.
    """
    _check_mu(mu)
    return -math.sinh(math.pi * mu) / mu


def chi_near_origin_hyper(mu, rho, amplitude=1.0):
    """``amplitude rho**(1/2) csch(pi mu) sin(mu ln(rho/2) - Phi_mu)``.

    Parameters
    ----------
    mu : float
        ``mu > 0``.
    rho : float
        ``0 < rho <= 0.05``.
    amplitude : float, optional
        Overall normalization, see :func:`matching_amplitude` and
        :func:`weak_coupling_amplitude`.
    """
    _check_mu(mu)
    if not 0 < rho <= 0.05:
        raise DomainError("rho must satisfy 0 < rho <= 0.05, got %r" % rho)
    phase = mu * math.log(0.5 * rho) - specialfn.arg_gamma_1p_i(mu)
    return (amplitude * math.sqrt(rho) * math.sin(phase)
            / math.sinh(math.pi * mu))


def phase_defect(mu, e_n, e_m):
    """Distance from ``mu ln(kappa_n / kappa_m)`` to the nearest multiple of
    ``pi``, with ``kappa = sqrt(-E)``.

    Two levels have the same near-origin phase (and so are orthogonal) iff
    the defect vanishes.
    """
    _check_mu(mu)
    if not (e_n < 0 and e_m < 0):
        raise DomainError("energies must be negative")
    return abs(math.remainder(0.5 * mu * math.log(e_n / e_m), math.pi))


def orthogonality_phase_check(mu, n, m, E0=1.0):
    """The phase defect between the levels ``n`` and ``m`` of the ladder.

    Works with ``ln|E_k| = ln|E0| + 2 pi k / mu`` directly, so any pair of
    indices is accepted, including levels whose energies are not
    representable.

    Returns
    -------
    defect : float
        Zero up to rounding for any ``n != m``.
    """
    _check_mu(mu)
    if not E0 > 0:
        raise DomainError("E0 must be > 0, got %r" % E0)
    _check_int(n, 'n')
    _check_int(m, 'm')
    if n == m:
        raise DomainError("n and m must differ")
    step = 2 * math.pi / mu
    log_e0 = math.log(E0)
    log_n = log_e0 + step * n
    log_m = log_e0 + step * m
    return abs(math.remainder(0.5 * mu * (log_n - log_m), math.pi))


def normalization_closed_hyper(mu):
    """``int_0^inf rho K_{i mu}(rho)**2 d rho = pi mu / (2 sinh(pi mu))``"""
    _check_mu(mu)
    return 0.5 * math.pi * mu / math.sinh(math.pi * mu)


def normalization_numeric_hyper(mu):
    """Quadrature of ``chi_hyper**2`` over ``(0, rho_max]``."""
    _check_mu(mu)
    return oracle.integrate(lambda rho: chi_hyper(mu, rho) ** 2,
                            0, properties.rho_max, tol=1e-9).value


def predicted_zeros(mu, rho_min, rho_max):
    """Zeros ``rho_m = 2 exp((Phi_mu + m pi) / mu)`` in ``(rho_min, rho_max)``.

    Returns
    -------
    zeros : list of (int, float)
        ``(m, rho_m)`` in ascending order.
    """
    _check_mu(mu)
    if not 0 < rho_min < rho_max:
        raise DomainError("require 0 < rho_min < rho_max")
    phi = specialfn.arg_gamma_1p_i(mu)
    m_lo = math.ceil((mu * math.log(0.5 * rho_min) - phi) / math.pi)
    m_hi = math.floor((mu * math.log(0.5 * rho_max) - phi) / math.pi)
    out = []
    for m in range(m_lo, m_hi + 1):
        rho = 2 * math.exp((phi + m * math.pi) / mu)
        if rho_min < rho < rho_max:
            out.append((m, rho))
    return out


def computed_zeros(mu, rho_min, rho_max, points_per_zero=40):
    """Zeros of :func:`chi_hyper` in ``(rho_min, rho_max)``.

    Sign changes on a logarithmic grid are refined with Brent's method.
    """
    _check_mu(mu)
    if not 0 < rho_min < rho_max:
        raise DomainError("require 0 < rho_min < rho_max")
    span = math.log(rho_max / rho_min)
    n = max(int(math.ceil(points_per_zero * mu * span / math.pi)), 100)
    grid = np.geomspace(rho_min, rho_max, n + 1)
    values = [chi_hyper(mu, rho) for rho in grid]

    def f(rho):
        return chi_hyper(mu, rho)

    zeros = []
    for lo, hi, f_lo, f_hi in zip(grid[:-1], grid[1:], values[:-1],
                                  values[1:]):
        if f_lo == 0:
            zeros.append(float(lo))
        elif f_lo * f_hi < 0:
            zeros.append(oracle.brent_root(f, float(lo), float(hi)))
    logger.debug("Found %d zeros of chi_hyper for mu=%r in (%r, %r)",
                 len(zeros), mu, rho_min, rho_max)
    return zeros


def zero_table(mu, rho_max, rho_min=None):
    """Predicted against computed zeros of the hypercritical eigenfunction.

    Parameters
    ----------
    mu : float
    rho_max : float
        Upper end of the search, at most 0.05.
    rho_min : float, optional
        Lower end. Defaults to ``rho_max * exp(-3 pi / mu)``, which holds
        about three zeros.

    Returns
    -------
    rows : list of ZeroRow
        One row per predicted zero, paired with the nearest computed zero
        (in ``ln rho``).
    """
    _check_mu(mu)
    if not 0 < rho_max <= 0.05:
        raise DomainError("rho_max must satisfy 0 < rho_max <= 0.05, got %r"
                          % rho_max)
    if rho_min is None:
        rho_min = rho_max * math.exp(-3 * math.pi / mu)
    computed = computed_zeros(mu, rho_min, rho_max)
    rows = []
    for m, predicted in predicted_zeros(mu, rho_min, rho_max):
        if not computed:
            break
        nearest = min(computed,
                      key=lambda z: abs(math.log(z / predicted)))
        rows.append(ZeroRow(m, predicted, nearest,
                            abs(nearest - predicted) / predicted))
    return rows
