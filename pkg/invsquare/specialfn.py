"""Special functions of real and imaginary order.

All functions take double precision arguments and return Python floats.
Bessel functions return an :class:`~invsquare.model.EvalResult` carrying a
conservative absolute error estimate, derived from the relative accuracy
listed in ``ACCURACY`` (or the quadrature error for ``K_{i mu}``). For
the oscillating J and Y the accuracy is applied to the larger of the value
and the envelope ``sqrt(2 / (pi x))``, so the bound stays finite at zeros.
"""
import logging
import math

from scipy import integrate, special

from .config import properties
from .exceptions import ConvergenceError, DomainError, OutOfRangeError
from .model import EvalResult, Order, OrderKind

__all__ = ('gamma_fn', 'ln_gamma', 'digamma', 'arg_gamma_1p_i',
           'bessel_k', 'bessel_i', 'bessel_j', 'bessel_y', 'bessel_k_imag',
           'bessel_kp', 'bessel_ip', 'bessel_jp', 'bessel_yp',
           'evaluate', 'FUNCTIONS', 'ACCURACY')

logger = logging.getLogger(__name__)


#: Documented relative accuracy of each function over its contract range.
ACCURACY = {'gamma': 1e-14,
            'ln_gamma': 1e-14,
            'digamma': 1e-13,
            'arg_gamma_1p_i': 1e-14,
            'bessel_k': 1e-13,
            'bessel_i': 1e-14,
            'bessel_j': 1e-12,
            'bessel_y': 1e-12,
            'bessel_kp': 1e-12,
            'bessel_ip': 1e-12,
            'bessel_jp': 1e-11,
            'bessel_yp': 1e-11}


def _check_positive(x, name='x'):
    if not x > 0:
        raise DomainError("%s must be > 0, got %r" % (name, x))


def _check_nonnegative(x, name='x'):
    if not x >= 0:
        raise DomainError("%s must be >= 0, got %r" % (name, x))


def _real_order(order):
    if not isinstance(order, Order):
        return Order.real(order).value
    if order.kind != OrderKind.REAL:
        raise DomainError("Expected a real order, got %r" % order)
    return order.value


def _imag_order(order):
    if not isinstance(order, Order):
        return Order.imaginary(order).value
    if order.kind != OrderKind.IMAGINARY:
        raise DomainError("Expected an imaginary order, got %r" % order)
    return order.value


def _result(value, name, envelope=0.0):
    value = float(value)
    if not math.isfinite(value):
        raise OutOfRangeError("%s overflowed double precision" % name)
    return EvalResult(value, max(abs(value), envelope) * ACCURACY[name])


def _oscillatory_envelope(x):
    # large-argument amplitude of J, Y and their derivatives
    return math.sqrt(2 / (math.pi * x)) if x > 0 else 0.0


def gamma_fn(x):
    """The gamma function for ``x > 0``."""
    _check_positive(x)
    out = float(special.gamma(x))
    if not math.isfinite(out):
        raise OutOfRangeError("gamma(%r) overflows double precision" % x)
    return out


def ln_gamma(x):
    """The natural logarithm of the gamma function for ``x > 0``."""
    _check_positive(x)
    return float(special.gammaln(x))


def digamma(x):
    """The digamma function ``psi(x) = Gamma'(x)/Gamma(x)`` for ``x > 0``."""
    _check_positive(x)
    return float(special.psi(x))


def arg_gamma_1p_i(mu):
    """The principal argument of ``Gamma(1 + i mu)``.

    Parameters
    ----------
    mu : float
        Positive real.

    Returns
    -------
    phase : float
        The argument in ``(-pi, pi]``. For small ``mu`` this is
        ``-euler_gamma * mu + O(mu**3)``.
    """
    _check_positive(mu, 'mu')
    return math.remainder(special.loggamma(1 + 1j * mu).imag, 2 * math.pi)


def bessel_k(order, x):
    """Modified Bessel function of the second kind ``K_nu(x)``.

    Orders below ``properties.nu_zero_threshold`` are evaluated with the
    ``nu = 0`` function, which differs from ``K_nu`` by ``O(nu**2)``.

    Parameters
    ----------
    order : Order or float
        Real order ``0 <= nu < 1``.
    x : float
        Positive argument.

    Returns
    -------
    result : EvalResult
    """
    nu = _real_order(order)
    _check_positive(x)
    if nu < properties.nu_zero_threshold:
        return _result(special.k0(x), 'bessel_k')
    return _result(special.kv(nu, x), 'bessel_k')


def bessel_i(order, x):
    """Modified Bessel function of the first kind ``I_nu(x)``, ``x >= 0``."""
    nu = _real_order(order)
    _check_nonnegative(x)
    return _result(special.iv(nu, x), 'bessel_i')


def bessel_j(order, x):
    """Bessel function of the first kind ``J_nu(x)``, ``x >= 0``."""
    nu = _real_order(order)
    _check_nonnegative(x)
    return _result(special.jv(nu, x), 'bessel_j',
                   _oscillatory_envelope(x))


def bessel_y(order, x):
    """Bessel function of the second kind ``Y_nu(x)``, ``x > 0``."""
    nu = _real_order(order)
    _check_positive(x)
    return _result(special.yv(nu, x), 'bessel_y',
                   _oscillatory_envelope(x))


def bessel_kp(order, x):
    """Derivative ``K'_nu(x)`` with respect to ``x``."""
    nu = _real_order(order)
    _check_positive(x)
    return _result(special.kvp(nu, x), 'bessel_kp')


def bessel_ip(order, x):
    """Derivative ``I'_nu(x)`` with respect to ``x``."""
    nu = _real_order(order)
    _check_positive(x)
    return _result(special.ivp(nu, x), 'bessel_ip')


def bessel_jp(order, x):
    """Derivative ``J'_nu(x)`` with respect to ``x``."""
    nu = _real_order(order)
    _check_positive(x)
    return _result(special.jvp(nu, x), 'bessel_jp', _oscillatory_envelope(x))


def bessel_yp(order, x):
    """Derivative ``Y'_nu(x)`` with respect to ``x``."""
    nu = _real_order(order)
    _check_positive(x)
    return _result(special.yvp(nu, x), 'bessel_yp', _oscillatory_envelope(x))


def bessel_k_imag(order, x):
    """Modified Bessel function of imaginary order ``K_{i mu}(x)``.

    Evaluated from the integral representation

    .. math::

        K_{i\\mu}(x) = e^{-x} \\int_0^T e^{-x(\\cosh t - 1)} \\cos(\\mu t) dt

    with the cosine weight handled by QUADPACK's oscillatory rule. The upper
    limit ``T`` is where ``x (cosh T - 1)`` reaches
    ``properties.k_imag_cutoff``; the neglected tail is included in the
    error estimate.

    Parameters
    ----------
    order : Order or float
        Imaginary order ``i mu``, given as ``Order.imaginary(mu)`` or as the
        positive float ``mu``.
    x : float
        Positive argument.

    Returns
    -------
    result : EvalResult
    """
    mu = _imag_order(order)
    _check_positive(x)
    cutoff = properties.k_imag_cutoff
    tol = properties.k_imag_tol
    t_max = math.acosh(1 + cutoff / x)

    # cosh(t) - 1 == 2 sinh(t/2)**2, without cancellation near t = 0
    def integrand(t):
        return math.exp(-2 * x * math.sinh(0.5 * t) ** 2)

    out = integrate.quad(integrand, 0, t_max, weight='cos', wvar=mu,
                         epsabs=tol, epsrel=tol, limit=properties.quad_limit,
                         full_output=1)
    value, abserr = out[0], out[1]
    if len(out) > 3:
        if not abserr <= properties.quad_slack * max(tol, tol * abs(value)):
            raise ConvergenceError("K_{i mu}(x) quadrature failed to converge "
                                   "for mu=%r, x=%r: %s" % (mu, x, out[3]))
        logger.debug("Accepted K_{i mu} quadrature for mu=%r, x=%r with "
                     "abserr=%g: %s", mu, x, abserr, out[3])

    scale = math.exp(-x)
    tail = math.exp(-cutoff) / (x * math.sinh(t_max))
    return EvalResult(scale * value, scale * (abserr + tail)
                      + abs(scale * value) * 1e-15)


#: Functions available to :func:`evaluate`, keyed by name.
FUNCTIONS = {'gamma': gamma_fn,
             'ln_gamma': ln_gamma,
             'digamma': digamma,
             'arg_gamma_1p_i': arg_gamma_1p_i,
             'bessel_k': bessel_k,
             'bessel_i': bessel_i,
             'bessel_j': bessel_j,
             'bessel_y': bessel_y,
             'bessel_k_imag': bessel_k_imag,
             'bessel_kp': bessel_kp,
             'bessel_ip': bessel_ip,
             'bessel_jp': bessel_jp,
             'bessel_yp': bessel_yp}

_ORDERLESS = ('gamma', 'ln_gamma', 'digamma', 'arg_gamma_1p_i')


def evaluate(name, x, order=None):
    """Evaluate a special function by name.

    Parameters
    ----------
    name : str
        A key of ``FUNCTIONS``.
    x : float
        The argument (``mu`` for ``arg_gamma_1p_i``).
    order : float, optional
        The order, required for the Bessel functions. For ``bessel_k_imag``
        this is ``mu``.

    Returns
    -------
    result : EvalResult
    """
    try:
        func = FUNCTIONS[name]
    except KeyError:
        raise DomainError("Unknown function %r" % name)
    if name in _ORDERLESS:
        if order is not None:
            raise DomainError("%s takes no order" % name)
        value = func(x)
        return EvalResult(value, abs(value) * ACCURACY[name])
    if order is None:
        raise DomainError("%s requires an order" % name)
    return func(order, x)
