import math
import numbers

import numpy as np

from .exceptions import context, DomainError
from .objects import Enum, Specification, required

__all__ = ('OrderKind', 'Order', 'EvalResult', 'Regime', 'CouplingParams',
           'FluxKind', 'FluxLimit', 'BoundState', 'ClosedFormChecks',
           'WellMatchResult', 'FitResult', 'ContinuumBranch',
           'ContinuumState', 'ContinuumCoefficients', 'SpectrumLadder',
           'QuadratureResult', 'NumerovSolution')


def _real(x):
    """Coerce real numbers (including numpy scalars) to ``float``."""
    if isinstance(x, numbers.Real) and not isinstance(x, bool):
        return float(x)
    return x


class OrderKind(Enum):
    """Enum of Bessel order kinds.

    Attributes
    ----------
    REAL : OrderKind
        Real order ``nu`` with ``0 <= nu < 1``.
    IMAGINARY : OrderKind
        Purely imaginary order ``i mu`` with ``mu > 0``.
    """
    _values = ('REAL', 'IMAGINARY')


class Order(Specification):
    """The order of a Bessel function.

    Parameters
    ----------
    kind : OrderKind or str
        Whether the order is real or purely imaginary.
    value : float
        ``nu`` for a real order, ``|nu| = mu`` for an imaginary order.
    """
    __slots__ = ('_kind', 'value')
    _params = ('kind', 'value')

    def __init__(self, kind=required, value=required):
        self._assign_required('kind', kind)
        self._assign_required('value', _real(value))
        self._validate()

    @classmethod
    def real(cls, nu):
        """A real order ``nu``"""
        return cls(OrderKind.REAL, nu)

    @classmethod
    def imaginary(cls, mu):
        """An imaginary order ``i mu``"""
        return cls(OrderKind.IMAGINARY, mu)

    @property
    def kind(self):
        return self._kind

    @kind.setter
    def kind(self, value):
        self._kind = OrderKind(value)

    @property
    def is_real(self):
        return self.kind == OrderKind.REAL

    def __repr__(self):
        if self.is_real:
            return 'Order<nu=%r>' % self.value
        return 'Order<nu=%ri>' % self.value

    def _validate(self):
        self._check_is_real('value')
        if self.is_real:
            if not 0 <= self.value < 1:
                raise DomainError("real order must satisfy 0 <= nu < 1, "
                                  "got %r" % self.value)
        elif not self.value > 0:
            raise DomainError("imaginary order must satisfy mu > 0, "
                              "got %r" % self.value)


class EvalResult(Specification):
    """The value of a special function with an error estimate.

    Parameters
    ----------
    value : float
        The computed value.
    abs_error_estimate : float
        A conservative bound on the absolute error of ``value``.
    """
    __slots__ = ('value', 'abs_error_estimate')

    def __init__(self, value=required, abs_error_estimate=0.0):
        self._assign_required('value', _real(value))
        self.abs_error_estimate = _real(abs_error_estimate)
        self._validate()

    def __float__(self):
        return self.value

    def _validate(self):
        self._check_is_real('value')
        self._check_is_real('abs_error_estimate', min=0)


class Regime(Enum):
    """Enum of coupling regimes.

    Attributes
    ----------
    BOUND_ALLOWED : Regime
        ``l(l+1) < gamma < (l+1/2)**2``, a single bound state with
        ``0 < nu < 1/2``.
    TRANSITIONAL : Regime
        ``gamma = (l+1/2)**2``, ``nu = 0``; logarithmic near-origin profile.
    NO_BOUND : Regime
        ``gamma <= l(l+1)``, ``nu >= 1/2``; no bound state.
    HYPERCRITICAL : Regime
        ``gamma > (l+1/2)**2``, imaginary order and a geometric ladder of
        bound states.
    """
    _values = ('BOUND_ALLOWED', 'TRANSITIONAL', 'NO_BOUND', 'HYPERCRITICAL')


class CouplingParams(Specification):
    """Coupling parameters of the radial problem.

    Usually created with :func:`invsquare.coupling.make_params`.

    Parameters
    ----------
    ell : int
        The angular momentum quantum number.
    gamma : float
        The dimensionless coupling ``2 m lambda / hbar**2``.
    Gamma_eff : float
        The effective coupling ``gamma - ell (ell + 1)``.
    nu_or_mu : float
        ``nu = sqrt(1/4 - Gamma_eff)`` if ``Gamma_eff <= 1/4``, otherwise
        ``mu = sqrt(Gamma_eff - 1/4)``.
    regime : Regime or str
        The coupling regime.
    """
    __slots__ = ('ell', 'gamma', 'Gamma_eff', 'nu_or_mu', '_regime')
    _params = ('ell', 'gamma', 'Gamma_eff', 'nu_or_mu', 'regime')

    def __init__(self, ell=required, gamma=required, Gamma_eff=required,
                 nu_or_mu=required, regime=required):
        self._assign_required('ell', ell)
        self._assign_required('gamma', _real(gamma))
        self._assign_required('Gamma_eff', _real(Gamma_eff))
        self._assign_required('nu_or_mu', _real(nu_or_mu))
        self._assign_required('regime', regime)
        self._validate()

    @property
    def regime(self):
        return self._regime

    @regime.setter
    def regime(self, value):
        self._regime = Regime(value)

    @property
    def is_hypercritical(self):
        return self.regime == Regime.HYPERCRITICAL

    @property
    def nu(self):
        """The real order ``nu``"""
        if self.is_hypercritical:
            raise DomainError("Hypercritical coupling has imaginary order "
                              "i*%r" % self.nu_or_mu)
        return self.nu_or_mu

    @property
    def mu(self):
        """The modulus of the imaginary order"""
        if not self.is_hypercritical:
            raise DomainError("Subcritical coupling has real order "
                              "%r" % self.nu_or_mu)
        return self.nu_or_mu

    @property
    def order(self):
        """The Bessel order as an :class:`Order`.

        Raises ``DomainError`` for real orders ``nu >= 1``, which no Bessel
        evaluation in invsquare supports."""
        if self.is_hypercritical:
            return Order.imaginary(self.nu_or_mu)
        return Order.real(self.nu_or_mu)

    def __repr__(self):
        return ('CouplingParams<ell=%d, gamma=%r, regime=%s>'
                % (self.ell, self.gamma, self.regime))

    def _validate(self):
        from .coupling import regime_of

        self._check_is_bounded_int('ell', min=0)
        self._check_is_real('gamma', min=0, strict=True)
        self._check_is_real('Gamma_eff')
        self._check_is_real('nu_or_mu', min=0)
        if self.Gamma_eff != self.gamma - self.ell * (self.ell + 1):
            raise context.ValueError("Gamma_eff must equal "
                                     "gamma - ell*(ell + 1)")
        if self.regime != regime_of(self.ell, self.gamma):
            raise context.ValueError("regime %s is inconsistent with ell=%d, "
                                     "gamma=%r" % (self.regime, self.ell,
                                                   self.gamma))


class FluxKind(Enum):
    """Enum of flux-limit outcomes.

    Attributes
    ----------
    ZERO : FluxKind
        The surface flux vanishes as the volume shrinks (``nu < 1/2``).
    FINITE : FluxKind
        A finite, nonzero limit (``nu = 1/2``).
    DIVERGENT : FluxKind
        The limit diverges (``nu > 1/2``).
    """
    _values = ('ZERO', 'FINITE', 'DIVERGENT')


class FluxLimit(Specification):
    """The limit of the surface flux around the origin.

    Parameters
    ----------
    kind : FluxKind or str
    value : float, optional
        The limit, set only for ``FINITE``.
    """
    __slots__ = ('_kind', 'value')
    _params = ('kind', 'value')

    def __init__(self, kind=required, value=None):
        self._assign_required('kind', kind)
        self.value = _real(value)
        self._validate()

    @property
    def kind(self):
        return self._kind

    @kind.setter
    def kind(self, value):
        self._kind = FluxKind(value)

    def _validate(self):
        self._check_is_real('value', nullable=True)
        if (self.value is not None) != (self.kind == FluxKind.FINITE):
            raise context.ValueError("value must be set iff kind is FINITE")


class BoundState(Specification):
    """A subcritical bound state.

    Parameters
    ----------
    params : CouplingParams
        Must be in the ``BOUND_ALLOWED`` or ``TRANSITIONAL`` regime.
    kappa : float
        The energy scale ``kappa = sqrt(-2 m E / hbar**2) > 0``. The bound
        state energy is ``-kappa**2`` in ``hbar = 2m = 1`` units.
    """
    __slots__ = ('params', 'kappa')

    def __init__(self, params=required, kappa=required):
        self._assign_required('params', params)
        self._assign_required('kappa', _real(kappa))
        self._validate()

    @property
    def nu(self):
        return self.params.nu

    @property
    def energy(self):
        """The energy ``-kappa**2`` (``hbar = 2m = 1``)"""
        return -self.kappa ** 2

    def __repr__(self):
        return 'BoundState<nu=%r, kappa=%r>' % (self.params.nu_or_mu,
                                                self.kappa)

    def _validate(self):
        self._check_is_type('params', CouplingParams)
        self._check_is_real('kappa', min=0, strict=True)
        if self.params.regime not in (Regime.BOUND_ALLOWED,
                                      Regime.TRANSITIONAL):
            raise DomainError("No bound state exists in the %s regime"
                              % self.params.regime)

    @classmethod
    def from_dict(cls, obj):
        cls._check_keys(obj)
        obj = dict(obj)
        params = obj.pop('params', required)
        if isinstance(params, dict):
            params = CouplingParams.from_dict(params)
        return cls(params=params, **obj)


class ClosedFormChecks(Specification):
    """The three closed-form integrals of a bound state and their balance.

    Parameters
    ----------
    boundary_term : float
        The evaluated boundary bracket, r-units.
    normalization : float
        ``int_0^inf rho K_nu(rho)**2 d rho``, rho-units.
    hardy_integral : float
        The Hardy integral, r-units.
    consistency_residual : float
        ``|hardy_integral - boundary_term + kappa * normalization|``.
    """
    __slots__ = ('boundary_term', 'normalization', 'hardy_integral',
                 'consistency_residual')

    def __init__(self, boundary_term=required, normalization=required,
                 hardy_integral=required, consistency_residual=required):
        self._assign_required('boundary_term', _real(boundary_term))
        self._assign_required('normalization', _real(normalization))
        self._assign_required('hardy_integral', _real(hardy_integral))
        self._assign_required('consistency_residual',
                              _real(consistency_residual))
        self._validate()

    def _validate(self):
        self._check_is_real('boundary_term')
        self._check_is_real('normalization')
        self._check_is_real('hardy_integral')
        self._check_is_real('consistency_residual', min=0)


class WellMatchResult(Specification):
    """The interior well strength matched to an exterior coupling.

    Parameters
    ----------
    gamma : float
        The exterior coupling.
    nu : float
        The exterior order.
    gamma_prime : float
        The interior well strength ``2 m lambda' / hbar**2``.
    residual : float
        ``|sqrt(gamma') cot sqrt(gamma') - (1/2 - nu)|``.
    iterations : int
        Root-finder iterations.
    """
    __slots__ = ('gamma', 'nu', 'gamma_prime', 'residual', 'iterations')

    def __init__(self, gamma=required, nu=required, gamma_prime=required,
                 residual=required, iterations=0):
        self._assign_required('gamma', _real(gamma))
        self._assign_required('nu', _real(nu))
        self._assign_required('gamma_prime', _real(gamma_prime))
        self._assign_required('residual', _real(residual))
        self.iterations = iterations
        self._validate()

    def _validate(self):
        self._check_is_real('gamma')
        self._check_is_real('nu', min=0)
        self._check_is_real('gamma_prime', min=0, strict=True)
        self._check_is_real('residual', min=0)
        self._check_is_bounded_int('iterations', min=0)


class FitResult(Specification):
    """A least-squares polynomial fit of ``gamma'`` in ``(1/2 - nu)``.

    Parameters
    ----------
    degree : int
        1 or 2.
    coefficients : list of float
        Constant-first coefficients.
    max_abs_deviation : float
        Largest absolute deviation of the fit over its grid.
    """
    __slots__ = ('degree', 'coefficients', 'max_abs_deviation')

    def __init__(self, degree=required, coefficients=required,
                 max_abs_deviation=required):
        self._assign_required('degree', degree)
        self._assign_required('coefficients',
                              [_real(c) for c in coefficients]
                              if isinstance(coefficients, (list, tuple))
                              else coefficients)
        self._assign_required('max_abs_deviation', _real(max_abs_deviation))
        self._validate()

    def __call__(self, half_minus_nu):
        """Evaluate the fit at ``(1/2 - nu)``"""
        return np.polynomial.Polynomial(self.coefficients)(half_minus_nu)

    def nu_coefficients(self):
        """The same polynomial re-expanded in powers of ``nu``.

        Returns constant-first coefficients; for a degree-1 fit these are
        the ``(a, b)`` of ``gamma' ~ a + b nu``."""
        poly = np.polynomial.Polynomial(self.coefficients)
        in_nu = poly(np.polynomial.Polynomial([0.5, -1.0]))
        coef = list(in_nu.coef) + [0.0] * (self.degree + 1 - len(in_nu.coef))
        return [float(c) for c in coef]

    def _validate(self):
        if self.degree not in (1, 2):
            raise context.ValueError("degree must be 1 or 2")
        self._check_is_list_of('coefficients', float)
        if len(self.coefficients) != self.degree + 1:
            raise context.ValueError("expected %d coefficients for degree %d"
                                     % (self.degree + 1, self.degree))
        self._check_is_real('max_abs_deviation', min=0)


class ContinuumBranch(Enum):
    """Enum of the two branches of the orthogonalizing coefficient ratio.

    Attributes
    ----------
    NU_ZERO : ContinuumBranch
        ``nu = 0``, logarithmic ratio.
    NU_NONZERO : ContinuumBranch
        ``nu > 0``, power-law ratio.
    """
    _values = ('NU_ZERO', 'NU_NONZERO')


class ContinuumState(Specification):
    """A positive energy state ``(k1 r)**(1/2) [A1 J_nu + B1 Y_nu](k1 r)``.

    The coefficients are rescaled on construction so that
    ``max(|A1|, |B1|) = 1``.

    Parameters
    ----------
    nu : float
        The order, ``0 <= nu < 1/2``.
    k1 : float
        The wave number ``sqrt(2 m E1 / hbar**2) > 0``.
    A1, B1 : float
        The (unnormalized) coefficients of ``J_nu`` and ``Y_nu``.
    """
    __slots__ = ('nu', 'k1', 'A1', 'B1')

    def __init__(self, nu=required, k1=required, A1=required, B1=required):
        self._assign_required('nu', _real(nu))
        self._assign_required('k1', _real(k1))
        self._assign_required('A1', _real(A1))
        self._assign_required('B1', _real(B1))
        self._validate()
        scale = max(abs(self.A1), abs(self.B1))
        self.A1 = self.A1 / scale
        self.B1 = self.B1 / scale

    @classmethod
    def orthogonalized(cls, nu, k0, k1):
        """The state orthogonal to the bound state of scale ``k0``"""
        from .continuum import coefficient_ratio
        ratio = coefficient_ratio(nu, k0, k1)
        return cls(nu=nu, k1=k1, A1=ratio, B1=1.0)

    @property
    def ratio(self):
        """``A1 / B1`` (``inf`` for a pure ``J_nu`` state)"""
        if self.B1 == 0:
            return math.copysign(math.inf, self.A1)
        return self.A1 / self.B1

    def __repr__(self):
        return ('ContinuumState<nu=%r, k1=%r, A1=%r, B1=%r>'
                % (self.nu, self.k1, self.A1, self.B1))

    def _validate(self):
        self._check_is_real('nu', min=0)
        if not self.nu < 0.5:
            raise DomainError("continuum states require 0 <= nu < 1/2")
        self._check_is_real('k1', min=0, strict=True)
        self._check_is_real('A1')
        self._check_is_real('B1')
        if self.A1 == 0 and self.B1 == 0:
            raise context.ValueError("A1 and B1 must not both vanish")


class ContinuumCoefficients(Specification):
    """The orthogonalizing coefficient ratio ``A1 / B1``.

    Parameters
    ----------
    nu : float
    k0 : float
        The bound state scale.
    k1 : float
        The continuum wave number.
    ratio : float
        ``A1 / B1``.
    branch : ContinuumBranch or str
    defect : float, optional
        The extrapolated orthogonality defect, if computed.
    """
    __slots__ = ('nu', 'k0', 'k1', 'ratio', '_branch', 'defect')
    _params = ('nu', 'k0', 'k1', 'ratio', 'branch', 'defect')

    def __init__(self, nu=required, k0=required, k1=required,
                 ratio=required, branch=required, defect=None):
        self._assign_required('nu', _real(nu))
        self._assign_required('k0', _real(k0))
        self._assign_required('k1', _real(k1))
        self._assign_required('ratio', _real(ratio))
        self._assign_required('branch', branch)
        self.defect = _real(defect)
        self._validate()

    @property
    def branch(self):
        return self._branch

    @branch.setter
    def branch(self, value):
        self._branch = ContinuumBranch(value)

    def _validate(self):
        self._check_is_real('nu', min=0)
        self._check_is_real('k0', min=0, strict=True)
        self._check_is_real('k1', min=0, strict=True)
        self._check_is_real('ratio')
        self._check_is_real('defect', nullable=True)
        if (self.nu == 0) != (self.branch == ContinuumBranch.NU_ZERO):
            raise context.ValueError("branch %s is inconsistent with nu=%r"
                                     % (self.branch, self.nu))


class SpectrumLadder(Specification):
    """The geometric bound state ladder of a hypercritical coupling.

    Parameters
    ----------
    mu : float
        ``|nu| = sqrt(Gamma_eff - 1/4)``.
    E0_magnitude : float
        The arbitrary reference scale ``|E0|``.
    n_min, n_max : int
        The index range, inclusive.
    energies : list of float
        ``E_n = -|E0| exp(2 pi n / mu)`` for ``n_min <= n <= n_max``.
    """
    __slots__ = ('mu', 'E0_magnitude', 'n_min', 'n_max', 'energies')

    def __init__(self, mu=required, E0_magnitude=required, n_min=required,
                 n_max=required, energies=required):
        self._assign_required('mu', _real(mu))
        self._assign_required('E0_magnitude', _real(E0_magnitude))
        self._assign_required('n_min', n_min)
        self._assign_required('n_max', n_max)
        self._assign_required('energies',
                              [_real(e) for e in energies]
                              if isinstance(energies, (list, tuple))
                              else energies)
        self._validate()

    @property
    def indices(self):
        return list(range(self.n_min, self.n_max + 1))

    @property
    def kappas(self):
        """``sqrt(|E_n|)`` for each level"""
        return [math.sqrt(-e) for e in self.energies]

    def __repr__(self):
        return ('SpectrumLadder<mu=%r, n=%d..%d>'
                % (self.mu, self.n_min, self.n_max))

    def _validate(self):
        self._check_is_real('mu', min=0, strict=True)
        self._check_is_real('E0_magnitude', min=0, strict=True)
        self._check_is_type('n_min', int)
        self._check_is_type('n_max', int)
        if self.n_min > self.n_max:
            raise context.ValueError("n_min must be <= n_max")
        self._check_is_list_of('energies', float)
        if len(self.energies) != self.n_max - self.n_min + 1:
            raise context.ValueError("expected one energy per index")
        if not all(e < 0 for e in self.energies):
            raise context.ValueError("all ladder energies must be negative")


class QuadratureResult(Specification):
    """The result of an adaptive quadrature.

    Parameters
    ----------
    value : float
    abs_error_estimate : float
    subdivisions : int
        The number of subintervals used.
    """
    __slots__ = ('value', 'abs_error_estimate', 'subdivisions')

    def __init__(self, value=required, abs_error_estimate=required,
                 subdivisions=0):
        self._assign_required('value', _real(value))
        self._assign_required('abs_error_estimate', _real(abs_error_estimate))
        self.subdivisions = subdivisions
        self._validate()

    def _validate(self):
        self._check_is_real('value')
        self._check_is_real('abs_error_estimate', min=0)
        self._check_is_bounded_int('subdivisions', min=0)


class NumerovSolution(Specification):
    """A ground state of the regularized well plus inverse-square tail.

    Parameters
    ----------
    r0 : float
        The regularization radius.
    gamma : float
        The exterior coupling.
    gamma_prime : float
        The interior well strength.
    energy : float
        The eigenvalue (``hbar = 2m = 1``).
    node_count : int
        Number of nodes of the eigenfunction.
    residual : float
        Mismatch of the logarithmic derivatives at ``r0``.
    """
    __slots__ = ('r0', 'gamma', 'gamma_prime', 'energy', 'node_count',
                 'residual')

    def __init__(self, r0=required, gamma=required, gamma_prime=required,
                 energy=required, node_count=required, residual=required):
        self._assign_required('r0', _real(r0))
        self._assign_required('gamma', _real(gamma))
        self._assign_required('gamma_prime', _real(gamma_prime))
        self._assign_required('energy', _real(energy))
        self._assign_required('node_count', node_count)
        self._assign_required('residual', _real(residual))
        self._validate()

    @property
    def x(self):
        """The dimensionless product ``sqrt(-E) r0``"""
        return math.sqrt(-self.energy) * self.r0

    def __repr__(self):
        return ('NumerovSolution<r0=%r, energy=%r, nodes=%d>'
                % (self.r0, self.energy, self.node_count))

    def _validate(self):
        self._check_is_real('r0', min=0, strict=True)
        self._check_is_real('gamma', min=0)
        self._check_is_real('gamma_prime', min=0, strict=True)
        self._check_is_real('energy')
        if not self.energy < 0:
            raise context.ValueError("energy must be negative")
        self._check_is_bounded_int('node_count', min=0)
        self._check_is_real('residual', min=0)
