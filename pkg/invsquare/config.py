from collections.abc import Mapping


__all__ = ('Properties', 'properties')


class Properties(Mapping):
    """Numerical constants used throughout invsquare.

    This class implements an immutable mapping type. Every switchover point,
    tolerance and cap used by the numerical routines is listed here, so that
    the accuracy contract of each function can be traced to a single value.

    Attributes
    ----------
    quad_tol : float
        Default absolute and relative tolerance for adaptive quadrature.
    quad_limit : int
        Maximum number of subintervals for adaptive quadrature.
    quad_slack : float
        A quadrature reporting a roundoff or subdivision warning is accepted
        if its error estimate is below ``quad_slack * quad_tol`` (relative to
        the magnitude of the result).
    root_tol : float
        Default residual tolerance for bracketing root-finding.
    root_maxiter : int
        Iteration cap for bracketing root-finding.
    nu_zero_threshold : float
        Below this order, ``K_nu`` is evaluated with the logarithmic
        ``nu = 0`` series.
    k_imag_cutoff : float
        The cosh-integral for ``K_{i mu}(x)`` is truncated where
        ``x (cosh t - 1)`` exceeds this value (``exp(-40) ~ 4e-18``).
    k_imag_tol : float
        Quadrature tolerance for the ``K_{i mu}`` integral.
    rho_max : float
        Upper truncation of bound-state quadratures in rho-units. The
        exponential tail beyond it is below ``exp(-2 rho_max)``.
    boundary_rhos : tuple of float
        Radii at which the boundary bracket is sampled before extrapolating
        to ``rho -> 0``.
    near_origin_rho_max : float
        Largest rho accepted by the near-origin expansions.
    near_origin_constant : float
        Constant ``C`` of the near-origin accuracy bound ``C rho**(4 - nu)``.
    match_bracket : tuple of float
        Bracket for ``sqrt(gamma')`` in the ``r0 -> 0`` matching condition.
    match_x_min : float
        Smallest ``x = kappa r0`` searched by the finite-r0 matching.
    fit_grid_size : int
        Default number of grid points for the ``gamma'`` fits.
    abel_eps : tuple of float
        Default Abel regularization parameters, decreasing.
    fd_rel_step : float
        Relative step of the five-point finite-difference ODE residual.
    numerov_step : float
        Step of the logarithmic Numerov grid.
    numerov_interior_span : float
        Logarithmic span of the interior grid, ``ln(r0 / r_start)``.
    numerov_decay : float
        The exterior grid extends to ``kappa r_max`` equal to this value.
    exp_max : float
        Largest exponent accepted before reporting an overflow.
    """
    def __init__(self):
        mapping = dict(quad_tol=1e-11,
                       quad_limit=500,
                       quad_slack=1e3,
                       root_tol=1e-12,
                       root_maxiter=200,
                       nu_zero_threshold=1e-6,
                       k_imag_cutoff=40.0,
                       k_imag_tol=1e-14,
                       rho_max=40.0,
                       boundary_rhos=(1e-4, 1e-5, 1e-6, 1e-7, 1e-8),
                       near_origin_rho_max=0.1,
                       near_origin_constant=1.0,
                       match_bracket=(1.0, 1.7),
                       match_x_min=1e-150,
                       fit_grid_size=100,
                       abel_eps=(0.2, 0.1, 0.05, 0.025),
                       fd_rel_step=1e-3,
                       numerov_step=2e-3,
                       numerov_interior_span=10.0,
                       numerov_decay=30.0,
                       exp_max=700.0)

        object.__setattr__(self, '_mapping', mapping)

    def __getitem__(self, key):
        return self._mapping[key]

    def __getattr__(self, key):
        try:
            return self[key]
        except KeyError:
            raise AttributeError("%r object has no attribute %r"
                                 % (type(self).__name__, key))

    def __setattr__(self, key, val):
        raise AttributeError("%r object has no attribute %r"
                             % (type(self).__name__, key))

    def __dir__(self):
        o = set(dir(type(self)))
        o.update(self.__dict__)
        o.update(c for c in self._mapping if c.isidentifier())
        return list(o)

    def __iter__(self):
        return iter(self._mapping)

    def __len__(self):
        return len(self._mapping)


properties = Properties()
