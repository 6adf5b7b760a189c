import math

import mpmath
import pytest

import invsquare


@pytest.fixture
def mp50():
    with mpmath.workdps(50):
        yield mpmath.mp


def rel(a, b):
    """Relative difference of two reals, zero when both vanish."""
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def limit_gamma_prime(nu):
    return invsquare.wellmatch.gamma_prime_limit(nu).gamma_prime


def square_well_mismatch(gamma_prime, x):
    """Exact ``nu = 1/2`` matching condition, ``s cot s + x``."""
    s = math.sqrt(gamma_prime - x * x)
    return s / math.tan(s) + x
