import warnings
import sys
from contextlib import contextmanager

__all__ = ('InvSquareError',
           'DomainError',
           'PoleError',
           'OutOfRangeError',
           'NoRootError',
           'ConvergenceError',
           'VerificationError')


class InvSquareError(Exception):
    """Base class for invsquare specific exceptions"""


class DomainError(InvSquareError, ValueError):
    """An argument lies outside the domain of the requested function"""


class PoleError(DomainError):
    """A closed form was evaluated at a pole.

    Parameters
    ----------
    msg : str
        The error message.
    where : float, optional
        The location of the pole.
    """
    def __init__(self, msg, where=None):
        super(PoleError, self).__init__(msg)
        self.where = where


class OutOfRangeError(DomainError):
    """A result would overflow double precision"""


class NoRootError(InvSquareError):
    """No root exists in the requested bracket"""


class ConvergenceError(InvSquareError):
    """A quadrature or root-finding routine failed to converge"""


class VerificationError(InvSquareError):
    """One or more cross-checks of the verification suite failed"""


class _Context(object):
    def __init__(self):
        self.is_cli = False

    def warn(self, msg):
        if self.is_cli:
            print(msg + "\n", file=sys.stderr)
        else:
            warnings.warn(msg)

    @contextmanager
    def set_cli(self):
        old = self.is_cli
        self.is_cli = True
        try:
            yield
        finally:
            self.is_cli = old

    @classmethod
    def register_wrapper(cls, typ):
        name = typ.__name__
        typ2 = type(name, (typ, InvSquareError), {})

        def wrap(self, msg):
            return typ2(msg) if self.is_cli else typ(msg)

        setattr(cls, name, wrap)


for exc in [ValueError, TypeError]:
    _Context.register_wrapper(exc)


context = _Context()
