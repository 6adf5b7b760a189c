from . import (specialfn, coupling, boundstate, wellmatch, continuum,
               hypercritical, oracle, verify)
from .config import properties
from .exceptions import (InvSquareError, DomainError, PoleError,
                         OutOfRangeError, NoRootError, ConvergenceError,
                         VerificationError)
from .model import (OrderKind, Order, EvalResult, Regime, CouplingParams,
                    FluxKind, FluxLimit, BoundState, ClosedFormChecks,
                    WellMatchResult, FitResult, ContinuumBranch,
                    ContinuumState, ContinuumCoefficients, SpectrumLadder,
                    QuadratureResult, NumerovSolution)

from ._version import __version__
