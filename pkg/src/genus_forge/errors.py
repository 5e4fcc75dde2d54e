"""Exception types shared across the package.

Everything derives from GenusForgeError so callers can catch one base
class.  The split into Usage / Data / Numerical branches mirrors the
CLI exit codes (1, 2, 3).
"""

from __future__ import annotations


class GenusForgeError(Exception):
    """Base class for all errors raised by this package."""


class DataError(GenusForgeError):
    """Invalid or inconsistent input data (CLI exit code 2)."""


class NumericalError(GenusForgeError):
    """A numerical routine could not meet its contract (CLI exit code 3)."""


# -- truncated series ring ---------------------------------------------------

class TruncMismatch(DataError):
    """Binary operation on series with different truncation orders."""


class NonUnitDivisor(DataError):
    """Series division by a series with zero constant term."""


class NonUnitLog(DataError):
    """Series logarithm of a series whose constant term is not 1."""


class NonNilpotentExp(DataError):
    """Series exponential of a series with nonzero constant term."""


class DivergentEvaluation(NumericalError):
    """Numeric evaluation of a q-series at |q| >= 1."""


# -- characteristic class calculus -------------------------------------------

class ParityError(DataError):
    """Factor series for a Pontryagin-type class has odd-degree terms."""


class InsufficientData(DataError):
    """A manifold lacks the characteristic numbers the operation needs."""


class DimensionError(DataError):
    """Genus or index requested in a dimension where it is undefined."""


class InconsistentData(DataError):
    """Stored characteristic data contradicts a computed value."""


class UnknownManifold(DataError):
    """Name not found among builtins or catalog entries."""


# -- modular tools ------------------------------------------------------------

class FitError(DataError):
    """Eisenstein fit has no solvable leading-coefficient system."""


class ConvergenceRisk(NumericalError):
    """Numeric modular check requested at a point of slow convergence."""


# -- analytic bounds ----------------------------------------------------------

class RootNotBracketed(NumericalError):
    """Root finder could not bracket a sign change."""


class ExponentDomainError(DataError):
    """Bound exponents leave their domain (mu*(p-1) - p <= 0)."""


class DomainError(DataError):
    """Scalar argument outside the documented domain."""


# -- covering lab --------------------------------------------------------------

class TooLarge(DataError):
    """Requested discrete model exceeds the vertex cap."""


# -- catalog -------------------------------------------------------------------

class CatalogError(DataError):
    """Catalog file fails schema or consistency validation."""


class NonIntegralIndexWarning(UserWarning):
    """Twisted index of a spin manifold came out non-integral."""
