"""Exception types raised by the integration routines."""


class SincIterintError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SincIterintError, ValueError):
    """An argument lies outside the domain of the function."""


class MeshInfeasibleError(SincIterintError):
    """The mesh violates a truncation condition, so no certificate can be issued.

    ``reasons`` lists each violated condition in plain text.
    """

    def __init__(self, message, reasons=()):
        super().__init__(message)
        self.reasons = list(reasons)


class EvaluationError(SincIterintError, ArithmeticError):
    """A user function returned a non-finite value at a quadrature node."""


class UnsupportedCaseError(SincIterintError):
    """The requested formula does not cover this problem (e.g. a decreasing boundary)."""
