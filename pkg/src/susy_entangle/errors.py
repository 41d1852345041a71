"""Exception types raised by the simulator."""


class SusyEntangleError(Exception):
    """Base class for all package errors."""


class ParameterError(SusyEntangleError, ValueError):
    """An argument is outside the domain of the operation."""


class ConsistencyError(SusyEntangleError, ArithmeticError):
    """A numerical self-check failed (eigensolver, pairing, oracle mismatch)."""
