"""Custom exceptions for the simulator."""

from __future__ import annotations


class SimulationError(Exception):
    """Base exception for simulator errors."""

    pass


class InvalidArgumentError(SimulationError, ValueError):
    """Raised when an argument is outside its allowed domain.

    Attributes:
        parameter: Name of the offending argument, when known.
    """

    def __init__(self, message: str, parameter: str | None = None):
        super().__init__(message)
        self.parameter = parameter


class NumericalValidationError(SimulationError):
    """Raised when a numerical invariant (hermiticity, trace, unitarity, ...) fails.

    Attributes:
        property_name: The violated property, e.g. "hermitian" or "unitary".
        residual: Size of the violation, when measurable.
        parameter: Name of the argument that carried the bad value, when known.
    """

    def __init__(
        self,
        message: str,
        property_name: str,
        residual: float | None = None,
        parameter: str | None = None,
    ):
        super().__init__(message)
        self.property_name = property_name
        self.residual = residual
        self.parameter = parameter

    def with_parameter(self, parameter: str) -> NumericalValidationError:
        """Return a copy of this error tagged with the argument name."""
        return NumericalValidationError(
            f"{parameter}: {self}",
            property_name=self.property_name,
            residual=self.residual,
            parameter=parameter,
        )
