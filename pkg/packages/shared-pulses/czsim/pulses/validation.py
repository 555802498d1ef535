"""
MatrixValidator - numerical invariant checks for gates, states and vectors.

Checks:
- Finiteness of every entry
- Unitarity (max-entry residual of U†U - I)
- Density matrices (hermiticity, trace, positivity)
- Normalized pure-state vectors
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy import linalg

from czsim.pulses.exceptions import InvalidArgumentError, NumericalValidationError

# Algebraic identities on products of at most five unitaries.
ALGEBRAIC_TOLERANCE = 1e-12
# Sanitation of user-supplied states.
INPUT_TOLERANCE = 1e-10


@dataclass(frozen=True)
class ValidationResult:
    """Result of a matrix validation."""

    is_valid: bool
    property_name: str | None = None
    residual: float = 0.0


class MatrixValidator:
    """
    Validates the numerical invariants of matrices used by the simulator.

    The ``check_*`` classmethods return a ValidationResult; the ``require_*``
    classmethods raise NumericalValidationError naming the violated property.
    """

    @classmethod
    def unitarity_residual(cls, matrix: npt.ArrayLike) -> float:
        """Return max |(U†U - I)_ij|."""
        u = np.asarray(matrix, dtype=np.complex128)
        if u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise InvalidArgumentError(f"Expected a square matrix, got shape {u.shape}")
        if not np.isfinite(u).all():
            return math.inf
        product = u.conj().T @ u
        return float(np.max(np.abs(product - np.eye(u.shape[0]))))

    @classmethod
    def check_unitary(
        cls, matrix: npt.ArrayLike, tolerance: float = ALGEBRAIC_TOLERANCE
    ) -> ValidationResult:
        """Check that a matrix is unitary within tolerance."""
        if not np.isfinite(np.asarray(matrix, dtype=np.complex128)).all():
            return ValidationResult(False, "finite", math.inf)
        residual = cls.unitarity_residual(matrix)
        if residual > tolerance:
            return ValidationResult(False, "unitary", residual)
        return ValidationResult(True, residual=residual)

    @classmethod
    def check_density(
        cls,
        matrix: npt.ArrayLike,
        expected_trace: float = 1.0,
        tolerance: float = INPUT_TOLERANCE,
    ) -> ValidationResult:
        """
        Check finiteness, hermiticity, trace and positivity, in that order.

        Args:
            matrix: Candidate density matrix
            expected_trace: Trace the matrix must carry
            tolerance: Per-entry / eigenvalue tolerance

        Returns:
            ValidationResult for the first violated property, or a valid result
        """
        rho = np.asarray(matrix, dtype=np.complex128)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise InvalidArgumentError(f"Expected a square matrix, got shape {rho.shape}")
        if not np.isfinite(rho).all():
            return ValidationResult(False, "finite", math.inf)

        hermitian_residual = float(np.max(np.abs(rho - rho.conj().T)))
        if hermitian_residual > tolerance:
            return ValidationResult(False, "hermitian", hermitian_residual)

        trace_residual = abs(complex(np.trace(rho)) - expected_trace)
        if trace_residual > tolerance:
            return ValidationResult(False, "trace", trace_residual)

        # Only the minimum eigenvalue matters.
        min_eigenvalue = float(linalg.eigvalsh(rho, check_finite=False)[0])
        if min_eigenvalue < -tolerance:
            return ValidationResult(False, "positive", -min_eigenvalue)

        return ValidationResult(True, residual=max(hermitian_residual, trace_residual))

    @classmethod
    def check_normalized(
        cls, vector: npt.ArrayLike, tolerance: float = ALGEBRAIC_TOLERANCE
    ) -> ValidationResult:
        """Check that a state vector has unit 2-norm."""
        v = np.asarray(vector, dtype=np.complex128)
        if not np.isfinite(v).all():
            return ValidationResult(False, "finite", math.inf)
        residual = abs(float(np.linalg.norm(v)) - 1.0)
        if residual > tolerance:
            return ValidationResult(False, "normalized", residual)
        return ValidationResult(True, residual=residual)

    @classmethod
    def require_unitary(
        cls, matrix: npt.ArrayLike, tolerance: float = ALGEBRAIC_TOLERANCE
    ) -> None:
        """Raise NumericalValidationError if the matrix is not unitary."""
        cls._raise_on_failure(cls.check_unitary(matrix, tolerance), "gate")

    @classmethod
    def require_density(
        cls,
        matrix: npt.ArrayLike,
        expected_trace: float = 1.0,
        tolerance: float = INPUT_TOLERANCE,
    ) -> None:
        """Raise NumericalValidationError if the matrix is not a valid density matrix."""
        cls._raise_on_failure(
            cls.check_density(matrix, expected_trace, tolerance), "density matrix"
        )

    @classmethod
    def require_normalized(
        cls, vector: npt.ArrayLike, tolerance: float = ALGEBRAIC_TOLERANCE
    ) -> None:
        """Raise NumericalValidationError if the vector is not normalized."""
        cls._raise_on_failure(cls.check_normalized(vector, tolerance), "state vector")

    _DESCRIPTIONS = {
        "finite": "has non-finite entries",
        "unitary": "is not unitary",
        "hermitian": "is not Hermitian",
        "trace": "has the wrong trace",
        "positive": "has a negative eigenvalue",
        "normalized": "is not normalized",
    }

    @classmethod
    def _raise_on_failure(cls, result: ValidationResult, subject: str) -> None:
        if result.is_valid:
            return
        description = cls._DESCRIPTIONS.get(result.property_name or "", "is invalid")
        raise NumericalValidationError(
            f"Validation failed: {subject} {description} (residual {result.residual:.3e})",
            property_name=result.property_name or "unknown",
            residual=result.residual,
        )
