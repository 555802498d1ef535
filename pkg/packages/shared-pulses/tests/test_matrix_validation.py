"""Tests for MatrixValidator."""

import math

import numpy as np
import pytest
from czsim.pulses import InvalidArgumentError, MatrixValidator, NumericalValidationError
from czsim.pulses.validation import ALGEBRAIC_TOLERANCE, INPUT_TOLERANCE


class TestCheckUnitary:
    """Tests for unitarity checks."""

    def test_identity_is_unitary(self) -> None:
        """Test that the identity passes with zero residual."""
        result = MatrixValidator.check_unitary(np.eye(12))
        assert result.is_valid is True
        assert result.residual == 0.0

    def test_shear_is_not_unitary(self) -> None:
        """Test that a shear matrix fails with property 'unitary'."""
        result = MatrixValidator.check_unitary(np.array([[1, 1], [0, 1]]))
        assert result.is_valid is False
        assert result.property_name == "unitary"
        assert result.residual == pytest.approx(1.0)

    def test_non_square_rejected(self) -> None:
        """Test that non-square input is an argument error."""
        with pytest.raises(InvalidArgumentError):
            MatrixValidator.unitarity_residual(np.ones((2, 3)))

    def test_non_finite_gate_fails(self) -> None:
        """Test that NaN entries fail as non-finite instead of passing."""
        gate = np.eye(4, dtype=np.complex128)
        gate[1, 2] = np.nan
        result = MatrixValidator.check_unitary(gate)
        assert result.is_valid is False
        assert result.property_name == "finite"
        assert MatrixValidator.unitarity_residual(gate) == math.inf

    def test_require_unitary_raises(self) -> None:
        """Test that require_unitary raises with the residual attached."""
        with pytest.raises(NumericalValidationError) as exc_info:
            MatrixValidator.require_unitary(2 * np.eye(4))
        assert exc_info.value.property_name == "unitary"
        assert exc_info.value.residual == pytest.approx(3.0)
        assert "not unitary" in str(exc_info.value)


class TestCheckDensity:
    """Tests for density-matrix checks."""

    def test_maximally_mixed_is_valid(self) -> None:
        """Test that I/4 is a valid density matrix."""
        assert MatrixValidator.check_density(np.eye(4) / 4).is_valid

    @pytest.mark.parametrize(
        "matrix,property_name",
        [
            (np.array([[0.5, 0.1], [0.0, 0.5]]), "hermitian"),
            (np.diag([0.25, 0.25]), "trace"),
            (np.diag([1.5, -0.5]), "positive"),
        ],
    )
    def test_violations_named(self, matrix: np.ndarray, property_name: str) -> None:
        """Test that the first violated property is reported."""
        result = MatrixValidator.check_density(matrix)
        assert result.is_valid is False
        assert result.property_name == property_name

    def test_expected_trace(self) -> None:
        """Test checking against a recorded non-unit trace."""
        rho = np.diag([0.25, 0.25])
        assert MatrixValidator.check_density(rho, expected_trace=0.5).is_valid

    def test_tolerance_window(self) -> None:
        """Test that tiny negative eigenvalues within tolerance are accepted."""
        rho = np.diag([1.0 + INPUT_TOLERANCE / 2, -INPUT_TOLERANCE / 2])
        assert MatrixValidator.check_density(rho).is_valid

    def test_require_density_raises(self) -> None:
        """Test that require_density raises naming the property."""
        with pytest.raises(NumericalValidationError) as exc_info:
            MatrixValidator.require_density(np.eye(4) / 2)
        assert exc_info.value.property_name == "trace"
        assert "wrong trace" in str(exc_info.value)


    @pytest.mark.parametrize("bad", [np.nan, np.inf])
    def test_non_finite_density_fails(self, bad: float) -> None:
        """Test that non-finite entries are reported before any other property."""
        rho = np.eye(4, dtype=np.complex128) / 4
        rho[0, 0] = bad
        result = MatrixValidator.check_density(rho)
        assert result.is_valid is False
        assert result.property_name == "finite"

    def test_require_density_non_finite_message(self) -> None:
        """Test the message for a non-finite density matrix."""
        with pytest.raises(NumericalValidationError) as exc_info:
            MatrixValidator.require_density(np.full((4, 4), np.nan))
        assert exc_info.value.property_name == "finite"
        assert "non-finite" in str(exc_info.value)


class TestCheckNormalized:
    """Tests for state-vector normalization checks."""

    def test_normalized_vector(self) -> None:
        """Test that a unit vector passes."""
        v = np.array([1, 1j, 0, 0]) / np.sqrt(2)
        assert MatrixValidator.check_normalized(v).is_valid

    def test_unnormalized_vector(self) -> None:
        """Test that a scaled vector fails."""
        result = MatrixValidator.check_normalized(np.array([1.0, 1.0, 0.0, 0.0]))
        assert result.is_valid is False
        assert result.property_name == "normalized"

    def test_require_normalized_tolerance(self) -> None:
        """Test that deviations beyond the algebraic tolerance raise."""
        v = np.array([1.0 + 10 * ALGEBRAIC_TOLERANCE, 0.0])
        with pytest.raises(NumericalValidationError):
            MatrixValidator.require_normalized(v)


class TestNumericalValidationError:
    """Tests for the error helper."""

    def test_with_parameter(self) -> None:
        """Test tagging an error with the argument that carried the value."""
        error = NumericalValidationError("bad", property_name="trace", residual=0.5)
        tagged = error.with_parameter("input")
        assert tagged.parameter == "input"
        assert tagged.property_name == "trace"
        assert tagged.residual == 0.5
        assert str(tagged) == "input: bad"
