"""
Density-matrix pipeline - lift, evolve, trace out the phonon, split into blocks.

The input state lives on the four computational levels with the phonon in
its ground state and the ancilla empty. After the gate, the phonon is traced
out and the 6x6 reduced state is split into the main block (rho1), the
ancilla block (rho4) and their coherences (rho2, rho3).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
import numpy.typing as npt
from czsim.pulses import (
    GATE_DIM,
    InvalidArgumentError,
    MatrixValidator,
    NumericalValidationError,
    SimulationError,
)
from czsim.pulses.levels import COMPUTATIONAL_DIM
from czsim.pulses.validation import INPUT_TOLERANCE

logger = logging.getLogger(__name__)

ComplexMatrix = npt.NDArray[np.complex128]

REDUCED_DIM = 6


def frozen_matrix(matrix: npt.ArrayLike) -> ComplexMatrix:
    """Return a read-only complex copy of a matrix."""
    array = np.array(matrix, dtype=np.complex128)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Density matrix of dimension 4, 6 or 12.

    Attributes:
        matrix: Read-only square complex array
        expected_trace: Trace the matrix carries (1 for normalized inputs)
    """

    ALLOWED_DIMS: ClassVar[tuple[int, ...]] = (4, 6, 12)

    matrix: ComplexMatrix
    expected_trace: float = 1.0

    @classmethod
    def validated(
        cls,
        matrix: npt.ArrayLike,
        expected_trace: float = 1.0,
        tolerance: float = INPUT_TOLERANCE,
    ) -> DensityMatrix:
        """
        Build a density matrix, checking shape, hermiticity, trace and positivity.

        Raises:
            InvalidArgumentError: If the shape is not 4x4, 6x6 or 12x12
            NumericalValidationError: If a density invariant is violated
        """
        array = np.asarray(matrix, dtype=np.complex128)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise InvalidArgumentError(f"Expected a square matrix, got shape {array.shape}")
        if array.shape[0] not in cls.ALLOWED_DIMS:
            raise InvalidArgumentError(
                f"Density matrices must have dimension 4, 6 or 12, got {array.shape[0]}"
            )
        MatrixValidator.require_density(array, expected_trace, tolerance)
        return cls(frozen_matrix(array), expected_trace)

    @classmethod
    def maximally_mixed(cls, dim: int = COMPUTATIONAL_DIM) -> DensityMatrix:
        """Return I/dim."""
        return cls.validated(np.eye(dim) / dim)

    @classmethod
    def from_basis(cls, index: int, dim: int = COMPUTATIONAL_DIM) -> DensityMatrix:
        """Return the pure state |index><index|."""
        if not 0 <= index < dim:
            raise InvalidArgumentError(
                f"Basis index must be in 0..{dim - 1}, got {index}", parameter="basis_index"
            )
        matrix = np.zeros((dim, dim), dtype=np.complex128)
        matrix[index, index] = 1.0
        return cls(frozen_matrix(matrix))

    @classmethod
    def from_state_vector(cls, vector: npt.ArrayLike) -> DensityMatrix:
        """Return |v><v| for a normalized state vector."""
        v = np.asarray(vector, dtype=np.complex128)
        MatrixValidator.require_normalized(v)
        return cls.validated(np.outer(v, v.conj()))

    @property
    def dim(self) -> int:
        """Return the matrix dimension."""
        return int(self.matrix.shape[0])

    @property
    def trace(self) -> float:
        """Return the real part of the trace."""
        return float(np.trace(self.matrix).real)


@dataclass(frozen=True, eq=False)
class ReducedState:
    """
    Blocks of the 6x6 reduced state.

    Attributes:
        rho1: 4x4 main block on the computational levels
        rho4: 2x2 ancilla block
        rho2: 4x2 coherences, None when produced from Kraus operators
        rho3: 2x4 coherences, None when produced from Kraus operators
    """

    rho1: ComplexMatrix
    rho4: ComplexMatrix
    rho2: ComplexMatrix | None = None
    rho3: ComplexMatrix | None = None

    @property
    def has_coherences(self) -> bool:
        """Return True if rho2 and rho3 are available."""
        return self.rho2 is not None and self.rho3 is not None

    @property
    def main_trace(self) -> float:
        """Return tr(rho1)."""
        return float(np.trace(self.rho1).real)

    @property
    def ancilla_trace(self) -> float:
        """Return tr(rho4)."""
        return float(np.trace(self.rho4).real)

    def reassemble(self) -> ComplexMatrix:
        """
        Rebuild the 6x6 matrix from its blocks.

        Raises:
            SimulationError: If the coherence blocks were not computed
        """
        if self.rho2 is None or self.rho3 is None:
            raise SimulationError("Coherence blocks are only available from the full pipeline")
        return np.block([[self.rho1, self.rho2], [self.rho3, self.rho4]])


def as_density_matrix(state: DensityMatrix | npt.ArrayLike, name: str) -> DensityMatrix:
    """Validate a raw array as a normalized state; DensityMatrix values pass through."""
    if isinstance(state, DensityMatrix):
        return state
    try:
        return DensityMatrix.validated(state)
    except NumericalValidationError as e:
        raise e.with_parameter(name) from e


def require_dimension(state: DensityMatrix, dim: int, name: str) -> None:
    if state.dim != dim:
        raise InvalidArgumentError(
            f"{name} must have dimension {dim}, got {state.dim}", parameter=name
        )


def lift_input(rho4: DensityMatrix | npt.ArrayLike) -> DensityMatrix:
    """
    Place a 4x4 input state in the upper-left corner of a 12x12 matrix.

    Args:
        rho4: Input density matrix on the computational levels

    Returns:
        12x12 density matrix with zeros outside rows/columns 0-3

    Raises:
        InvalidArgumentError: If the input is not 4x4
        NumericalValidationError: If the input is not a valid density matrix
    """
    state = as_density_matrix(rho4, "rho4")
    require_dimension(state, COMPUTATIONAL_DIM, "rho4")
    lifted = np.zeros((GATE_DIM, GATE_DIM), dtype=np.complex128)
    lifted[:COMPUTATIONAL_DIM, :COMPUTATIONAL_DIM] = state.matrix
    return DensityMatrix(frozen_matrix(lifted), state.expected_trace)


def evolve(rho12: DensityMatrix, gate: npt.ArrayLike) -> DensityMatrix:
    """
    Conjugate a 12x12 state by the gate: U rho U^dagger.

    Raises:
        NumericalValidationError: If the gate is not unitary within 1e-12
    """
    require_dimension(rho12, GATE_DIM, "rho12")
    u = np.asarray(gate, dtype=np.complex128)
    if u.shape != (GATE_DIM, GATE_DIM):
        raise InvalidArgumentError(f"Gate must be 12x12, got shape {u.shape}", parameter="gate")
    MatrixValidator.require_unitary(u)
    return DensityMatrix(frozen_matrix(u @ rho12.matrix @ u.conj().T), rho12.expected_trace)


def trace_out_phonon(rho12: DensityMatrix) -> DensityMatrix:
    """
    Trace out the phonon.

    With the phonon as block coordinate this is the sum of the two diagonal
    6x6 blocks. The reduced order is (c, t) = 00, 01, 10, 11, 02, 12.
    """
    require_dimension(rho12, GATE_DIM, "rho12")
    m = rho12.matrix
    reduced = m[:REDUCED_DIM, :REDUCED_DIM] + m[REDUCED_DIM:, REDUCED_DIM:]
    return DensityMatrix(frozen_matrix(reduced), rho12.expected_trace)


def split_blocks(rho6: DensityMatrix) -> ReducedState:
    """Split a 6x6 reduced state into rho1, rho2, rho3 and rho4."""
    require_dimension(rho6, REDUCED_DIM, "rho6")
    m = rho6.matrix
    k = COMPUTATIONAL_DIM
    return ReducedState(
        rho1=frozen_matrix(m[:k, :k]),
        rho4=frozen_matrix(m[k:, k:]),
        rho2=frozen_matrix(m[:k, k:]),
        rho3=frozen_matrix(m[k:, :k]),
    )


def reduced_state(rho4: DensityMatrix | npt.ArrayLike, gate: npt.ArrayLike) -> ReducedState:
    """Run lift, evolve, trace and split in sequence."""
    final = evolve(lift_input(rho4), gate)
    state = split_blocks(trace_out_phonon(final))
    logger.debug(
        "Reduced state: tr(rho1)=%.17g tr(rho4)=%.17g", state.main_trace, state.ancilla_trace
    )
    return state
