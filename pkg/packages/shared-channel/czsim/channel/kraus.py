"""
Kraus operators of the leaky CNOT channel.

Two routes produce the same KrausSet:
- kraus_from_gate: slice the first four columns of the composed 12x12 gate
- kraus_closed_form: evaluate the entries a1_1, a1_2, c1_1, c1_2, c3 directly
  from the three pulse unitaries

The closed form assumes HadamardMode.PAPER.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, replace

import numpy as np
import numpy.typing as npt
from czsim.channel.density import (
    ComplexMatrix,
    DensityMatrix,
    ReducedState,
    as_density_matrix,
    frozen_matrix,
    require_dimension,
)
from czsim.pulses import (
    GATE_DIM,
    HadamardMode,
    InvalidArgumentError,
    MatrixValidator,
    PulseNoise,
    TwoLevelUnitary,
    compose_gate,
    noisy_unitaries,
)
from czsim.pulses.levels import COMPUTATIONAL_DIM

logger = logging.getLogger(__name__)

_INV_SQRT2 = 1 / math.sqrt(2)
_HALF = GATE_DIM // 2


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    """
    A, B, C, D blocks of a 12x12 gate.

    A and B are the rows with n=0, C and D the rows with n=1; A and C act on
    columns with n=0. The sub-blocks of A and C split the four computational
    levels from the two ancilla levels.
    """

    a: ComplexMatrix
    b: ComplexMatrix
    c: ComplexMatrix
    d: ComplexMatrix

    @property
    def a1(self) -> ComplexMatrix:
        return self.a[:COMPUTATIONAL_DIM, :COMPUTATIONAL_DIM]

    @property
    def a2(self) -> ComplexMatrix:
        return self.a[:COMPUTATIONAL_DIM, COMPUTATIONAL_DIM:]

    @property
    def a3(self) -> ComplexMatrix:
        return self.a[COMPUTATIONAL_DIM:, :COMPUTATIONAL_DIM]

    @property
    def a4(self) -> ComplexMatrix:
        return self.a[COMPUTATIONAL_DIM:, COMPUTATIONAL_DIM:]

    @property
    def c1(self) -> ComplexMatrix:
        return self.c[:COMPUTATIONAL_DIM, :COMPUTATIONAL_DIM]

    @property
    def c2(self) -> ComplexMatrix:
        return self.c[:COMPUTATIONAL_DIM, COMPUTATIONAL_DIM:]

    @property
    def c3(self) -> ComplexMatrix:
        return self.c[COMPUTATIONAL_DIM:, :COMPUTATIONAL_DIM]

    @property
    def c4(self) -> ComplexMatrix:
        return self.c[COMPUTATIONAL_DIM:, COMPUTATIONAL_DIM:]

    def reassemble(self) -> ComplexMatrix:
        """Return [[A, B], [C, D]]."""
        return np.block([[self.a, self.b], [self.c, self.d]])


def block_decomposition(gate: npt.ArrayLike) -> BlockDecomposition:
    """Split a 12x12 gate into its four 6x6 blocks."""
    g = np.asarray(gate, dtype=np.complex128)
    if g.shape != (GATE_DIM, GATE_DIM):
        raise InvalidArgumentError(f"Gate must be 12x12, got shape {g.shape}", parameter="gate")
    return BlockDecomposition(
        a=frozen_matrix(g[:_HALF, :_HALF]),
        b=frozen_matrix(g[:_HALF, _HALF:]),
        c=frozen_matrix(g[_HALF:, :_HALF]),
        d=frozen_matrix(g[_HALF:, _HALF:]),
    )


@dataclass(frozen=True, eq=False)
class KrausSet:
    """
    Kraus operators acting on the four-level input space.

    Attributes:
        a1: 4x4, stays on the main levels with n=0
        a3: 2x4, reaches the ancilla with n=0 (zero for this protocol)
        c1: 4x4, stays on the main levels with n=1
        c3: 2x4, reaches the ancilla with n=1
    """

    a1: ComplexMatrix
    a3: ComplexMatrix
    c1: ComplexMatrix
    c3: ComplexMatrix

    @property
    def operators(self) -> tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix, ComplexMatrix]:
        """Return (a1, a3, c1, c3)."""
        return self.a1, self.a3, self.c1, self.c3

    def completeness_residual(self) -> float:
        """Return max |sum K^dagger K - I|."""
        total = sum(k.conj().T @ k for k in self.operators)
        return float(np.max(np.abs(total - np.eye(COMPUTATIONAL_DIM))))

    def max_deviation(self, other: KrausSet) -> float:
        """Return the largest entrywise difference to another KrausSet."""
        return max(
            float(np.max(np.abs(mine - theirs)))
            for mine, theirs in zip(self.operators, other.operators, strict=True)
        )


def kraus_from_gate(gate: npt.ArrayLike) -> KrausSet:
    """
    Extract the Kraus operators from the first four columns of a gate.

    Raises:
        NumericalValidationError: If the gate is not unitary within 1e-12
    """
    blocks = block_decomposition(gate)
    MatrixValidator.require_unitary(gate)
    return KrausSet(a1=blocks.a1, a3=blocks.a3, c1=blocks.c1, c3=blocks.c3)


def _kraus_from_entries(
    a1_1: complex, a1_2: complex, c1_1: complex, c1_2: complex, c3: complex
) -> KrausSet:
    a1 = np.eye(COMPUTATIONAL_DIM, dtype=np.complex128)
    a1[2, 2] = a1[3, 3] = a1_1
    a1[2, 3] = a1[3, 2] = a1_2

    c1 = np.zeros((COMPUTATIONAL_DIM, COMPUTATIONAL_DIM), dtype=np.complex128)
    c1[0, 2] = c1[0, 3] = c1_1
    c1[1, 2] = c1_2
    c1[1, 3] = -c1_2

    c3_matrix = np.zeros((2, COMPUTATIONAL_DIM), dtype=np.complex128)
    c3_matrix[0, 2] = c3_matrix[0, 3] = c3

    return KrausSet(
        a1=frozen_matrix(a1),
        a3=frozen_matrix(np.zeros((2, COMPUTATIONAL_DIM))),
        c1=frozen_matrix(c1),
        c3=frozen_matrix(c3_matrix),
    )


def kraus_closed_form(
    u1: TwoLevelUnitary, u2: TwoLevelUnitary, u3: TwoLevelUnitary
) -> KrausSet:
    """
    Evaluate the Kraus operators from the pulse unitaries.

    The ancilla amplitude c3 is u1_21 * u2_21 / sqrt(2): population reaches the
    n=1 ancilla through pulse 1 then pulse 2, and pulse 3 never acts there.

    Args:
        u1: First pulse
        u2: Second pulse
        u3: Third pulse

    Returns:
        KrausSet equal to kraus_from_gate(compose_gate(..., PAPER))
    """
    a1_1 = 0.5 * (2 * u1.u11 * u3.u11 + u1.u21 * (1 + u2.u11) * u3.u12)
    a1_2 = 0.5 * u1.u21 * (-1 + u2.u11) * u3.u12
    c1_1 = _INV_SQRT2 * (u1.u11 * u3.u21 + u1.u21 * u2.u11 * u3.u22)
    c1_2 = _INV_SQRT2 * (u1.u11 * u3.u21 + u1.u21 * u3.u22)
    c3 = _INV_SQRT2 * u1.u21 * u2.u21
    return _kraus_from_entries(a1_1, a1_2, c1_1, c1_2, c3)


def c3_via_pulse3(u1: TwoLevelUnitary, u2: TwoLevelUnitary, u3: TwoLevelUnitary) -> complex:
    """Return u3_21 * u2_21 / sqrt(2), the ancilla amplitude with pulse 3 in place of pulse 1.

    Agrees with the corrected entry only when pulses 1 and 3 carry the same
    noise. Kept for residual reporting.
    """
    return _INV_SQRT2 * u3.u21 * u2.u21


@dataclass(frozen=True)
class KrausCrossCheck:
    """Residuals between the closed-form and gate-extracted KrausSets."""

    residual: float
    pulse3_c3_residual: float


def kraus_cross_residual(noises: Sequence[PulseNoise]) -> KrausCrossCheck:
    """
    Compare closed-form Kraus operators with those extracted from the gate.

    Both residuals are max entrywise deviations; the second one builds c3
    from pulse 3 instead of pulse 1.
    """
    u1, u2, u3 = noisy_unitaries(noises)
    extracted = kraus_from_gate(compose_gate(noises, HadamardMode.PAPER))
    closed = kraus_closed_form(u1, u2, u3)

    swapped_c3 = np.zeros((2, COMPUTATIONAL_DIM), dtype=np.complex128)
    swapped_c3[0, 2] = swapped_c3[0, 3] = c3_via_pulse3(u1, u2, u3)
    swapped = replace(closed, c3=frozen_matrix(swapped_c3))

    check = KrausCrossCheck(
        residual=closed.max_deviation(extracted),
        pulse3_c3_residual=swapped.max_deviation(extracted),
    )
    logger.debug(
        "Kraus cross-check: residual=%.3e pulse3_c3_residual=%.3e",
        check.residual,
        check.pulse3_c3_residual,
    )
    return check


def apply_channel(kraus: KrausSet, rho4: DensityMatrix | npt.ArrayLike) -> ReducedState:
    """
    Apply the channel to a 4x4 input.

    rho1 = A1 rho A1^dagger + C1 rho C1^dagger and
    rho4 = A3 rho A3^dagger + C3 rho C3^dagger. The coherence blocks are left
    unset; only the full pipeline produces them.
    """
    state = as_density_matrix(rho4, "rho4")
    require_dimension(state, COMPUTATIONAL_DIM, "rho4")
    rho = state.matrix

    def conjugate(k: ComplexMatrix) -> ComplexMatrix:
        return k @ rho @ k.conj().T

    return ReducedState(
        rho1=frozen_matrix(conjugate(kraus.a1) + conjugate(kraus.c1)),
        rho4=frozen_matrix(conjugate(kraus.a3) + conjugate(kraus.c3)),
    )
