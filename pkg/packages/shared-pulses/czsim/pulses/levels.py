"""
Twelve-level space - level ordering, embeddings and the composed CNOT gate.

Levels are labelled (c, t, n): control qubit c in {0, 1} (most significant),
target t in {0, 1, 2} where 2 is the ancillary level, phonon n in {0, 1}.
Indices 0-5 carry n=0 and indices 6-11 carry n=1; the last two indices of
each half are ancillary. Indices 0-3 are the computational basis |00>, |01>,
|10>, |11> with the phonon in its ground state.

The composed gate is H . V3 . V2 . V1 . H.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from enum import Enum

import numpy as np
import numpy.typing as npt

from czsim.pulses.exceptions import InvalidArgumentError
from czsim.pulses.pulse import (
    ZERO_NOISES,
    PulseNoise,
    TwoLevelUnitary,
    as_noise_triple,
    noisy_unitary,
    validate_pulse_id,
)

logger = logging.getLogger(__name__)

GateMatrix = npt.NDArray[np.complex128]

GATE_DIM = 12
COMPUTATIONAL_DIM = 4

LEVEL_ORDERING: tuple[tuple[int, int, int], ...] = (
    (0, 0, 0),
    (0, 1, 0),
    (1, 0, 0),
    (1, 1, 0),
    (0, 2, 0),
    (1, 2, 0),
    (0, 0, 1),
    (0, 1, 1),
    (1, 0, 1),
    (1, 1, 1),
    (0, 2, 1),
    (1, 2, 1),
)

_INDEX_OF = {label: index for index, label in enumerate(LEVEL_ORDERING)}

# Index pairs each pulse couples.
PULSE_PAIRS: dict[int, tuple[tuple[int, int], ...]] = {
    1: ((2, 6), (3, 7)),
    2: ((6, 10),),
    3: ((2, 6), (3, 7)),
}

CNOT4 = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
)
CMINUS4 = np.diag([1, 1, 1, -1]).astype(np.complex128)

# Mapping lines of the ideal protocol tables:
# (pulse_id, input index, input amplitude, output index, output amplitude).
PROTOCOL_TABLE: tuple[tuple[int, int, complex, int, complex], ...] = (
    (1, 0, 1, 0, 1),
    (1, 1, 1, 1, 1),
    (1, 2, 1, 6, 1j),
    (1, 3, 1, 7, 1j),
    (2, 0, 1, 0, 1),
    (2, 1, 1, 1, 1),
    (2, 6, 1j, 6, -1j),
    (2, 7, 1j, 7, 1j),
    (3, 0, 1, 0, 1),
    (3, 1, 1, 1, 1),
    (3, 6, -1j, 2, 1),
    (3, 7, 1j, 3, -1),
)


class HadamardMode(str, Enum):
    """Embedding of the target-qubit Hadamard gates."""

    PAPER = "paper"  # pairs (0,1), (2,3) only
    PHYSICAL = "physical"  # also pairs (6,7), (8,9)


HADAMARD_PAIRS: dict[HadamardMode, tuple[tuple[int, int], ...]] = {
    HadamardMode.PAPER: ((0, 1), (2, 3)),
    HadamardMode.PHYSICAL: ((0, 1), (2, 3), (6, 7), (8, 9)),
}

_HADAMARD_2X2 = np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)


def level_index(c: int, t: int, n: int) -> int:
    """
    Return the position of level (c, t, n) in the ordering.

    Raises:
        InvalidArgumentError: If any component is out of range
    """
    if c not in (0, 1):
        raise InvalidArgumentError(f"Invalid control level: {c}", parameter="c")
    if t not in (0, 1, 2):
        raise InvalidArgumentError(f"Invalid target level: {t}", parameter="t")
    if n not in (0, 1):
        raise InvalidArgumentError(f"Invalid phonon level: {n}", parameter="n")
    return _INDEX_OF[(c, t, n)]


def level_label(index: int) -> tuple[int, int, int]:
    """Return the (c, t, n) label of a level index."""
    if not 0 <= index < GATE_DIM:
        raise InvalidArgumentError(f"Invalid level index: {index}", parameter="index")
    return LEVEL_ORDERING[index]


def _frozen(matrix: GateMatrix) -> GateMatrix:
    matrix.flags.writeable = False
    return matrix


def _place_blocks(block: npt.ArrayLike, pairs: Sequence[tuple[int, int]]) -> GateMatrix:
    matrix = np.eye(GATE_DIM, dtype=np.complex128)
    b = np.asarray(block, dtype=np.complex128)
    for i, j in pairs:
        matrix[i, i] = b[0, 0]
        matrix[i, j] = b[0, 1]
        matrix[j, i] = b[1, 0]
        matrix[j, j] = b[1, 1]
    return matrix


def embed_pulse(pulse_id: int, u: TwoLevelUnitary) -> GateMatrix:
    """
    Embed a pulse unitary in the twelve-level space.

    Pulses 1 and 3 act on index pairs (2, 6) and (3, 7); pulse 2 acts on
    (6, 10). The matrix is the identity everywhere else.
    """
    validate_pulse_id(pulse_id)
    return _frozen(_place_blocks(u.as_array(), PULSE_PAIRS[pulse_id]))


def embed_hadamard(mode: HadamardMode = HadamardMode.PAPER) -> GateMatrix:
    """Embed the target-qubit Hadamard according to ``mode``."""
    return _frozen(_place_blocks(_HADAMARD_2X2, HADAMARD_PAIRS[HadamardMode(mode)]))


def cminus_core(noises: Sequence[PulseNoise] = ZERO_NOISES) -> GateMatrix:
    """Return V3 . V2 . V1, the three-pulse controlled-phase core."""
    n1, n2, n3 = as_noise_triple(noises)
    v1 = embed_pulse(1, noisy_unitary(1, n1))
    v2 = embed_pulse(2, noisy_unitary(2, n2))
    v3 = embed_pulse(3, noisy_unitary(3, n3))
    return _frozen(v3 @ v2 @ v1)


def compose_gate(
    noises: Sequence[PulseNoise] = ZERO_NOISES,
    mode: HadamardMode = HadamardMode.PAPER,
) -> GateMatrix:
    """
    Compose the full noisy gate H . V3 . V2 . V1 . H.

    Args:
        noises: One PulseNoise per pulse
        mode: Hadamard embedding

    Returns:
        12x12 unitary gate matrix (read-only)
    """
    h = embed_hadamard(mode)
    gate = h @ cminus_core(noises) @ h
    logger.debug("Composed gate for noises=%s mode=%s", tuple(noises), HadamardMode(mode).value)
    return _frozen(gate)


def ideal_pulse_matrices() -> tuple[GateMatrix, GateMatrix, GateMatrix]:
    """Return the embedded ideal pulses (V1, V2, V3)."""
    return tuple(  # type: ignore[return-value]
        embed_pulse(k, noisy_unitary(k, PulseNoise())) for k in (1, 2, 3)
    )


def basis_vector(index: int, dim: int = GATE_DIM) -> npt.NDArray[np.complex128]:
    """Return the unit vector e_index of dimension ``dim``."""
    if not 0 <= index < dim:
        raise InvalidArgumentError(f"Invalid basis index {index} for dimension {dim}")
    v = np.zeros(dim, dtype=np.complex128)
    v[index] = 1.0
    return v
