"""
czsim Pulses - laser-pulse unitaries and the twelve-level gate embedding.

Usage:
    from czsim.pulses import PulseNoise, HadamardMode, compose_gate

    # Ideal gate: the top-left 4x4 block is the CNOT permutation
    gate = compose_gate()

    # Perturb the impulse area of the second pulse
    noises = (PulseNoise(), PulseNoise(d_theta=0.2), PulseNoise())
    noisy = compose_gate(noises, HadamardMode.PAPER)
"""

from czsim.pulses.exceptions import (
    InvalidArgumentError,
    NumericalValidationError,
    SimulationError,
)
from czsim.pulses.levels import (
    CMINUS4,
    CNOT4,
    COMPUTATIONAL_DIM,
    GATE_DIM,
    LEVEL_ORDERING,
    PROTOCOL_TABLE,
    GateMatrix,
    HadamardMode,
    basis_vector,
    cminus_core,
    compose_gate,
    embed_hadamard,
    embed_pulse,
    ideal_pulse_matrices,
    level_index,
    level_label,
)
from czsim.pulses.pulse import (
    NOISE_PARAMETER_NAMES,
    STATED_PULSE2_PARAMS,
    ZERO_NOISE,
    ZERO_NOISES,
    PulseNoise,
    PulseParams,
    TwoLevelUnitary,
    apply_noise,
    build_unitary,
    ideal_pulse_params,
    noises_from_mapping,
    noises_to_mapping,
    noisy_unitaries,
    noisy_unitary,
)
from czsim.pulses.validation import MatrixValidator, ValidationResult

__all__ = [
    # Exceptions
    "SimulationError",
    "InvalidArgumentError",
    "NumericalValidationError",
    # Pulses
    "PulseParams",
    "PulseNoise",
    "TwoLevelUnitary",
    "ZERO_NOISE",
    "ZERO_NOISES",
    "NOISE_PARAMETER_NAMES",
    "STATED_PULSE2_PARAMS",
    "ideal_pulse_params",
    "build_unitary",
    "apply_noise",
    "noisy_unitary",
    "noisy_unitaries",
    "noises_from_mapping",
    "noises_to_mapping",
    # Level space
    "GateMatrix",
    "HadamardMode",
    "GATE_DIM",
    "COMPUTATIONAL_DIM",
    "LEVEL_ORDERING",
    "PROTOCOL_TABLE",
    "CNOT4",
    "CMINUS4",
    "level_index",
    "level_label",
    "basis_vector",
    "embed_pulse",
    "embed_hadamard",
    "cminus_core",
    "compose_gate",
    "ideal_pulse_matrices",
    # Validation
    "MatrixValidator",
    "ValidationResult",
]
