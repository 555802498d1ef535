"""
czsim Channel - density-matrix pipeline and Kraus operators.

Usage:
    from czsim.channel import DensityMatrix, kraus_from_gate, reduced_state
    from czsim.pulses import compose_gate

    gate = compose_gate()
    state = reduced_state(DensityMatrix.maximally_mixed(), gate)
    print(state.main_trace, state.ancilla_trace)

    kraus = kraus_from_gate(gate)
    assert kraus.completeness_residual() < 1e-12
"""

from czsim.channel.density import (
    DensityMatrix,
    ReducedState,
    as_density_matrix,
    evolve,
    lift_input,
    reduced_state,
    split_blocks,
    trace_out_phonon,
)
from czsim.channel.kraus import (
    BlockDecomposition,
    KrausCrossCheck,
    KrausSet,
    apply_channel,
    block_decomposition,
    c3_via_pulse3,
    kraus_closed_form,
    kraus_cross_residual,
    kraus_from_gate,
)

__all__ = [
    # Density pipeline
    "DensityMatrix",
    "ReducedState",
    "lift_input",
    "evolve",
    "trace_out_phonon",
    "split_blocks",
    "reduced_state",
    "as_density_matrix",
    # Kraus operators
    "BlockDecomposition",
    "KrausSet",
    "KrausCrossCheck",
    "block_decomposition",
    "kraus_from_gate",
    "kraus_closed_form",
    "kraus_cross_residual",
    "c3_via_pulse3",
    "apply_channel",
]
