"""
czsim Metrics - leakage and fidelity figures of merit.

Usage:
    from czsim.channel import DensityMatrix, kraus_from_gate, reduced_state
    from czsim.metrics import average_fidelity, leakage_probabilities
    from czsim.pulses import compose_gate

    gate = compose_gate()
    p_main, p_anc = leakage_probabilities(
        reduced_state(DensityMatrix.maximally_mixed(), gate)
    )
    fidelity = average_fidelity(kraus_from_gate(gate), samples=512, seed=0)
"""

from czsim.metrics.fidelity import (
    DEFAULT_FIDELITY_SAMPLES,
    DEFAULT_SEED,
    average_fidelity,
    conditional_state_fidelity,
    haar_states,
    sample_fidelities,
    state_fidelity,
)
from czsim.metrics.leakage import PROBABILITY_TOLERANCE, clamp_probability, leakage_probabilities
from czsim.metrics.report import REPORT_CSV_COLUMNS, ChannelReport, build_report

__all__ = [
    # Leakage
    "PROBABILITY_TOLERANCE",
    "clamp_probability",
    "leakage_probabilities",
    # Fidelity
    "DEFAULT_FIDELITY_SAMPLES",
    "DEFAULT_SEED",
    "state_fidelity",
    "conditional_state_fidelity",
    "haar_states",
    "sample_fidelities",
    "average_fidelity",
    # Reports
    "ChannelReport",
    "REPORT_CSV_COLUMNS",
    "build_report",
]
