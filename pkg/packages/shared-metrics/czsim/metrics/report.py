"""
ChannelReport - figures of merit for one noise configuration.

A report carries the noise echo, the Hadamard mode, the leakage split and
whichever fidelities were requested, plus the Kraus cross-check residuals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy.typing as npt
from czsim.channel import KrausCrossCheck, KrausSet, ReducedState
from czsim.metrics.fidelity import (
    DEFAULT_FIDELITY_SAMPLES,
    DEFAULT_SEED,
    average_fidelity,
    conditional_state_fidelity,
    state_fidelity,
)
from czsim.metrics.leakage import leakage_probabilities
from czsim.pulses import NOISE_PARAMETER_NAMES, HadamardMode, PulseNoise, noises_to_mapping

REPORT_CSV_COLUMNS: tuple[str, ...] = (*NOISE_PARAMETER_NAMES, "p_main", "p_anc", "avg_fidelity")


@dataclass(frozen=True)
class ChannelReport:
    """
    Figures of merit for one run.

    Attributes:
        noises: The three PulseNoise values
        hadamard_mode: Hadamard embedding used for the gate
        p_main: Population left on the computational levels
        p_anc: Population leaked to the ancilla
        avg_fidelity: Mean fidelity over Haar-random inputs, if computed
        state_fidelity: Fidelity for the run's pure input, if it has one
        conditional_fidelity: state_fidelity renormalized by p_main
        kraus_cross_residual: Closed form vs gate-extracted Kraus operators
        pulse3_c3_residual: Same comparison with c3 built from pulse 3
        seed: Seed of the fidelity sampler
        samples: Number of fidelity samples
    """

    noises: tuple[PulseNoise, PulseNoise, PulseNoise]
    hadamard_mode: HadamardMode
    p_main: float
    p_anc: float
    avg_fidelity: float | None = None
    state_fidelity: float | None = None
    conditional_fidelity: float | None = None
    kraus_cross_residual: float | None = None
    pulse3_c3_residual: float | None = None
    seed: int | None = None
    samples: int | None = None

    @property
    def infidelity(self) -> float | None:
        """Return 1 - avg_fidelity."""
        return None if self.avg_fidelity is None else 1.0 - self.avg_fidelity

    def noise_mapping(self) -> dict[str, float]:
        """Return the nine named noise values."""
        return noises_to_mapping(self.noises)

    def to_dict(self) -> dict[str, Any]:
        """
        Convert to a JSON-serializable dictionary.

        state_fidelity and conditional_state_fidelity appear only when the
        input was a pure state.
        """
        data: dict[str, Any] = {
            "noise": self.noise_mapping(),
            "hadamard_mode": HadamardMode(self.hadamard_mode).value,
            "p_main": self.p_main,
            "p_anc": self.p_anc,
            "avg_fidelity": self.avg_fidelity,
        }
        if self.state_fidelity is not None:
            data["state_fidelity"] = self.state_fidelity
            data["conditional_state_fidelity"] = self.conditional_fidelity
        data["kraus_cross_residual"] = self.kraus_cross_residual
        data["kraus_pulse3_c3_residual"] = self.pulse3_c3_residual
        data["seed"] = self.seed
        data["samples"] = self.samples
        return data

    def to_row(self) -> dict[str, float | None]:
        """Return the flat row written under REPORT_CSV_COLUMNS."""
        row: dict[str, float | None] = dict(self.noise_mapping())
        row["p_main"] = self.p_main
        row["p_anc"] = self.p_anc
        row["avg_fidelity"] = self.avg_fidelity
        return row


def build_report(
    state: ReducedState,
    noises: tuple[PulseNoise, PulseNoise, PulseNoise],
    hadamard_mode: HadamardMode = HadamardMode.PAPER,
    *,
    kraus: KrausSet | None = None,
    input_state: npt.ArrayLike | None = None,
    samples: int = DEFAULT_FIDELITY_SAMPLES,
    seed: int = DEFAULT_SEED,
    cross_check: KrausCrossCheck | None = None,
) -> ChannelReport:
    """
    Assemble a ChannelReport from a reduced state.

    Args:
        state: Reduced state of the run
        noises: Noise triple of the run
        hadamard_mode: Hadamard embedding of the run
        kraus: Kraus operators; when given, avg_fidelity is sampled
        input_state: Pure input vector; when given, state fidelities are computed
        samples: Fidelity sample count
        seed: Fidelity sampler seed
        cross_check: Kraus cross-check residuals to record

    Returns:
        ChannelReport
    """
    p_main, p_anc = leakage_probabilities(state)

    avg = average_fidelity(kraus, samples, seed) if kraus is not None else None
    single: float | None = None
    conditional: float | None = None
    if input_state is not None:
        single = state_fidelity(state, input_state)
        conditional = conditional_state_fidelity(state, input_state)

    return ChannelReport(
        noises=noises,
        hadamard_mode=HadamardMode(hadamard_mode),
        p_main=p_main,
        p_anc=p_anc,
        avg_fidelity=avg,
        state_fidelity=single,
        conditional_fidelity=conditional,
        kraus_cross_residual=cross_check.residual if cross_check else None,
        pulse3_c3_residual=cross_check.pulse3_c3_residual if cross_check else None,
        seed=seed if kraus is not None else None,
        samples=samples if kraus is not None else None,
    )
