"""
Self-checks of the ideal (zero-noise) gate.

Each check compares a computed quantity with its exact reference and
passes when the residual is within the check's tolerance.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from czsim.channel import DensityMatrix, kraus_cross_residual, kraus_from_gate, reduced_state
from czsim.metrics import leakage_probabilities
from czsim.pulses import (
    CMINUS4,
    CNOT4,
    COMPUTATIONAL_DIM,
    GATE_DIM,
    PROTOCOL_TABLE,
    ZERO_NOISES,
    MatrixValidator,
    basis_vector,
    cminus_core,
    compose_gate,
    ideal_pulse_matrices,
)

EXACT_TOLERANCE = 1e-15
ALGEBRAIC_TOLERANCE = 1e-12


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one ideal-gate check."""

    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    def describe(self) -> str:
        """One line: PASS/FAIL, name, residual and tolerance."""
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: residual={self.residual!r} (tol {self.tolerance!r})"


def _max_abs(matrix: np.ndarray) -> float:
    return float(np.max(np.abs(matrix))) if matrix.size else 0.0


def protocol_table_residual() -> float:
    """Largest deviation of the ideal pulses from the protocol table lines."""
    pulses = dict(zip((1, 2, 3), ideal_pulse_matrices(), strict=True))
    worst = 0.0
    for pulse_id, source, amp_in, target, amp_out in PROTOCOL_TABLE:
        produced = pulses[pulse_id] @ (amp_in * basis_vector(source, GATE_DIM))
        worst = max(worst, _max_abs(produced - amp_out * basis_vector(target, GATE_DIM)))
    return worst


def _top_block(matrix: np.ndarray) -> np.ndarray:
    return matrix[:COMPUTATIONAL_DIM, :COMPUTATIONAL_DIM]


def _ideal_checks() -> list[tuple[str, Callable[[], float], float]]:
    gate = compose_gate(ZERO_NOISES)
    kraus = kraus_from_gate(gate)
    return [
        ("protocol_table", protocol_table_residual, EXACT_TOLERANCE),
        ("cminus_core", lambda: _max_abs(_top_block(cminus_core()) - CMINUS4), EXACT_TOLERANCE),
        ("ideal_cnot", lambda: _max_abs(_top_block(gate) - CNOT4), ALGEBRAIC_TOLERANCE),
        ("unitarity", lambda: MatrixValidator.unitarity_residual(gate), ALGEBRAIC_TOLERANCE),
        (
            "no_leakage",
            lambda: leakage_probabilities(
                reduced_state(DensityMatrix.maximally_mixed(), gate)
            )[1],
            ALGEBRAIC_TOLERANCE,
        ),
        ("kraus_a1_is_cnot", lambda: _max_abs(kraus.a1 - CNOT4), ALGEBRAIC_TOLERANCE),
        ("kraus_a3_zero", lambda: _max_abs(kraus.a3), ALGEBRAIC_TOLERANCE),
        ("kraus_c1_zero", lambda: _max_abs(kraus.c1), ALGEBRAIC_TOLERANCE),
        ("kraus_c3_zero", lambda: _max_abs(kraus.c3), ALGEBRAIC_TOLERANCE),
        ("kraus_completeness", kraus.completeness_residual, ALGEBRAIC_TOLERANCE),
        (
            "kraus_closed_form",
            lambda: kraus_cross_residual(ZERO_NOISES).residual,
            ALGEBRAIC_TOLERANCE,
        ),
    ]


def run_ideal_checks() -> list[CheckResult]:
    """Run every ideal-gate check in a fixed order."""
    return [
        CheckResult(name=name, residual=float(compute()), tolerance=tolerance)
        for name, compute, tolerance in _ideal_checks()
    ]
