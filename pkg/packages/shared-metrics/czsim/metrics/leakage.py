"""Leakage probabilities of the reduced state."""

from __future__ import annotations

import logging

from czsim.channel import ReducedState
from czsim.pulses import NumericalValidationError

logger = logging.getLogger(__name__)

PROBABILITY_TOLERANCE = 1e-12


def clamp_probability(value: float, name: str, tolerance: float = PROBABILITY_TOLERANCE) -> float:
    """
    Clamp a probability into [0, 1].

    Values within ``tolerance`` outside the interval are clamped; anything
    further out raises.

    Raises:
        NumericalValidationError: If value is outside [-tolerance, 1 + tolerance]
    """
    if value < -tolerance or value > 1.0 + tolerance:
        residual = -value if value < 0 else value - 1.0
        raise NumericalValidationError(
            f"{name} = {value!r} is outside [0, 1]",
            property_name="probability_range",
            residual=residual,
            parameter=name,
        )
    clamped = min(max(value, 0.0), 1.0)
    if clamped != value:
        logger.debug("Clamped %s from %r to %r", name, value, clamped)
    return clamped


def leakage_probabilities(
    state: ReducedState, tolerance: float = PROBABILITY_TOLERANCE
) -> tuple[float, float]:
    """
    Return (p_main, p_anc) = (tr rho1, tr rho4).

    Args:
        state: Reduced state produced from a normalized input
        tolerance: Window for the sum rule and the [0, 1] range

    Raises:
        NumericalValidationError: If p_main + p_anc differs from 1 by more than tolerance
    """
    p_main = state.main_trace
    p_anc = state.ancilla_trace
    residual = abs(p_main + p_anc - 1.0)
    if residual > tolerance:
        raise NumericalValidationError(
            f"p_main + p_anc = {p_main + p_anc!r}, expected 1",
            property_name="probability_sum",
            residual=residual,
        )
    return clamp_probability(p_main, "p_main", tolerance), clamp_probability(
        p_anc, "p_anc", tolerance
    )
