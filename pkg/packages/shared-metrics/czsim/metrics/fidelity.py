"""
Fidelity figures of merit.

Fidelities are overlaps with the unnormalized main block rho1, so population
lost to the ancilla counts as infidelity. The renormalized variant is
available separately as conditional_state_fidelity.

Random inputs are normalized complex Gaussian vectors drawn from numpy's
PCG64 generator: for each sample eight standard normals, the first four the
real parts and the last four the imaginary parts.
"""

from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt
from czsim.channel import KrausSet, ReducedState
from czsim.metrics.leakage import clamp_probability
from czsim.pulses import CNOT4, InvalidArgumentError, MatrixValidator, NumericalValidationError

logger = logging.getLogger(__name__)

DEFAULT_FIDELITY_SAMPLES = 512
DEFAULT_SEED = 0

_SEED_MODULUS = 2**64


def _target(input_state: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    psi = np.asarray(input_state, dtype=np.complex128)
    if psi.shape != (4,):
        raise InvalidArgumentError(
            f"Input state must be a 4-vector, got shape {psi.shape}", parameter="input_state"
        )
    try:
        MatrixValidator.require_normalized(psi)
    except NumericalValidationError as e:
        raise e.with_parameter("input_state") from e
    return CNOT4 @ psi


def state_fidelity(state: ReducedState, input_state: npt.ArrayLike) -> float:
    """
    Return <phi| rho1 |phi> with |phi> = CNOT |input_state>.

    Raises:
        NumericalValidationError: If input_state is not normalized within 1e-12
    """
    phi = _target(input_state)
    overlap = complex(phi.conj() @ state.rho1 @ phi)
    return clamp_probability(overlap.real, "state_fidelity")


def conditional_state_fidelity(state: ReducedState, input_state: npt.ArrayLike) -> float:
    """Return state_fidelity renormalized by tr(rho1)."""
    main_trace = state.main_trace
    if main_trace <= 0.0:
        raise NumericalValidationError(
            "Main block is empty; conditional fidelity is undefined",
            property_name="trace",
            residual=abs(main_trace),
        )
    phi = _target(input_state)
    overlap = complex(phi.conj() @ state.rho1 @ phi).real / main_trace
    return clamp_probability(overlap, "conditional_state_fidelity")


def haar_states(samples: int, seed: int = DEFAULT_SEED) -> npt.NDArray[np.complex128]:
    """
    Draw Haar-random pure states on four levels.

    Args:
        samples: Number of states (>= 1)
        seed: Any integer; reduced modulo 2**64 for the PCG64 seed

    Returns:
        samples x 4 complex array with unit-norm rows
    """
    if samples < 1:
        raise InvalidArgumentError(f"samples must be >= 1, got {samples}", parameter="samples")
    rng = np.random.Generator(np.random.PCG64(seed % _SEED_MODULUS))
    z = rng.standard_normal((samples, 8))
    states = z[:, :4] + 1j * z[:, 4:]
    return states / np.linalg.norm(states, axis=1, keepdims=True)


def sample_fidelities(
    kraus: KrausSet, states: npt.NDArray[np.complex128]
) -> npt.NDArray[np.float64]:
    """Return |<phi|A1|psi>|^2 + |<phi|C1|psi>|^2 for each row psi of ``states``."""
    targets = states @ CNOT4.T
    main = np.einsum("si,ij,sj->s", targets.conj(), kraus.a1, states)
    phonon = np.einsum("si,ij,sj->s", targets.conj(), kraus.c1, states)
    return np.abs(main) ** 2 + np.abs(phonon) ** 2


def average_fidelity(
    kraus: KrausSet, samples: int = DEFAULT_FIDELITY_SAMPLES, seed: int = DEFAULT_SEED
) -> float:
    """
    Mean state fidelity over ``samples`` Haar-random pure inputs.

    Deterministic for a fixed seed; the reduction runs in sample order.

    Raises:
        InvalidArgumentError: If samples < 1
    """
    fidelities = sample_fidelities(kraus, haar_states(samples, seed))
    mean = float(np.mean(fidelities))
    logger.debug("Average fidelity over %d samples (seed=%d): %r", samples, seed, mean)
    return clamp_probability(mean, "avg_fidelity")
