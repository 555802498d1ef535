"""
Laser-pulse unitaries - ideal and perturbed 2x2 pulse matrices.

A pulse is fixed by three angles (radians):
- theta: impulse area, theta = Omega * t (Rabi intensity times duration)
- psi: phase related to the laser detuning
- phi: laser phase

The 2x2 unitary is

    [[cos(theta/2) e^{+i psi},  i sin(theta/2) e^{+i phi}],
     [i sin(theta/2) e^{-i phi}, cos(theta/2) e^{-i psi}]]

Pulses 1 and 3 map the control qubit onto the phonon and back; pulse 2
drives the target through its ancillary level.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from czsim.pulses.exceptions import InvalidArgumentError
from czsim.pulses.validation import ALGEBRAIC_TOLERANCE, MatrixValidator

PULSE_IDS = (1, 2, 3)

# Flat names of the nine perturbations, in pulse-major order.
NOISE_PARAMETER_NAMES = (
    "d_theta1",
    "d_psi1",
    "d_phi1",
    "d_theta2",
    "d_psi2",
    "d_phi2",
    "d_theta3",
    "d_psi3",
    "d_phi3",
)

_HALF_PI = math.pi / 2
_QUADRANT_COS_SIN = ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))
# Largest |k| for which k * pi/2 snaps to exact values.
_MAX_SNAP_QUADRANT = 64


def _require_finite(*values: float) -> None:
    for value in values:
        if not math.isfinite(value):
            raise InvalidArgumentError(f"Pulse angles must be finite, got {value}")


def _cos_sin(angle: float) -> tuple[float, float]:
    """Cosine and sine of the raw angle.

    Exact multiples of pi/2 come out as exact 0 and +-1, so the ideal pulse
    matrices have no rounding residue.
    """
    quadrant = round(angle / _HALF_PI)
    if abs(quadrant) <= _MAX_SNAP_QUADRANT and angle == quadrant * _HALF_PI:
        return _QUADRANT_COS_SIN[quadrant % 4]
    return math.cos(angle), math.sin(angle)


@dataclass(frozen=True)
class PulseParams:
    """Laser-pulse parameters.

    Attributes:
        theta: Impulse area Omega * t (radians). Omega and t never appear separately.
        psi: Detuning-related phase (radians)
        phi: Laser phase (radians)
    """

    theta: float
    psi: float
    phi: float

    def __post_init__(self) -> None:
        _require_finite(self.theta, self.psi, self.phi)


@dataclass(frozen=True)
class PulseNoise:
    """Additive perturbation of the three pulse parameters (radians)."""

    d_theta: float = 0.0
    d_psi: float = 0.0
    d_phi: float = 0.0

    def __post_init__(self) -> None:
        _require_finite(self.d_theta, self.d_psi, self.d_phi)

    @property
    def is_zero(self) -> bool:
        """Return True for the ideal (unperturbed) pulse."""
        return self.d_theta == 0.0 and self.d_psi == 0.0 and self.d_phi == 0.0


ZERO_NOISE = PulseNoise()
ZERO_NOISES = (ZERO_NOISE, ZERO_NOISE, ZERO_NOISE)


@dataclass(frozen=True)
class TwoLevelUnitary:
    """2x2 unitary of a single laser pulse."""

    u11: complex
    u12: complex
    u21: complex
    u22: complex

    def as_array(self) -> npt.NDArray[np.complex128]:
        """Return the matrix as a 2x2 complex array."""
        return np.array([[self.u11, self.u12], [self.u21, self.u22]], dtype=np.complex128)

    @classmethod
    def from_array(cls, matrix: npt.ArrayLike) -> TwoLevelUnitary:
        """
        Build from a 2x2 array, validating unitarity.

        Raises:
            InvalidArgumentError: If the shape is not 2x2
            NumericalValidationError: If the matrix is not unitary
        """
        m = np.asarray(matrix, dtype=np.complex128)
        if m.shape != (2, 2):
            raise InvalidArgumentError(f"Expected a 2x2 matrix, got shape {m.shape}")
        MatrixValidator.require_unitary(m, ALGEBRAIC_TOLERANCE)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    @property
    def determinant(self) -> complex:
        """Return det(U)."""
        return self.u11 * self.u22 - self.u12 * self.u21


# Ideal operating points. Pulse 2 uses theta = 2*pi, the triple that gives
# diag(-1, -1).
_IDEAL_PARAMS = {
    1: PulseParams(theta=math.pi, psi=math.pi, phi=0.0),
    2: PulseParams(theta=2 * math.pi, psi=0.0, phi=0.0),
    3: PulseParams(theta=math.pi, psi=math.pi, phi=0.0),
}

# Triple commonly quoted for pulse 2. It yields an anti-diagonal matrix, not
# diag(-1, -1), and is never used as a baseline.
STATED_PULSE2_PARAMS = PulseParams(theta=math.pi, psi=math.pi, phi=0.0)


def ideal_pulse_params(pulse_id: int) -> PulseParams:
    """
    Return the ideal parameters of a pulse.

    Args:
        pulse_id: 1, 2 or 3

    Returns:
        (pi, pi, 0) for pulses 1 and 3, (2*pi, 0, 0) for pulse 2

    Raises:
        InvalidArgumentError: If pulse_id is not 1, 2 or 3
    """
    validate_pulse_id(pulse_id)
    return _IDEAL_PARAMS[pulse_id]


def build_unitary(params: PulseParams) -> TwoLevelUnitary:
    """Evaluate the three-parameter pulse unitary."""
    c_half, s_half = _cos_sin(params.theta / 2)
    c_psi, s_psi = _cos_sin(params.psi)
    c_phi, s_phi = _cos_sin(params.phi)

    return TwoLevelUnitary(
        u11=complex(c_half * c_psi, c_half * s_psi),
        u12=complex(-s_half * s_phi, s_half * c_phi),
        u21=complex(s_half * s_phi, s_half * c_phi),
        u22=complex(c_half * c_psi, -c_half * s_psi),
    )


def apply_noise(params: PulseParams, noise: PulseNoise) -> PulseParams:
    """Add a perturbation to each of the three parameters."""
    return PulseParams(
        theta=params.theta + noise.d_theta,
        psi=params.psi + noise.d_psi,
        phi=params.phi + noise.d_phi,
    )


def noisy_unitary(pulse_id: int, noise: PulseNoise) -> TwoLevelUnitary:
    """Return the unitary of pulse ``pulse_id`` perturbed by ``noise``."""
    return build_unitary(apply_noise(ideal_pulse_params(pulse_id), noise))


def noisy_unitaries(
    noises: Sequence[PulseNoise],
) -> tuple[TwoLevelUnitary, TwoLevelUnitary, TwoLevelUnitary]:
    """Return the three perturbed pulse unitaries for a noise triple."""
    n1, n2, n3 = as_noise_triple(noises)
    return noisy_unitary(1, n1), noisy_unitary(2, n2), noisy_unitary(3, n3)


def noises_from_mapping(values: Mapping[str, float]) -> tuple[PulseNoise, PulseNoise, PulseNoise]:
    """
    Build a noise triple from flat parameter names (d_theta1 ... d_phi3).

    Missing names default to zero.

    Raises:
        InvalidArgumentError: If a name is not one of the nine parameters
    """
    unknown = sorted(set(values) - set(NOISE_PARAMETER_NAMES))
    if unknown:
        raise InvalidArgumentError(
            f"Unknown noise parameter(s) {unknown}; valid names: "
            f"{', '.join(NOISE_PARAMETER_NAMES)}",
            parameter=unknown[0],
        )
    return tuple(  # type: ignore[return-value]
        PulseNoise(
            d_theta=float(values.get(f"d_theta{k}", 0.0)),
            d_psi=float(values.get(f"d_psi{k}", 0.0)),
            d_phi=float(values.get(f"d_phi{k}", 0.0)),
        )
        for k in PULSE_IDS
    )


def noises_to_mapping(noises: Sequence[PulseNoise]) -> dict[str, float]:
    """Flatten a noise triple into the nine named parameters."""
    values: dict[str, float] = {}
    for k, noise in zip(PULSE_IDS, as_noise_triple(noises), strict=True):
        values[f"d_theta{k}"] = noise.d_theta
        values[f"d_psi{k}"] = noise.d_psi
        values[f"d_phi{k}"] = noise.d_phi
    return values


def validate_pulse_id(pulse_id: int) -> None:
    """Raise InvalidArgumentError unless pulse_id is 1, 2 or 3."""
    if pulse_id not in PULSE_IDS:
        raise InvalidArgumentError(
            f"Invalid pulse_id: {pulse_id} (expected 1, 2 or 3)", parameter="pulse_id"
        )


def as_noise_triple(
    noises: Sequence[PulseNoise],
) -> tuple[PulseNoise, PulseNoise, PulseNoise]:
    """Unpack exactly three PulseNoise values."""
    if len(noises) != 3:
        raise InvalidArgumentError(
            f"Expected three PulseNoise values, got {len(noises)}", parameter="noises"
        )
    return noises[0], noises[1], noises[2]
