"""
Run specifications for single runs, sweeps and Monte Carlo ensembles.

All specs are frozen pydantic models. Construct them through build_spec so
that validation failures surface as InvalidArgumentError instead of
pydantic's ValidationError.
"""

from __future__ import annotations

import itertools
import math
from typing import Any, Literal, TypeVar

import numpy as np
import numpy.typing as npt
from czsim.channel import DensityMatrix, as_density_matrix
from czsim.metrics import DEFAULT_FIDELITY_SAMPLES, DEFAULT_SEED
from czsim.pulses import (
    COMPUTATIONAL_DIM,
    NOISE_PARAMETER_NAMES,
    HadamardMode,
    InvalidArgumentError,
    PulseNoise,
    basis_vector,
    noises_from_mapping,
)
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

DEFAULT_SWEEP_BOUND = 0.3
DEFAULT_SWEEP_STEPS = 61
DEFAULT_SIGMA = 0.05
DEFAULT_MONTECARLO_SAMPLES = 1000
# Seeds are 64-bit integers, signed or unsigned.
SEED_MIN = -(2**63)
SEED_MAX = 2**64 - 1

Model = TypeVar("Model", bound=BaseModel)

# Flat [re, im] pairs, row-major 4x4.
MatrixEntries = tuple[tuple[tuple[float, float], ...], ...]


def normalize_parameter_name(name: str) -> str:
    """
    Map ``dtheta2`` or ``d_theta2`` to the canonical ``d_theta2``.

    Raises:
        InvalidArgumentError: If the name is not one of the nine parameters
    """
    candidate = name.strip()
    if not candidate.startswith("d_") and candidate.startswith("d"):
        candidate = f"d_{candidate[1:]}"
    if candidate not in NOISE_PARAMETER_NAMES:
        raise InvalidArgumentError(
            f"Unknown noise parameter {name!r}; valid names: {', '.join(NOISE_PARAMETER_NAMES)}",
            parameter=name,
        )
    return candidate


def build_spec(model_cls: type[Model], **data: Any) -> Model:
    """
    Validate ``data`` into ``model_cls``.

    Raises:
        InvalidArgumentError: With the offending field path as ``parameter``
    """
    try:
        return model_cls(**data)
    except ValidationError as e:
        errors = e.errors(include_url=False)
        details = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or model_cls.__name__}: {err['msg']}"
            for err in errors
        )
        first = ".".join(str(part) for part in errors[0]["loc"]) if errors else None
        raise InvalidArgumentError(
            f"Invalid {model_cls.__name__}: {details}", parameter=first or None
        ) from e


class _Spec(BaseModel):
    model_config = ConfigDict(frozen=True, allow_inf_nan=False, extra="forbid")


class InputSpec(_Spec):
    """Input state of a run: maximally mixed, a basis state, or an explicit matrix."""

    kind: Literal["mixed", "basis", "matrix"] = "mixed"
    basis_index: int | None = None
    entries: MatrixEntries | None = None

    @model_validator(mode="after")
    def _check_kind(self) -> InputSpec:
        if self.kind == "basis":
            if self.basis_index is None or not 0 <= self.basis_index < COMPUTATIONAL_DIM:
                raise ValueError(f"basis index must be in 0..3, got {self.basis_index}")
        elif self.basis_index is not None:
            raise ValueError("basis_index is only valid for kind 'basis'")

        if self.kind == "matrix":
            if self.entries is None or len(self.entries) != COMPUTATIONAL_DIM or any(
                len(row) != COMPUTATIONAL_DIM for row in self.entries
            ):
                raise ValueError("matrix input must be a 4x4 array of [re, im] pairs")
            # Raises NumericalValidationError, which pydantic does not wrap.
            self.resolve()
        elif self.entries is not None:
            raise ValueError("entries are only valid for kind 'matrix'")
        return self

    @classmethod
    def parse(cls, text: str) -> InputSpec:
        """
        Parse ``mixed`` or ``basis:K``.

        ``file:PATH`` inputs are loaded by the caller and passed to from_matrix.
        """
        value = text.strip()
        if value == "mixed":
            return cls()
        if value.startswith("basis:"):
            raw = value.removeprefix("basis:")
            try:
                index = int(raw)
            except ValueError as e:
                raise InvalidArgumentError(
                    f"Basis index must be an integer, got {raw!r}", parameter="input"
                ) from e
            return build_spec(cls, kind="basis", basis_index=index)
        raise InvalidArgumentError(
            f"Input must be 'mixed', 'basis:K' or 'file:PATH', got {text!r}", parameter="input"
        )

    @classmethod
    def from_matrix(cls, matrix: npt.ArrayLike) -> InputSpec:
        """Build a matrix input from a complex array or nested [re, im] pairs."""
        array = np.asarray(matrix)
        if np.iscomplexobj(array) or array.ndim == 2:
            array = np.stack([array.real, array.imag], axis=-1)
        if array.shape != (COMPUTATIONAL_DIM, COMPUTATIONAL_DIM, 2):
            raise InvalidArgumentError(
                f"Input matrix must be 4x4 of [re, im] pairs, got shape {array.shape}",
                parameter="input",
            )
        entries = tuple(
            tuple((float(re), float(im)) for re, im in row) for row in array.astype(float)
        )
        return build_spec(cls, kind="matrix", entries=entries)

    def resolve(self) -> DensityMatrix:
        """Return the validated 4x4 density matrix."""
        if self.kind == "basis":
            return DensityMatrix.from_basis(self.basis_index)  # type: ignore[arg-type]
        if self.kind == "matrix":
            pairs = np.asarray(self.entries, dtype=float)
            return as_density_matrix(pairs[..., 0] + 1j * pairs[..., 1], "input")
        return DensityMatrix.maximally_mixed()

    def pure_state(self) -> npt.NDArray[np.complex128] | None:
        """Return the input vector for basis inputs, else None."""
        if self.kind == "basis":
            return basis_vector(self.basis_index, COMPUTATIONAL_DIM)  # type: ignore[arg-type]
        return None


class RunConfig(_Spec):
    """One noise configuration plus the settings of its figures of merit."""

    d_theta1: float = 0.0
    d_psi1: float = 0.0
    d_phi1: float = 0.0
    d_theta2: float = 0.0
    d_psi2: float = 0.0
    d_phi2: float = 0.0
    d_theta3: float = 0.0
    d_psi3: float = 0.0
    d_phi3: float = 0.0
    hadamard_mode: HadamardMode = HadamardMode.PAPER
    input: InputSpec = Field(default_factory=InputSpec)
    samples: int = Field(default=DEFAULT_FIDELITY_SAMPLES, ge=1)
    seed: int = Field(default=DEFAULT_SEED, ge=SEED_MIN, le=SEED_MAX)

    def noise_mapping(self) -> dict[str, float]:
        """Return the nine noise values by name."""
        return {name: getattr(self, name) for name in NOISE_PARAMETER_NAMES}

    def noises(self) -> tuple[PulseNoise, PulseNoise, PulseNoise]:
        """Return the noise triple for pulses 1-3."""
        return noises_from_mapping(self.noise_mapping())

    def with_noise(self, values: dict[str, float]) -> RunConfig:
        """Return a copy with some noise values replaced (canonical names only)."""
        return self.model_copy(update={name: float(v) for name, v in values.items()})


class SweepAxis(_Spec):
    """One swept parameter with an inclusive range."""

    name: str
    start: float = -DEFAULT_SWEEP_BOUND
    end: float = DEFAULT_SWEEP_BOUND
    steps: int = Field(default=DEFAULT_SWEEP_STEPS, ge=2)

    @field_validator("name")
    @classmethod
    def _canonical_name(cls, value: str) -> str:
        try:
            return normalize_parameter_name(value)
        except InvalidArgumentError as e:
            raise ValueError(str(e)) from e

    @model_validator(mode="after")
    def _check_range(self) -> SweepAxis:
        if self.start > self.end:
            raise ValueError(f"start ({self.start}) must not exceed end ({self.end})")
        return self

    def points(self) -> list[float]:
        """Grid values start + k*(end - start)/(steps - 1); the last one is exactly end."""
        step = (self.end - self.start) / (self.steps - 1)
        values = [self.start + k * step for k in range(self.steps - 1)]
        values.append(self.end)
        return values


class SweepSpec(_Spec):
    """A 1D or 2D grid over noise parameters around a base configuration."""

    axes: tuple[SweepAxis, ...] = Field(min_length=1, max_length=2)
    base: RunConfig = Field(default_factory=RunConfig)
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _distinct_axes(self) -> SweepSpec:
        names = [axis.name for axis in self.axes]
        if len(set(names)) != len(names):
            raise ValueError(f"axis names must be distinct, got {names}")
        return self

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(axis.steps for axis in self.axes)

    def grid(self) -> list[RunConfig]:
        """Return one RunConfig per grid point in row-major axis order."""
        names = [axis.name for axis in self.axes]
        return [
            self.base.with_noise(dict(zip(names, point, strict=True)))
            for point in itertools.product(*(axis.points() for axis in self.axes))
        ]


class MonteCarloSpec(_Spec):
    """
    Gaussian noise ensemble.

    Each sample draws nine independent zero-mean perturbations. The class
    deviations apply to all three pulses; sigma_overrides replaces the
    deviation of individual parameters.
    """

    sigma_theta: float = Field(default=DEFAULT_SIGMA, ge=0.0)
    sigma_psi: float = Field(default=DEFAULT_SIGMA, ge=0.0)
    sigma_phi: float = Field(default=DEFAULT_SIGMA, ge=0.0)
    sigma_overrides: dict[str, float] = Field(default_factory=dict)
    samples: int = Field(default=DEFAULT_MONTECARLO_SAMPLES, ge=1)
    seed: int = Field(default=DEFAULT_SEED, ge=SEED_MIN, le=SEED_MAX)
    hadamard_mode: HadamardMode = HadamardMode.PAPER
    input: InputSpec = Field(default_factory=InputSpec)
    fidelity_samples: int = Field(default=DEFAULT_FIDELITY_SAMPLES, ge=1)
    workers: int = Field(default=1, ge=1)
    per_sample: bool = False

    @field_validator("sigma_overrides")
    @classmethod
    def _check_overrides(cls, value: dict[str, float]) -> dict[str, float]:
        canonical: dict[str, float] = {}
        for name, sigma in value.items():
            try:
                key = normalize_parameter_name(name)
            except InvalidArgumentError as e:
                raise ValueError(str(e)) from e
            if sigma < 0.0 or not math.isfinite(sigma):
                raise ValueError(f"sigma for {key} must be >= 0, got {sigma}")
            canonical[key] = float(sigma)
        return canonical

    def sigmas(self) -> npt.NDArray[np.float64]:
        """Return the nine standard deviations in NOISE_PARAMETER_NAMES order."""
        by_class = {"theta": self.sigma_theta, "psi": self.sigma_psi, "phi": self.sigma_phi}
        return np.array(
            [
                self.sigma_overrides.get(name, by_class[name[2:-1]])
                for name in NOISE_PARAMETER_NAMES
            ],
            dtype=np.float64,
        )

    def base_config(self) -> RunConfig:
        """Return the zero-noise RunConfig carrying this ensemble's settings."""
        return RunConfig(
            hadamard_mode=self.hadamard_mode,
            input=self.input,
            samples=self.fidelity_samples,
            seed=self.seed,
        )
