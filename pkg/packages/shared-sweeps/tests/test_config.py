"""Tests for run specifications."""

import numpy as np
import pytest
from czsim.pulses import (
    NOISE_PARAMETER_NAMES,
    HadamardMode,
    InvalidArgumentError,
    NumericalValidationError,
)
from czsim.sweeps import (
    SEED_MAX,
    SEED_MIN,
    InputSpec,
    MonteCarloSpec,
    RunConfig,
    SweepAxis,
    SweepSpec,
    build_spec,
    normalize_parameter_name,
)
from numpy.testing import assert_allclose, assert_array_equal


class TestInputSpec:
    """Tests for InputSpec."""

    def test_default_is_mixed(self) -> None:
        """Test that the default input is I/4."""
        assert_allclose(InputSpec().resolve().matrix, np.eye(4) / 4)
        assert InputSpec().pure_state() is None

    def test_parse_mixed(self) -> None:
        """Test parsing 'mixed'."""
        assert InputSpec.parse("mixed") == InputSpec()

    def test_parse_basis(self) -> None:
        """Test that basis inputs resolve to projectors and expose the vector."""
        spec = InputSpec.parse("basis:2")
        assert spec.kind == "basis"
        assert spec.resolve().matrix[2, 2] == 1.0
        assert_array_equal(spec.pure_state(), [0, 0, 1, 0])

    @pytest.mark.parametrize("text", ["basis:4", "basis:-1", "basis:x", "pure", "file"])
    def test_parse_rejects(self, text: str) -> None:
        """Test that malformed inputs are argument errors."""
        with pytest.raises(InvalidArgumentError):
            InputSpec.parse(text)

    def test_from_complex_matrix(self) -> None:
        """Test a matrix input with a coherence."""
        rho = np.diag([0.5, 0.5, 0, 0]).astype(complex)
        rho[0, 1] = 0.25j
        rho[1, 0] = -0.25j
        spec = InputSpec.from_matrix(rho)
        assert spec.kind == "matrix"
        assert_allclose(spec.resolve().matrix, rho)

    def test_from_pairs(self) -> None:
        """Test a matrix given as nested [re, im] pairs."""
        pairs = [[[0.25 if i == j else 0.0, 0.0] for j in range(4)] for i in range(4)]
        assert_allclose(InputSpec.from_matrix(pairs).resolve().matrix, np.eye(4) / 4)

    def test_from_matrix_wrong_shape(self) -> None:
        """Test that non-4x4 matrices are rejected."""
        with pytest.raises(InvalidArgumentError):
            InputSpec.from_matrix(np.eye(3) / 3)

    def test_from_matrix_not_density(self) -> None:
        """Test that a non-positive matrix fails numerical validation."""
        with pytest.raises(NumericalValidationError) as exc_info:
            InputSpec.from_matrix(np.diag([1.5, -0.5, 0, 0]))
        assert exc_info.value.parameter == "input"


class TestRunConfig:
    """Tests for RunConfig."""

    def test_defaults(self) -> None:
        """Test the zero-noise defaults."""
        config = RunConfig()
        assert all(v == 0.0 for v in config.noise_mapping().values())
        assert config.hadamard_mode is HadamardMode.PAPER
        assert config.samples == 512
        assert config.seed == 0

    def test_noises(self) -> None:
        """Test that flat fields map onto pulses."""
        noises = build_spec(RunConfig, d_theta2=0.2, d_phi3=-0.1).noises()
        assert noises[1].d_theta == 0.2
        assert noises[2].d_phi == -0.1

    def test_mode_from_string(self) -> None:
        """Test that the Hadamard mode accepts its string value."""
        config = build_spec(RunConfig, hadamard_mode="physical")
        assert config.hadamard_mode is HadamardMode.PHYSICAL

    @pytest.mark.parametrize(
        "data,parameter",
        [
            ({"samples": 0}, "samples"),
            ({"d_theta1": float("nan")}, "d_theta1"),
            ({"d_psi2": float("inf")}, "d_psi2"),
            ({"hadamard_mode": "other"}, "hadamard_mode"),
            ({"d_omega1": 0.1}, "d_omega1"),
            ({"seed": 2**64}, "seed"),
            ({"seed": -(2**63) - 1}, "seed"),
        ],
    )
    def test_rejects(self, data: dict, parameter: str) -> None:
        """Test that invalid fields become argument errors naming the field."""
        with pytest.raises(InvalidArgumentError) as exc_info:
            build_spec(RunConfig, **data)
        assert exc_info.value.parameter == parameter

    @pytest.mark.parametrize("seed", [SEED_MIN, -1, 0, 2**63, SEED_MAX])
    def test_seed_range(self, seed: int) -> None:
        """Test that every signed or unsigned 64-bit seed is accepted."""
        assert build_spec(RunConfig, seed=seed).seed == seed

    def test_with_noise(self) -> None:
        """Test that with_noise leaves the original untouched."""
        base = RunConfig()
        moved = base.with_noise({"d_theta2": 0.1})
        assert moved.d_theta2 == 0.1
        assert base.d_theta2 == 0.0


class TestSweepAxis:
    """Tests for SweepAxis."""

    @pytest.mark.parametrize("name", ["dtheta2", "d_theta2", " dtheta2 "])
    def test_name_aliases(self, name: str) -> None:
        """Test that both spellings normalize to the canonical name."""
        assert build_spec(SweepAxis, name=name).name == "d_theta2"

    def test_unknown_name_lists_valid_names(self) -> None:
        """Test that an unknown axis name lists the nine parameters."""
        with pytest.raises(InvalidArgumentError) as exc_info:
            build_spec(SweepAxis, name="bogus")
        for name in NOISE_PARAMETER_NAMES:
            assert name in str(exc_info.value)
        assert exc_info.value.parameter == "name"

    def test_steps_minimum(self) -> None:
        """Test that fewer than two steps is rejected."""
        with pytest.raises(InvalidArgumentError):
            build_spec(SweepAxis, name="d_theta2", steps=1)

    def test_start_after_end(self) -> None:
        """Test that a reversed range is rejected."""
        with pytest.raises(InvalidArgumentError):
            build_spec(SweepAxis, name="d_theta2", start=0.3, end=-0.3)

    def test_points_include_endpoints(self) -> None:
        """Test that the grid has both endpoints exactly."""
        points = build_spec(SweepAxis, name="d_theta2", start=-0.3, end=0.3, steps=61).points()
        assert len(points) == 61
        assert points[0] == -0.3
        assert points[-1] == 0.3
        assert points[30] == pytest.approx(0.0, abs=1e-15)

    def test_degenerate_range(self) -> None:
        """Test that start == end repeats the value."""
        assert build_spec(SweepAxis, name="d_psi1", start=0.1, end=0.1, steps=3).points() == [
            0.1
        ] * 3


class TestSweepSpec:
    """Tests for SweepSpec."""

    def test_distinct_axes(self) -> None:
        """Test that the same parameter twice is rejected."""
        with pytest.raises(InvalidArgumentError):
            build_spec(SweepSpec, axes=[{"name": "dtheta2"}, {"name": "d_theta2"}])

    @pytest.mark.parametrize("count", [0, 3])
    def test_axis_count(self, count: int) -> None:
        """Test that only one or two axes are allowed."""
        names = ["d_theta1", "d_theta2", "d_theta3"][:count]
        with pytest.raises(InvalidArgumentError):
            build_spec(SweepSpec, axes=[{"name": n} for n in names])

    def test_workers_minimum(self) -> None:
        """Test that workers must be positive."""
        with pytest.raises(InvalidArgumentError):
            build_spec(SweepSpec, axes=[{"name": "d_theta1"}], workers=0)

    def test_grid_row_major(self) -> None:
        """Test that the first axis varies slowest."""
        spec = build_spec(
            SweepSpec,
            axes=[
                {"name": "d_theta1", "start": 0.0, "end": 1.0, "steps": 2},
                {"name": "d_phi3", "start": 0.0, "end": 2.0, "steps": 3},
            ],
            base={"d_psi2": 0.5},
        )
        grid = spec.grid()
        assert spec.shape == (2, 3)
        assert [(c.d_theta1, c.d_phi3) for c in grid] == [
            (0.0, 0.0),
            (0.0, 1.0),
            (0.0, 2.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (1.0, 2.0),
        ]
        assert all(c.d_psi2 == 0.5 for c in grid)


class TestMonteCarloSpec:
    """Tests for MonteCarloSpec."""

    @pytest.mark.parametrize(
        "data,parameter",
        [
            ({"sigma_theta": -0.1}, "sigma_theta"),
            ({"samples": 0}, "samples"),
            ({"fidelity_samples": 0}, "fidelity_samples"),
            ({"sigma_overrides": {"d_theta2": -1.0}}, "sigma_overrides"),
            ({"sigma_overrides": {"bogus": 0.1}}, "sigma_overrides"),
            ({"seed": 2**70}, "seed"),
        ],
    )
    def test_rejects(self, data: dict, parameter: str) -> None:
        """Test invalid deviations and counts."""
        with pytest.raises(InvalidArgumentError) as exc_info:
            build_spec(MonteCarloSpec, **data)
        assert exc_info.value.parameter == parameter

    def test_sigmas_order(self) -> None:
        """Test that class deviations and overrides land in parameter order."""
        spec = build_spec(
            MonteCarloSpec,
            sigma_theta=0.1,
            sigma_psi=0.2,
            sigma_phi=0.3,
            sigma_overrides={"dpsi2": 0.0},
        )
        assert spec.sigma_overrides == {"d_psi2": 0.0}
        assert_array_equal(spec.sigmas(), [0.1, 0.2, 0.3, 0.1, 0.0, 0.3, 0.1, 0.2, 0.3])

    def test_base_config(self) -> None:
        """Test that the base config carries the fidelity settings."""
        spec = build_spec(MonteCarloSpec, fidelity_samples=16, seed=3, hadamard_mode="physical")
        base = spec.base_config()
        assert base.samples == 16
        assert base.seed == 3
        assert base.hadamard_mode is HadamardMode.PHYSICAL


def test_normalize_parameter_name() -> None:
    """Test the alias helper directly."""
    assert normalize_parameter_name("dphi3") == "d_phi3"
    with pytest.raises(InvalidArgumentError):
        normalize_parameter_name("theta2")
