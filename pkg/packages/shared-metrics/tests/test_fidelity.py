"""Tests for state and average fidelities."""

import math

import numpy as np
import pytest
from czsim.channel import DensityMatrix, kraus_from_gate, reduced_state
from czsim.metrics import (
    average_fidelity,
    conditional_state_fidelity,
    haar_states,
    leakage_probabilities,
    sample_fidelities,
    state_fidelity,
)
from czsim.pulses import (
    InvalidArgumentError,
    NumericalValidationError,
    compose_gate,
    noises_from_mapping,
)
from numpy.testing import assert_allclose, assert_array_equal

EFFECTIVE_PARAMETERS = ["d_theta1", "d_theta2", "d_theta3", "d_psi2", "d_phi1", "d_phi3"]
NULL_PARAMETERS = ["d_psi1", "d_psi3", "d_phi2"]


def _state_for(vector: np.ndarray, values: dict[str, float]):
    gate = compose_gate(noises_from_mapping(values))
    return reduced_state(DensityMatrix.from_state_vector(vector), gate)


def _avg(values: dict[str, float], samples: int = 512, seed: int = 0) -> float:
    kraus = kraus_from_gate(compose_gate(noises_from_mapping(values)))
    return average_fidelity(kraus, samples, seed)


class TestStateFidelity:
    """Tests for state_fidelity."""

    @pytest.mark.parametrize(
        "vector",
        [
            np.array([0, 0, 1, 0]),
            np.array([1, 0, 1, 0]) / math.sqrt(2),
            np.array([0.5, 0.5j, -0.5, 0.5]),
        ],
    )
    def test_ideal_channel(self, vector: np.ndarray) -> None:
        """Test fidelity 1 for the ideal channel."""
        assert state_fidelity(_state_for(vector, {}), vector) == pytest.approx(1.0, abs=1e-12)

    def test_pulse2_psi_noise(self) -> None:
        """Test F = cos^2(0.15) for d_psi2 = 0.3 on |10>."""
        vector = np.array([0, 0, 1, 0])
        fidelity = state_fidelity(_state_for(vector, {"d_psi2": 0.3}), vector)
        assert fidelity == pytest.approx(math.cos(0.15) ** 2, abs=1e-12)

    def test_requires_normalized_input(self) -> None:
        """Test that an unnormalized input is rejected."""
        state = _state_for(np.array([1, 0, 0, 0]), {})
        with pytest.raises(NumericalValidationError) as exc_info:
            state_fidelity(state, np.array([1, 1, 0, 0]))
        assert exc_info.value.parameter == "input_state"

    def test_requires_four_levels(self) -> None:
        """Test that the input must be a 4-vector."""
        state = _state_for(np.array([1, 0, 0, 0]), {})
        with pytest.raises(InvalidArgumentError):
            state_fidelity(state, np.array([1, 0]))

    def test_leakage_depresses_fidelity(self) -> None:
        """Test that leakage lowers F but not the conditional fidelity bound."""
        vector = np.array([0, 0, 1, 0])
        state = _state_for(vector, {"d_theta2": 0.4})
        p_main, _ = leakage_probabilities(state)
        fidelity = state_fidelity(state, vector)
        conditional = conditional_state_fidelity(state, vector)
        assert fidelity <= p_main + 1e-12
        assert conditional == pytest.approx(fidelity / p_main, abs=1e-12)
        assert conditional >= fidelity


class TestHaarStates:
    """Tests for haar_states."""

    def test_shape_and_norm(self) -> None:
        """Test the output shape and unit norms."""
        states = haar_states(100, seed=3)
        assert states.shape == (100, 4)
        assert_allclose(np.linalg.norm(states, axis=1), 1.0, atol=1e-14)

    def test_uses_pcg64(self) -> None:
        """Test that the sampler is numpy's PCG64 stream."""
        z = np.random.default_rng(11).standard_normal((5, 8))
        expected = z[:, :4] + 1j * z[:, 4:]
        expected /= np.linalg.norm(expected, axis=1, keepdims=True)
        assert_array_equal(haar_states(5, seed=11), expected)

    def test_negative_seed(self) -> None:
        """Test that negative seeds are accepted deterministically."""
        assert_array_equal(haar_states(4, seed=-1), haar_states(4, seed=-1))

    def test_zero_samples(self) -> None:
        """Test that zero samples is an argument error."""
        with pytest.raises(InvalidArgumentError) as exc_info:
            haar_states(0)
        assert exc_info.value.parameter == "samples"


class TestAverageFidelity:
    """Tests for average_fidelity."""

    @pytest.mark.parametrize("seed", [0, 1, 12345])
    def test_ideal_channel(self, seed: int) -> None:
        """Test that the ideal channel has average fidelity 1."""
        assert _avg({}, seed=seed) == pytest.approx(1.0, abs=1e-12)

    def test_deterministic(self, sample_noises) -> None:
        """Test bit-identical results for the same seed."""
        kraus = kraus_from_gate(compose_gate(sample_noises))
        assert average_fidelity(kraus, 256, 9) == average_fidelity(kraus, 256, 9)

    def test_seed_changes_result(self, sample_noises) -> None:
        """Test that a different seed changes the estimate under noise."""
        kraus = kraus_from_gate(compose_gate(sample_noises))
        assert average_fidelity(kraus, 64, 1) != average_fidelity(kraus, 64, 2)

    def test_zero_samples(self) -> None:
        """Test that zero samples is rejected."""
        with pytest.raises(InvalidArgumentError):
            average_fidelity(kraus_from_gate(compose_gate()), samples=0)

    def test_matches_state_fidelity(self, sample_noises) -> None:
        """Test the vectorized sampler against per-state pipeline fidelities."""
        gate = compose_gate(sample_noises)
        states = haar_states(20, seed=4)
        vectorized = sample_fidelities(kraus_from_gate(gate), states)
        for psi, value in zip(states, vectorized, strict=True):
            pipeline = reduced_state(DensityMatrix.from_state_vector(psi), gate)
            assert value == pytest.approx(state_fidelity(pipeline, psi), abs=1e-12)

    @pytest.mark.parametrize("name", EFFECTIVE_PARAMETERS)
    def test_quadratic_scaling(self, name: str) -> None:
        """Test that halving a perturbation divides the infidelity by about four."""
        ratio = (1 - _avg({name: 0.02})) / (1 - _avg({name: 0.01}))
        assert 3.5 <= ratio <= 4.5

    @pytest.mark.parametrize("name", EFFECTIVE_PARAMETERS)
    def test_quadratic_scaling_small(self, name: str) -> None:
        """Test the scaling at the upper end of the small-error range."""
        ratio = (1 - _avg({name: 0.05})) / (1 - _avg({name: 0.025}))
        assert 4 * 0.88 <= ratio <= 4 * 1.12

    def test_leakage_quadratic_scaling(self) -> None:
        """Test that p_anc also scales quadratically in d_theta2."""
        mixed = DensityMatrix.maximally_mixed()

        def p_anc(delta: float) -> float:
            gate = compose_gate(noises_from_mapping({"d_theta2": delta}))
            return leakage_probabilities(reduced_state(mixed, gate))[1]

        assert 3.5 <= p_anc(0.02) / p_anc(0.01) <= 4.5

    @pytest.mark.parametrize("name", NULL_PARAMETERS)
    def test_null_parameters(self, name: str) -> None:
        """Test that null parameters keep the average fidelity at 1."""
        assert _avg({name: 0.5}) >= 1 - 1e-12
