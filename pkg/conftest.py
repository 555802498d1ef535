"""Shared pytest fixtures for czsim packages."""

import numpy as np
import pytest
from czsim.pulses import PulseNoise

# Largest perturbation used by the random-noise property tests (radians).
NOISE_BOUND = 0.5


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded PCG64 generator for reproducible random inputs."""
    return np.random.default_rng(20240917)


@pytest.fixture
def random_noises(rng):
    """Factory for seeded noise triples with every perturbation in [-bound, bound]."""

    def make(count: int, bound: float = NOISE_BOUND) -> list[tuple[PulseNoise, ...]]:
        draws = rng.uniform(-bound, bound, size=(count, 3, 3))
        return [tuple(PulseNoise(*(float(x) for x in row)) for row in draw) for draw in draws]

    return make


@pytest.fixture
def random_density(rng):
    """Factory for random full-rank density matrices of unit trace."""

    def make(dim: int = 4) -> np.ndarray:
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        rho = g @ g.conj().T
        return rho / np.trace(rho).real

    return make


@pytest.fixture
def sample_noises() -> tuple[PulseNoise, PulseNoise, PulseNoise]:
    """A fixed noise triple touching all nine parameters."""
    return (
        PulseNoise(d_theta=0.05, d_psi=-0.02, d_phi=0.03),
        PulseNoise(d_theta=0.2, d_psi=0.1, d_phi=-0.04),
        PulseNoise(d_theta=-0.03, d_psi=0.01, d_phi=0.02),
    )
