"""
Batch evaluation of noise configurations.

Provides:
- run_single: full pipeline plus Kraus cross-check for one RunConfig
- run_sweep: 1D/2D grids in row-major order
- run_montecarlo: Gaussian ensembles with percentile summaries
- parameter_sensitivity: one-at-a-time ranking of the nine parameters

Grid points and samples are independent; with workers > 1 they run on a
thread pool whose map keeps input order, so results never depend on the
worker count.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, TypeVar

import numpy as np
from czsim.channel import kraus_cross_residual, kraus_from_gate, reduced_state
from czsim.metrics import DEFAULT_FIDELITY_SAMPLES, DEFAULT_SEED, ChannelReport, build_report
from czsim.pulses import NOISE_PARAMETER_NAMES, HadamardMode, InvalidArgumentError, compose_gate
from czsim.sweeps.config import (
    DEFAULT_SIGMA,
    InputSpec,
    MonteCarloSpec,
    RunConfig,
    SweepSpec,
    build_spec,
)

logger = logging.getLogger(__name__)

SUMMARY_STATISTICS = ("mean", "min", "max", "p05", "p50", "p95")
SUMMARY_METRICS = ("p_anc", "avg_fidelity")
SENSITIVITY_COLUMNS = ("parameter", "magnitude", "p_anc", "avg_fidelity", "infidelity")

_SEED_MODULUS = 2**64

T = TypeVar("T")
R = TypeVar("R")


def _ordered_map(fn: Callable[[T], R], items: Sequence[T], workers: int) -> list[R]:
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _evaluate(config: RunConfig, cross_check: bool = True) -> ChannelReport:
    noises = config.noises()
    gate = compose_gate(noises, config.hadamard_mode)
    state = reduced_state(config.input.resolve(), gate)
    return build_report(
        state,
        noises,
        config.hadamard_mode,
        kraus=kraus_from_gate(gate),
        input_state=config.input.pure_state(),
        samples=config.samples,
        seed=config.seed,
        cross_check=kraus_cross_residual(noises) if cross_check else None,
    )


def run_single(config: RunConfig) -> ChannelReport:
    """
    Run the full pipeline for one configuration.

    The report also records the residual between closed-form and
    gate-extracted Kraus operators.

    Raises:
        NumericalValidationError: If the input state or an intermediate fails validation
    """
    report = _evaluate(config)
    logger.info(
        "Run finished: p_anc=%r avg_fidelity=%r cross_residual=%.3g",
        report.p_anc,
        report.avg_fidelity,
        report.kraus_cross_residual,
    )
    return report


def run_sweep(spec: SweepSpec) -> list[ChannelReport]:
    """
    Evaluate every grid point of ``spec``.

    Returns:
        One report per grid point, in row-major axis order
    """
    configs = spec.grid()
    logger.debug("Sweep grid %s: %d points, %d workers", spec.shape, len(configs), spec.workers)
    reports = _ordered_map(_evaluate, configs, spec.workers)
    logger.info(
        "Sweep over %s finished: %d rows", ", ".join(a.name for a in spec.axes), len(reports)
    )
    return reports


@dataclass(frozen=True)
class MonteCarloResult:
    """
    Outcome of a Monte Carlo run.

    Attributes:
        summary: statistic name -> {"p_anc": ..., "avg_fidelity": ...}
        reports: Per-sample reports, empty unless the spec asked for them
        samples: Number of drawn samples
        seed: Seed of the noise generator
    """

    summary: dict[str, dict[str, float]]
    samples: int
    seed: int
    reports: tuple[ChannelReport, ...] = field(default_factory=tuple)

    def summary_rows(self) -> list[dict[str, Any]]:
        """Return rows of (statistic, p_anc, avg_fidelity)."""
        return [{"statistic": name, **self.summary[name]} for name in SUMMARY_STATISTICS]

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-serializable dictionary."""
        data: dict[str, Any] = {"summary": self.summary}
        if self.reports:
            data["samples"] = [report.to_dict() for report in self.reports]
        return data


def draw_noise_samples(spec: MonteCarloSpec) -> np.ndarray:
    """
    Draw the N x 9 perturbation matrix of an ensemble.

    Columns follow NOISE_PARAMETER_NAMES; the generator is PCG64 seeded
    with spec.seed modulo 2**64.
    """
    rng = np.random.Generator(np.random.PCG64(spec.seed % _SEED_MODULUS))
    z = rng.standard_normal((spec.samples, len(NOISE_PARAMETER_NAMES)))
    # + 0.0 turns the -0.0 of zero-sigma columns into 0.0
    return z * spec.sigmas() + 0.0


def summarize(values: Iterable[float]) -> dict[str, float]:
    """Return mean, min, max and the 5th/50th/95th percentiles."""
    data = np.fromiter(values, dtype=np.float64)
    p05, p50, p95 = np.percentile(data, [5.0, 50.0, 95.0])
    return {
        "mean": float(np.mean(data)),
        "min": float(np.min(data)),
        "max": float(np.max(data)),
        "p05": float(p05),
        "p50": float(p50),
        "p95": float(p95),
    }


def run_montecarlo(spec: MonteCarloSpec) -> MonteCarloResult:
    """
    Evaluate a Gaussian noise ensemble.

    Every sample shares the Haar input states of the fidelity sampler
    (seeded with spec.seed), so sample-to-sample differences come from the
    noise alone. The Kraus cross-check is skipped per sample.
    """
    base = spec.base_config()
    draws = draw_noise_samples(spec)
    configs = [
        base.with_noise(dict(zip(NOISE_PARAMETER_NAMES, row.tolist(), strict=True)))
        for row in draws
    ]
    logger.debug("Monte Carlo: %d samples, sigmas=%s", spec.samples, spec.sigmas().tolist())
    reports = _ordered_map(lambda c: _evaluate(c, cross_check=False), configs, spec.workers)

    by_metric = {
        metric: summarize(getattr(report, metric) for report in reports)
        for metric in SUMMARY_METRICS
    }
    summary = {
        name: {metric: by_metric[metric][name] for metric in SUMMARY_METRICS}
        for name in SUMMARY_STATISTICS
    }
    logger.info(
        "Monte Carlo finished: %d samples, mean p_anc=%r, mean avg_fidelity=%r",
        spec.samples,
        summary["mean"]["p_anc"],
        summary["mean"]["avg_fidelity"],
    )
    return MonteCarloResult(
        summary=summary,
        samples=spec.samples,
        seed=spec.seed,
        reports=tuple(reports) if spec.per_sample else (),
    )


@dataclass(frozen=True)
class SensitivityRow:
    """Figures of merit for one parameter perturbed alone."""

    parameter: str
    magnitude: float
    p_anc: float
    avg_fidelity: float
    infidelity: float

    def to_dict(self) -> dict[str, Any]:
        """Return the row keyed by SENSITIVITY_COLUMNS."""
        return {name: getattr(self, name) for name in SENSITIVITY_COLUMNS}


def parameter_sensitivity(
    magnitude: float = DEFAULT_SIGMA,
    hadamard_mode: HadamardMode | str = HadamardMode.PAPER,
    samples: int = DEFAULT_FIDELITY_SAMPLES,
    seed: int = DEFAULT_SEED,
    *,
    input_spec: InputSpec | None = None,
    workers: int = 1,
) -> list[SensitivityRow]:
    """
    Rank the nine parameters by the damage each does on its own.

    Each parameter is set to ``magnitude`` with the others at zero. Rows are
    sorted by infidelity, then leakage, both descending; ties keep the
    canonical parameter order.

    Raises:
        InvalidArgumentError: If magnitude is not finite or workers < 1
    """
    if not math.isfinite(magnitude):
        raise InvalidArgumentError(
            f"magnitude must be finite, got {magnitude}", parameter="magnitude"
        )
    if workers < 1:
        raise InvalidArgumentError(f"workers must be >= 1, got {workers}", parameter="workers")

    base = build_spec(
        RunConfig,
        hadamard_mode=hadamard_mode,
        input=input_spec or InputSpec(),
        samples=samples,
        seed=seed,
    )
    configs = [base.with_noise({name: magnitude}) for name in NOISE_PARAMETER_NAMES]
    reports = _ordered_map(lambda c: _evaluate(c, cross_check=False), configs, workers)

    rows = [
        SensitivityRow(
            parameter=name,
            magnitude=magnitude,
            p_anc=report.p_anc,
            avg_fidelity=report.avg_fidelity,  # type: ignore[arg-type]
            infidelity=report.infidelity,  # type: ignore[arg-type]
        )
        for name, report in zip(NOISE_PARAMETER_NAMES, reports, strict=True)
    ]
    rows.sort(key=lambda row: (row.infidelity, row.p_anc), reverse=True)
    logger.info("Sensitivity at magnitude %r: most damaging %s", magnitude, rows[0].parameter)
    return rows
