"""
czsim Sweeps - single runs, parameter grids and Monte Carlo ensembles.

Usage:
    from czsim.sweeps import MonteCarloSpec, RunConfig, SweepAxis, SweepSpec, build_spec
    from czsim.sweeps import run_montecarlo, run_single, run_sweep

    report = run_single(build_spec(RunConfig, d_theta2=0.2))
    print(report.p_anc)

    spec = build_spec(
        SweepSpec, axes=[SweepAxis(name="dtheta2", start=-0.3, end=0.3, steps=61)]
    )
    rows = run_sweep(spec)

    result = run_montecarlo(build_spec(MonteCarloSpec, sigma_theta=0.05, samples=1000, seed=7))
    print(result.summary["mean"])
"""

from czsim.sweeps.config import (
    DEFAULT_MONTECARLO_SAMPLES,
    DEFAULT_SIGMA,
    DEFAULT_SWEEP_BOUND,
    DEFAULT_SWEEP_STEPS,
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
from czsim.sweeps.engine import (
    SENSITIVITY_COLUMNS,
    SUMMARY_METRICS,
    SUMMARY_STATISTICS,
    MonteCarloResult,
    SensitivityRow,
    draw_noise_samples,
    parameter_sensitivity,
    run_montecarlo,
    run_single,
    run_sweep,
    summarize,
)

__all__ = [
    # Run specs
    "InputSpec",
    "RunConfig",
    "SweepAxis",
    "SweepSpec",
    "MonteCarloSpec",
    "build_spec",
    "normalize_parameter_name",
    "DEFAULT_SWEEP_BOUND",
    "DEFAULT_SWEEP_STEPS",
    "DEFAULT_SIGMA",
    "DEFAULT_MONTECARLO_SAMPLES",
    "SEED_MIN",
    "SEED_MAX",
    # Engine
    "run_single",
    "run_sweep",
    "run_montecarlo",
    "draw_noise_samples",
    "summarize",
    "MonteCarloResult",
    "SUMMARY_STATISTICS",
    "SUMMARY_METRICS",
    # Sensitivity
    "parameter_sensitivity",
    "SensitivityRow",
    "SENSITIVITY_COLUMNS",
]
