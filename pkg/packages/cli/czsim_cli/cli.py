"""
czsim command line - main entry point.

Subcommands:
- ideal: zero-noise self-checks, PASS/FAIL on stderr
- single: one noise configuration (JSON by default)
- sweep / grid: 1D and 2D parameter grids (CSV by default)
- montecarlo: Gaussian noise ensembles
- sensitivity: one-at-a-time ranking of the nine parameters

Exit codes: 0 success, 1 argument error, 2 numerical validation failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import NoReturn

from czsim.metrics import (
    DEFAULT_FIDELITY_SAMPLES,
    DEFAULT_SEED,
    REPORT_CSV_COLUMNS,
    ChannelReport,
)
from czsim.pulses import (
    NOISE_PARAMETER_NAMES,
    HadamardMode,
    InvalidArgumentError,
    NumericalValidationError,
)
from czsim.sweeps import (
    DEFAULT_MONTECARLO_SAMPLES,
    DEFAULT_SIGMA,
    DEFAULT_SWEEP_BOUND,
    DEFAULT_SWEEP_STEPS,
    SENSITIVITY_COLUMNS,
    InputSpec,
    MonteCarloSpec,
    RunConfig,
    SweepSpec,
    build_spec,
    parameter_sensitivity,
    run_montecarlo,
    run_single,
    run_sweep,
)
from czsim_cli.checks import run_ideal_checks
from czsim_cli.emit import OutputFormat, render, write_output

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ARGUMENT_ERROR = 1
EXIT_VALIDATION_ERROR = 2

SUMMARY_CSV_COLUMNS = ("statistic", "p_anc", "avg_fidelity")


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the argument-error code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGUMENT_ERROR, f"{self.prog}: error: {message}\n")


# =============================================================================
# Argument groups
# =============================================================================


def _flag(name: str) -> str:
    """d_theta2 -> --dtheta2"""
    return "--d" + name.removeprefix("d_")


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=None,
        help="Output format (single: json, other commands: csv)",
    )
    parser.add_argument("--output", default=None, help="Write to PATH instead of stdout")
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")


def _add_channel_options(parser: argparse.ArgumentParser, samples_flag: str = "--samples") -> None:
    parser.add_argument(
        "--hadamard-mode",
        choices=[m.value for m in HadamardMode],
        default=HadamardMode.PAPER.value,
        help="Hadamard embedding (default: paper)",
    )
    parser.add_argument(
        "--input",
        default="mixed",
        help="Input state: mixed, basis:K (K = 0..3) or file:PATH (default: mixed)",
    )
    parser.add_argument(
        samples_flag,
        dest="fidelity_samples",
        type=int,
        default=DEFAULT_FIDELITY_SAMPLES,
        help=f"Haar samples for avg_fidelity (default: {DEFAULT_FIDELITY_SAMPLES})",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Sampler seed (default: 0)")


def _add_noise_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("noise (radians)")
    for name in NOISE_PARAMETER_NAMES:
        group.add_argument(_flag(name), dest=name, type=float, default=0.0, metavar="RAD")


def _add_axis_options(parser: argparse.ArgumentParser, prefix: str = "") -> None:
    parser.add_argument(
        f"--{prefix}param",
        dest=f"{prefix.replace('-', '_')}param",
        required=True,
        help="Swept parameter, e.g. dtheta2",
    )
    parser.add_argument(
        f"--{prefix}from",
        dest=f"{prefix.replace('-', '_')}start",
        type=float,
        default=-DEFAULT_SWEEP_BOUND,
        metavar="RAD",
    )
    parser.add_argument(
        f"--{prefix}to",
        dest=f"{prefix.replace('-', '_')}end",
        type=float,
        default=DEFAULT_SWEEP_BOUND,
        metavar="RAD",
    )
    parser.add_argument(
        f"--{prefix}steps",
        dest=f"{prefix.replace('-', '_')}steps",
        type=int,
        default=DEFAULT_SWEEP_STEPS,
    )


def _add_workers_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--workers", type=int, default=1, help="Worker threads (default: 1)")


def build_parser() -> CommandParser:
    """Build the czsim argument parser."""
    parser = CommandParser(
        prog="czsim",
        description="Leakage and fidelity of the trapped-ion CNOT gate under pulse errors.",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    ideal = commands.add_parser("ideal", help="Run the zero-noise self-checks")
    ideal.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    ideal.set_defaults(handler=cmd_ideal)

    single = commands.add_parser("single", help="Evaluate one noise configuration")
    _add_noise_options(single)
    _add_channel_options(single)
    _add_output_options(single)
    single.set_defaults(handler=cmd_single, default_format=OutputFormat.JSON)

    sweep = commands.add_parser("sweep", help="Sweep one parameter")
    _add_axis_options(sweep)
    _add_noise_options(sweep)
    _add_channel_options(sweep)
    _add_workers_option(sweep)
    _add_output_options(sweep)
    sweep.set_defaults(handler=cmd_sweep, default_format=OutputFormat.CSV)

    grid = commands.add_parser("grid", help="Sweep two parameters on a grid")
    _add_axis_options(grid, "x-")
    _add_axis_options(grid, "y-")
    _add_noise_options(grid)
    _add_channel_options(grid)
    _add_workers_option(grid)
    _add_output_options(grid)
    grid.set_defaults(handler=cmd_grid, default_format=OutputFormat.CSV)

    montecarlo = commands.add_parser("montecarlo", help="Sample a Gaussian noise ensemble")
    for kind in ("theta", "psi", "phi"):
        montecarlo.add_argument(
            f"--sigma-{kind}",
            dest=f"sigma_{kind}",
            type=float,
            default=DEFAULT_SIGMA,
            metavar="RAD",
            help=f"Deviation of every d_{kind} (default: {DEFAULT_SIGMA})",
        )
    montecarlo.add_argument(
        "--sigma-override",
        action="append",
        default=[],
        metavar="NAME=RAD",
        help="Deviation for a single parameter, e.g. dtheta2=0.1 (repeatable)",
    )
    montecarlo.add_argument(
        "--samples",
        type=int,
        default=DEFAULT_MONTECARLO_SAMPLES,
        help=f"Ensemble size (default: {DEFAULT_MONTECARLO_SAMPLES})",
    )
    _add_channel_options(montecarlo, samples_flag="--fidelity-samples")
    montecarlo.add_argument("--per-sample", action="store_true", help="Emit one row per sample")
    _add_workers_option(montecarlo)
    _add_output_options(montecarlo)
    montecarlo.set_defaults(handler=cmd_montecarlo, default_format=OutputFormat.CSV)

    sensitivity = commands.add_parser("sensitivity", help="Rank parameters by damage")
    sensitivity.add_argument(
        "--magnitude",
        type=float,
        default=DEFAULT_SIGMA,
        metavar="RAD",
        help=f"Perturbation applied to each parameter (default: {DEFAULT_SIGMA})",
    )
    _add_channel_options(sensitivity)
    _add_workers_option(sensitivity)
    _add_output_options(sensitivity)
    sensitivity.set_defaults(handler=cmd_sensitivity, default_format=OutputFormat.CSV)

    return parser


# =============================================================================
# Spec construction
# =============================================================================


def load_input(text: str) -> InputSpec:
    """
    Resolve an --input value.

    file:PATH reads a JSON 4x4 array of [re, im] pairs.
    """
    if not text.startswith("file:"):
        return InputSpec.parse(text)
    path = Path(text.removeprefix("file:"))
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise InvalidArgumentError(f"Cannot read input file {path}: {e}", parameter="input") from e
    except json.JSONDecodeError as e:
        raise InvalidArgumentError(f"Input file {path} is not JSON: {e}", parameter="input") from e
    try:
        return InputSpec.from_matrix(data)
    except (TypeError, ValueError) as e:
        if isinstance(e, InvalidArgumentError):
            raise
        raise InvalidArgumentError(
            f"Input file {path} must hold a 4x4 array of [re, im] pairs", parameter="input"
        ) from e


def _run_config(args: argparse.Namespace) -> RunConfig:
    noise = {name: getattr(args, name) for name in NOISE_PARAMETER_NAMES}
    return build_spec(
        RunConfig,
        **noise,
        hadamard_mode=args.hadamard_mode,
        input=load_input(args.input),
        samples=args.fidelity_samples,
        seed=args.seed,
    )


def _axis(args: argparse.Namespace, prefix: str = "") -> dict[str, object]:
    return {
        "name": getattr(args, f"{prefix}param"),
        "start": getattr(args, f"{prefix}start"),
        "end": getattr(args, f"{prefix}end"),
        "steps": getattr(args, f"{prefix}steps"),
    }


def parse_sigma_overrides(items: Sequence[str]) -> dict[str, float]:
    """Parse NAME=RAD pairs from --sigma-override."""
    overrides: dict[str, float] = {}
    for item in items:
        name, sep, value = item.partition("=")
        try:
            if not sep:
                raise ValueError(item)
            overrides[name.strip()] = float(value)
        except ValueError as e:
            raise InvalidArgumentError(
                f"--sigma-override expects NAME=RAD, got {item!r}", parameter="sigma_overrides"
            ) from e
    return overrides


def _format(args: argparse.Namespace) -> OutputFormat:
    return OutputFormat(args.format) if args.format else args.default_format


# =============================================================================
# Commands
# =============================================================================


def cmd_ideal(args: argparse.Namespace) -> int:
    """Print every ideal-gate check; exit 2 if any fails."""
    results = run_ideal_checks()
    for result in results:
        print(result.describe(), file=sys.stderr)
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed", file=sys.stderr)
        return EXIT_VALIDATION_ERROR
    print(f"All {len(results)} checks passed", file=sys.stderr)
    return EXIT_OK


def cmd_single(args: argparse.Namespace) -> int:
    """Emit one ChannelReport."""
    report = run_single(_run_config(args))
    text = render(
        _format(args), rows=[report.to_row()], columns=REPORT_CSV_COLUMNS, document=report.to_dict()
    )
    write_output(text, args.output)
    return EXIT_OK


def _emit_reports(args: argparse.Namespace, reports: Sequence[ChannelReport]) -> int:
    text = render(
        _format(args),
        rows=[r.to_row() for r in reports],
        columns=REPORT_CSV_COLUMNS,
        document=[r.to_dict() for r in reports],
    )
    write_output(text, args.output)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Emit one row per point of a 1D sweep."""
    spec = build_spec(SweepSpec, axes=[_axis(args)], base=_run_config(args), workers=args.workers)
    return _emit_reports(args, run_sweep(spec))


def cmd_grid(args: argparse.Namespace) -> int:
    """Emit one row per point of a 2D grid, x varying slowest."""
    spec = build_spec(
        SweepSpec,
        axes=[_axis(args, "x_"), _axis(args, "y_")],
        base=_run_config(args),
        workers=args.workers,
    )
    return _emit_reports(args, run_sweep(spec))


def cmd_montecarlo(args: argparse.Namespace) -> int:
    """
    Emit Monte Carlo results.

    CSV carries the summary table, or the per-sample table with --per-sample;
    JSON carries the summary plus the samples when requested.
    """
    spec = build_spec(
        MonteCarloSpec,
        sigma_theta=args.sigma_theta,
        sigma_psi=args.sigma_psi,
        sigma_phi=args.sigma_phi,
        sigma_overrides=parse_sigma_overrides(args.sigma_override),
        samples=args.samples,
        seed=args.seed,
        hadamard_mode=args.hadamard_mode,
        input=load_input(args.input),
        fidelity_samples=args.fidelity_samples,
        workers=args.workers,
        per_sample=args.per_sample,
    )
    result = run_montecarlo(spec)
    if args.per_sample:
        rows, columns = [r.to_row() for r in result.reports], REPORT_CSV_COLUMNS
    else:
        rows, columns = result.summary_rows(), SUMMARY_CSV_COLUMNS
    text = render(_format(args), rows=rows, columns=columns, document=result.to_dict())
    write_output(text, args.output)
    return EXIT_OK


def cmd_sensitivity(args: argparse.Namespace) -> int:
    """Emit the sensitivity ranking."""
    rows = parameter_sensitivity(
        args.magnitude,
        args.hadamard_mode,
        args.fidelity_samples,
        args.seed,
        input_spec=load_input(args.input),
        workers=args.workers,
    )
    data = [row.to_dict() for row in rows]
    write_output(
        render(_format(args), rows=data, columns=SENSITIVITY_COLUMNS, document=data), args.output
    )
    return EXIT_OK


# =============================================================================
# Entry point
# =============================================================================


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Run the czsim command line and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    _configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except InvalidArgumentError as e:
        print(f"czsim {args.command}: error: {e}", file=sys.stderr)
        return EXIT_ARGUMENT_ERROR
    except NumericalValidationError as e:
        logger.debug("Validation failure in %s", e.property_name, exc_info=True)
        print(f"czsim {args.command}: validation failed: {e}", file=sys.stderr)
        return EXIT_VALIDATION_ERROR
    except OSError as e:
        print(f"czsim {args.command}: error: {e}", file=sys.stderr)
        return EXIT_ARGUMENT_ERROR


if __name__ == "__main__":
    sys.exit(main())
