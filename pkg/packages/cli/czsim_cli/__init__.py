"""
czsim CLI - command line front end for the trapped-ion CNOT simulator.

Exposes the simulator as subcommands:
- ideal (zero-noise self-checks)
- single, sweep, grid (noise configurations and grids)
- montecarlo, sensitivity (ensembles and parameter ranking)

Usage:
    # Via CLI
    czsim single --dtheta2 0.2 --input mixed --format json
    czsim sweep --param dtheta2 --from -0.3 --to 0.3 --steps 61 --output sweep.csv

    # Via uv
    uv run --package czsim-cli czsim montecarlo --sigma-theta 0.05 --samples 1000 --seed 7

    # Via Python
    from czsim_cli.cli import main
    exit_code = main(["ideal"])
"""

__version__ = "0.1.0"
