#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Command line interface of the `spinchain` program. Subcommands: sweep,
equilibrium, prepare, oracle, spectra and selectivity.

Data is written to files in the output directory; progress is logged to
standard error. Configuration errors exit with status 2.
"""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from ..chain import reference_populations, write_population_table
from ..exceptions.errors import ConfigurationError, InvalidArgumentError, SpinchainError
from ..preparation import prepare_pseudopure
from ..utils.linalg import populations
from .config import ExperimentConfig, load_config
from .io import write_selectivity_table
from .sequence import (
    emit_equilibrium_report,
    emit_landmark_spectra,
    emit_sweep,
    selectivity_scan,
)


logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON experiment configuration")
    common.add_argument("--mode", choices=["ideal", "full"], help="evolution regime")
    common.add_argument(
        "--relaxation", choices=["on", "off"], help="relaxation during the pulses"
    )
    common.add_argument("--out", help="output directory")
    common.add_argument("--tau-max", type=float, help="end of the uniform tau grid")
    common.add_argument("--tau-steps", type=int, help="points of the uniform tau grid")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(
        prog="spinchain",
        description="Simulate a spin-chain emulation on a quadrupolar nucleus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("sweep", parents=[common], help="populations versus tau")
    sub.add_parser("equilibrium", parents=[common], help="equilibrium spectrum")
    sub.add_parser("prepare", parents=[common], help="pseudopure preparation")
    sub.add_parser("oracle", parents=[common], help="exact chain populations")
    spectra = sub.add_parser("spectra", parents=[common], help="landmark spectra")
    spectra.add_argument("--taus", type=float, nargs="+", default=[0.13, 1.3])
    selectivity = sub.add_parser(
        "selectivity", parents=[common], help="FULL versus IDEAL deviation"
    )
    selectivity.add_argument(
        "--omega1-hz", type=float, nargs="+", default=[250.0, 500.0, 1000.0, 2000.0]
    )
    selectivity.add_argument("--tau", type=float, default=1.0)
    return parser


def resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    r"""Load the configuration file (if any) and apply command line overrides."""
    cfg = load_config(args.config) if args.config else ExperimentConfig()
    updates = {}
    if args.mode is not None:
        updates["mode"] = args.mode
    if args.relaxation is not None:
        updates["relaxation"] = args.relaxation == "on"
    if args.out is not None:
        updates["output_dir"] = args.out
    if args.tau_max is not None or args.tau_steps is not None:
        updates["tau_grid"] = None
        if args.tau_max is not None:
            updates["tau_max"] = args.tau_max
        if args.tau_steps is not None:
            updates["tau_steps"] = args.tau_steps
    return cfg._replace(**updates).validate()


def _prepare(cfg: ExperimentConfig) -> None:
    sys_ = cfg.system()
    state = prepare_pseudopure(sys_, cfg.preparation_spec(sys_), cfg.evolution_mode())
    report = {
        "duration_s": state.crossing.duration,
        "spread": state.crossing.spread,
        "excess": state.excess,
        "populations": populations(state.density).tolist(),
    }
    with open(os.path.join(cfg.output_dir, "preparation.json"), "w") as f:
        json.dump(report, f, indent=2)


def _oracle(cfg: ExperimentConfig) -> None:
    taus = cfg.taus()
    table = reference_populations(taus, n_sites=cfg.system().dim)
    write_population_table(os.path.join(cfg.output_dir, "oracle.csv"), taus, table)


def run(args: argparse.Namespace) -> None:
    cfg = resolve_config(args)
    os.makedirs(cfg.output_dir, exist_ok=True)
    logger.info(f"Running {args.command!r}, output in {cfg.output_dir}.")
    if args.command == "sweep":
        emit_sweep(cfg, cfg.output_dir)
    elif args.command == "equilibrium":
        emit_equilibrium_report(cfg, cfg.output_dir)
    elif args.command == "prepare":
        _prepare(cfg)
    elif args.command == "oracle":
        _oracle(cfg)
    elif args.command == "spectra":
        emit_landmark_spectra(cfg, cfg.output_dir, taus=args.taus)
    elif args.command == "selectivity":
        deviations = selectivity_scan(cfg, args.omega1_hz, args.tau)
        write_selectivity_table(
            os.path.join(cfg.output_dir, "selectivity.csv"), args.omega1_hz, deviations
        )


def main(argv: Optional[List[str]] = None) -> int:
    r"""Entry point of the `spinchain` command.

    Returns:
        The exit status: 0 on success, 2 on configuration errors, 1 on other
        simulation errors.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )
    try:
        run(args)
    except (ConfigurationError, InvalidArgumentError) as e:
        logger.error(f"Configuration error: {e}")
        return 2
    except SpinchainError as e:
        logger.error(str(e))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
