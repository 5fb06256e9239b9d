# file: src/thermocasimir/main.py
# -*- coding: utf-8 -*-
"""
Command-line entry point ``casimir``.

    casimir run <scenario.toml> [--format csv|json] [--out PATH] [--tol REL]
                                [--prescription schwinger|direct] [-v]
    casimir preset <name>
    casimir verify

Exit codes: 0 success, 1 every sweep point failed or a check failed,
2 usage or scenario error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Optional

from thermocasimir.controllers.file_controller import FORMATS, FileController
from thermocasimir.controllers.scenario_controller import load_scenario, run
from thermocasimir.controllers.verify_controller import run_checks
from thermocasimir.errors import EmitError, ScenarioError
from thermocasimir.lifshitz import Prescription
from thermocasimir.util.resources import available_presets, preset_path

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

LOG_LEVEL_ENV = "CASIMIR_LOG_LEVEL"


# --------------------------------------------------------------------------- #
# Sub-commands
# --------------------------------------------------------------------------- #
def _cmd_run(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario).with_overrides(
        tolerance=args.tol, prescription=args.prescription
    )
    report = run(scenario)
    FileController.emit(report, args.format, args.out)
    if report.all_failed:
        logging.error("all %d point(s) of %s failed", len(report.records), scenario.name)
        return EXIT_FAILED
    return EXIT_OK


def _cmd_preset(args: argparse.Namespace) -> int:
    try:
        text = preset_path(args.name).read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise ScenarioError(str(exc)) from exc
    sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_checks()
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status}  {result.name:<24} {result.detail}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


# --------------------------------------------------------------------------- #
# Argument parsing
# --------------------------------------------------------------------------- #
def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive (got {text})")
    return value


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="casimir",
        description="Finite-temperature Casimir force between a sphere and a plate.",
    )
    p.add_argument("-v", "--verbose", action="count", default=0, help="Increase verbosity (-v, -vv).")
    sub = p.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="Evaluate a scenario file.")
    run_p.add_argument("scenario", help="Scenario TOML file.")
    run_p.add_argument("--format", choices=FORMATS, default="csv", help="Output format.")
    run_p.add_argument("--out", default=None, help="Output file (default: standard output).")
    run_p.add_argument("--tol", type=_positive_float, default=None, help="Relative tolerance override.")
    run_p.add_argument(
        "--prescription",
        choices=[p_.value for p_ in Prescription],
        default=None,
        help="Zero-frequency prescription override.",
    )
    run_p.add_argument("-v", "--verbose", action="count", default=0, dest="run_verbose",
                       help=argparse.SUPPRESS)
    run_p.set_defaults(handler=_cmd_run)

    preset_p = sub.add_parser("preset", help="Print a packaged scenario file.")
    preset_p.add_argument("name", help=f"One of: {', '.join(available_presets())}.")
    preset_p.set_defaults(handler=_cmd_preset)

    verify_p = sub.add_parser("verify", help="Run the self-check suite.")
    verify_p.set_defaults(handler=_cmd_verify)
    return p


def _configure_logging(verbosity: int) -> None:
    default = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    level = logging.getLevelName(default)
    if not isinstance(level, int):
        level = logging.WARNING
    if verbosity:
        level = max(logging.WARNING - 10 * verbosity, logging.DEBUG)
    logging.basicConfig(level=level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")


# --------------------------------------------------------------------------- #
# Application entry point
# --------------------------------------------------------------------------- #
def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    _configure_logging(args.verbose + getattr(args, "run_verbose", 0))
    try:
        return args.handler(args)
    except ScenarioError as exc:
        logging.error("%s", exc)
        return EXIT_USAGE
    except EmitError as exc:
        logging.error("%s", exc)
        return EXIT_FAILED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
