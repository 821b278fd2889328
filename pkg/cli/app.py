#!/usr/bin/env python3
"""
twolevel - batch front end for sweeps, trajectory runs, audits and regime checks

    python cli/app.py <command> --config <path> [--output <path>]
        [--r-min X] [--r-max X] [--n-points N] [--seed N] [--n-samples N]
        [--dt X] [--duration X] [--verbose]

Exit codes: 0 success, 1 input/config error, 2 numeric failure, 3 audit failure.
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

# Ensure project root is on Python path (so `core` and friends are importable)
CURRENT_DIR = os.path.dirname(os.path.abspath(__file__))
PROJECT_ROOT = os.path.abspath(os.path.join(CURRENT_DIR, os.pardir))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from core.errors import (  # noqa: E402
    AuditFailure,
    ConfigError,
    DomainError,
    InputError,
    NumericFailure,
    SingularityError,
    ToolkitError,
)
from models.run import Command, CsvTable, RunConfig  # noqa: E402
from repositories.config_repository import ConfigRepository  # noqa: E402
from repositories.table_repository import TableRepository  # noqa: E402
from services.audit_service import AuditService  # noqa: E402
from services.dynamics_service import DynamicsService  # noqa: E402
from services.regime_service import RegimeService  # noqa: E402
from services.sweep_service import SweepService  # noqa: E402

logger = logging.getLogger("twolevel")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERIC = 2
EXIT_AUDIT = 3


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so bad flags map to exit code 1"""

    def error(self, message):
        raise ConfigError(message)


def _add_override_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--output", help="Output path (stdout when omitted)")
    parser.add_argument("--r-min", type=float)
    parser.add_argument("--r-max", type=float)
    parser.add_argument("--n-points", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--n-samples", type=int)
    parser.add_argument("--dt", type=float)
    parser.add_argument("--duration", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="twolevel", description="Two-level atom toolkit")
    parser.add_argument("command", choices=[c.value for c in Command])
    parser.add_argument("--config", required=True, help="Path to a JSON run configuration")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    _add_override_flags(parser)
    return parser


def overrides_from_namespace(args: argparse.Namespace) -> Dict[str, Any]:
    keys = ("output", "r_min", "r_max", "n_points", "seed", "n_samples", "dt", "duration")
    return {key: getattr(args, key) for key in keys if getattr(args, key, None) is not None}


def parse_config(text: str, overrides: Sequence[str] = (), command: Optional[str] = None) -> RunConfig:
    """Build a validated RunConfig from a JSON document and a list of override flags.

    ``overrides`` uses the command-line spelling, e.g. ``["--r-max=5"]``.
    """
    flag_parser = _ArgumentParser(prog="twolevel", add_help=False)
    _add_override_flags(flag_parser)
    values = overrides_from_namespace(flag_parser.parse_args(list(overrides)))
    return ConfigRepository().parse(text, values, command)


def _emit_table(table: CsvTable, config: RunConfig, tables: TableRepository):
    if config.output:
        path = tables.save(table, config.output)
        logger.info("Wrote %d rows to %s", len(table.rows), path)
    else:
        sys.stdout.write(table.to_text())


def cmd_sweep(config: RunConfig, tables: TableRepository) -> int:
    _emit_table(SweepService(config).run(), config, tables)
    return EXIT_OK


def cmd_dynamics(config: RunConfig, tables: TableRepository) -> int:
    _emit_table(DynamicsService(config).run(), config, tables)
    return EXIT_OK


def cmd_audit(config: RunConfig, tables: TableRepository) -> int:
    result = AuditService(config).run()
    report = result.report()
    sys.stdout.write(report)
    if config.output:
        tables.save_report(report, config.output)
    if not result.passed:
        raise AuditFailure("one or more audit checks failed")
    return EXIT_OK


def cmd_regime(config: RunConfig, tables: TableRepository) -> int:
    payload = RegimeService(config).run()
    if config.output:
        tables.save_json(payload, config.output)
    else:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


COMMANDS = {
    Command.SWEEP: cmd_sweep,
    Command.DYNAMICS: cmd_dynamics,
    Command.AUDIT: cmd_audit,
    Command.REGIME: cmd_regime,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        config = ConfigRepository().load(args.config, overrides_from_namespace(args), args.command)
        return COMMANDS[config.command](config, TableRepository())
    except AuditFailure as exc:
        logger.error("Audit failed: %s", exc)
        return EXIT_AUDIT
    except NumericFailure as exc:
        logger.error("Numeric failure: %s", exc)
        return EXIT_NUMERIC
    except (ConfigError, InputError, DomainError, SingularityError) as exc:
        logger.error("Invalid input: %s", exc)
        return EXIT_INPUT
    except ToolkitError as exc:
        logger.error("Toolkit error: %s", exc)
        return EXIT_NUMERIC
    except ArithmeticError as exc:
        logger.error("Numeric failure: %s", exc)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
