#!/usr/bin/env python
"""
translen command-line front end.

Subcommands:
    lower       lower bound for a group on a surface
    certify     upper-bound certificate for a configuration file
    dilatation  dilatation of the word in a configuration file
    sweep       lower/upper/dilatation table over a family range
    family      write a generated family to a configuration file

Exit codes: 0 success, 2 validation or input error, 3 empty certificate,
4 spectral precondition or convergence failure, 5 proviso violation.
"""

import argparse
import sys
import traceback
from typing import List, Optional

from translen import __version__
from translen.bounds.lower import GroupKind, lower_bound
from translen.bounds.upper import MODES, certify_upper
from translen.configuration.config_loader import dump_configuration, load_configuration
from translen.configuration.families import FAMILY_KINDS, generate_family
from translen.exceptions import TranslenError, ValidationError
from translen.logger_utils.logger_utils import set_console_level, setup_logger
from translen.report.config_loader import load_config
from translen.report.rendering import render_certificate, render_record, render_spectral
from translen.report.sweep import rows_to_csv, run_sweep, write_csv
from translen.spectral.spectral import word_dilatation

logger = setup_logger("report_cli", module="report")

FORMATS = ("text", "json")


def cmd_lower(args: argparse.Namespace) -> int:
    record = lower_bound(args.group, args.genus, args.punctures)
    print(render_record(record, fmt=args.format, trace=not args.no_trace))
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    inst = load_configuration(args.config)
    cert = certify_upper(inst, max_j=args.max_j, mode=args.mode, spot_check=args.spot_check or None)
    print(render_certificate(cert, fmt=args.format, trace=args.trace))
    return 0


def cmd_dilatation(args: argparse.Namespace) -> int:
    inst = load_configuration(args.config)
    result = word_dilatation(inst.config, inst.word, tol=args.tol, max_iters=args.max_iters)
    print(render_spectral(result, fmt=args.format))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = run_sweep(
        args.family,
        args.start,
        args.stop,
        force=args.force,
        workers=args.workers,
        progress=False if args.no_progress else None,
        max_j=args.max_j,
        tol=args.tol,
    )
    if args.csv:
        path = write_csv(rows, args.csv)
        logger.info(f"Wrote {len(rows)} sweep rows to {path}")
    else:
        sys.stdout.write(rows_to_csv(rows))
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    inst = generate_family(args.kind, args.param)
    path = dump_configuration(inst, args.out)
    print(f"Wrote {args.kind} family ({args.param}) to {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    default_format = load_config()["output"]["format"]

    parser = argparse.ArgumentParser(
        prog="translen",
        description="Certified bounds on curve-graph translation lengths",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="Console log level (DEBUG, INFO, WARNING, ...)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    lower = subparsers.add_parser("lower", help="Lower bound for a group")
    lower.add_argument("--group", required=True, choices=[k.value for k in GroupKind])
    lower.add_argument("--genus", "-g", type=int, default=0)
    lower.add_argument("--punctures", "-n", type=int, default=0)
    lower.add_argument("--format", choices=FORMATS, default=default_format)
    lower.add_argument("--no-trace", action="store_true", help="Omit the derivation trace")
    lower.set_defaults(handler=cmd_lower)

    certify = subparsers.add_parser("certify", help="Upper-bound certificate for a configuration file")
    certify.add_argument("config", help="Configuration file (JSON or YAML)")
    certify.add_argument("--max-j", type=int)
    certify.add_argument("--mode", choices=MODES)
    certify.add_argument("--format", choices=FORMATS, default=default_format)
    certify.add_argument("--trace", action="store_true", help="Print the per-iteration supports")
    certify.add_argument("--spot-check", action="store_true",
                         help="Compare Boolean supports with exact ones on every iteration")
    certify.set_defaults(handler=cmd_certify)

    dilatation = subparsers.add_parser("dilatation", help="Dilatation of a configuration file's word")
    dilatation.add_argument("config", help="Configuration file (JSON or YAML)")
    dilatation.add_argument("--tol", type=float)
    dilatation.add_argument("--max-iters", type=int)
    dilatation.add_argument("--format", choices=FORMATS, default=default_format)
    dilatation.set_defaults(handler=cmd_dilatation)

    sweep = subparsers.add_parser("sweep", help="Bounds table over a family range")
    sweep.add_argument("--family", required=True, choices=FAMILY_KINDS)
    sweep.add_argument("--from", dest="start", type=int, required=True)
    sweep.add_argument("--to", dest="stop", type=int, required=True)
    sweep.add_argument("--csv", help="Write the table to this path instead of stdout")
    sweep.add_argument("--force", action="store_true", help="Allow parameters above the cap")
    sweep.add_argument("--workers", type=int)
    sweep.add_argument("--no-progress", action="store_true")
    sweep.add_argument("--max-j", type=int)
    sweep.add_argument("--tol", type=float)
    sweep.set_defaults(handler=cmd_sweep)

    family = subparsers.add_parser("family", help="Write a generated family to a configuration file")
    family.add_argument("--kind", required=True, choices=FAMILY_KINDS)
    family.add_argument("--param", type=int, required=True)
    family.add_argument("--out", required=True)
    family.set_defaults(handler=cmd_family)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        set_console_level(args.log_level)

    try:
        return args.handler(args)
    except ValidationError as e:
        logger.debug(traceback.format_exc())
        print(f"Error: {e}", file=sys.stderr)
        if e.report is not None:
            print(e.report.summary(), file=sys.stderr)
        return e.exit_code
    except TranslenError as e:
        logger.debug(traceback.format_exc())
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
