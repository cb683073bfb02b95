"""
Command-line interface: argument parsing, logging setup and exit codes.

Exit codes: 0 claims hold, 1 a mathematical check failed, 2 data or parse
error, 3 arithmetic overflow.
"""

import argparse
import logging
import sys
from typing import List, Optional

from . import __version__
from .commands import (
    CommandContext,
    CommandResult,
    cmd_catalog,
    cmd_collide,
    cmd_compare,
    cmd_export,
    cmd_spectrum,
    cmd_verify,
)
from .config import Settings, load_config, resolve_data_dir
from .errors import GroupTypeError

logger = logging.getLogger("GroupType")

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(settings: Settings, verbose: bool = False) -> None:
    """Logs go to stderr (and the configured file); stdout is reserved for reports."""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.general.log_file:
        handlers.append(logging.FileHandler(settings.general.log_file))
    level = logging.DEBUG if verbose or settings.general.debug else logging.INFO
    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        datefmt="%Y-%m-%d %H:%M:%S",
        handlers=handlers,
        force=True,
    )
    if level == logging.DEBUG:
        logger.debug("Debug mode enabled")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report instead of a text table")
    common.add_argument("--data", metavar="DIR", help="data directory (default: $GROUPTYPE_DATA or config)")
    common.add_argument("--config", metavar="PATH", help="configuration file (default: $GROUPTYPE_CONFIG or config.json)")
    common.add_argument("--cap", type=positive_int, metavar="N", help="enumeration cap (elements per group)")
    common.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")

    parser = argparse.ArgumentParser(
        prog="grouptype",
        description="Order types, exponent types and solvability of small finite groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="check that G and H have equal order types")
    verify.add_argument(
        "--skip-fingerprints",
        action="store_true",
        help="run the checks even when catalog data disagrees with fingerprints.json",
    )

    spectrum = sub.add_parser("spectrum", parents=[common], help="order and exponent type of one group")
    spectrum.add_argument("target", help="builtin name (c12, q8, pgl2_7, s1, ...) or .grp file")

    compare = sub.add_parser("compare", parents=[common], help="compare two direct products")
    compare.add_argument("--left", nargs="+", required=True, metavar="T")
    compare.add_argument("--right", nargs="+", required=True, metavar="T")

    collide = sub.add_parser("collide", parents=[common], help="find targets with equal exponent types")
    collide.add_argument("targets", nargs="+", metavar="T")

    sub.add_parser("catalog", parents=[common], help="list the catalog groups S1..S7")

    export = sub.add_parser("export", parents=[common], help="write a permutation target as a .grp file")
    export.add_argument("target")
    export.add_argument("out", help="output path")

    return parser


def dispatch(args: argparse.Namespace, ctx: CommandContext) -> CommandResult:
    if args.command == "verify":
        return cmd_verify(ctx, verify_fingerprints=not args.skip_fingerprints)
    if args.command == "spectrum":
        return cmd_spectrum(args.target, ctx)
    if args.command == "compare":
        return cmd_compare(args.left, args.right, ctx)
    if args.command == "collide":
        return cmd_collide(args.targets, ctx)
    if args.command == "catalog":
        return cmd_catalog(ctx)
    if args.command == "export":
        return cmd_export(args.target, args.out, ctx)
    raise ValueError(f"unknown command {args.command}")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_config(args.config)
    except GroupTypeError as e:
        print(f"grouptype: {e}", file=sys.stderr)
        return e.exit_code
    setup_logging(settings, args.verbose)

    ctx = CommandContext.from_settings(settings, resolve_data_dir(args.data, settings))
    if args.cap is not None:
        ctx.cap = args.cap

    try:
        result = dispatch(args, ctx)
    except GroupTypeError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code

    sys.stdout.write(result.render(args.json, ctx.json_indent) + "\n")
    return result.exit_code
