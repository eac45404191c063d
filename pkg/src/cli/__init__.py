"""Command-line front end: argument parsing, logging setup and dispatch."""
import argparse
import logging
import sys
from typing import List, Optional

from ..verify import PROFILE_NAMES
from .commands import COMMANDS, cmd_coeff, cmd_list, cmd_report, cmd_verify, merge_reports
from .config import EXIT_USAGE, FORMATS, FUNCTIONS, ConfigError, RunConfig

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsc", description="Overpartition k-tuple coefficients and congruence checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    coeff = sub.add_parser("coeff", help="print pbar_k(n) or r_k(n) for n <= limit")
    coeff.add_argument("--fn", choices=FUNCTIONS, default="op", help="op: overpartition k-tuples, rk: sums of k squares")
    coeff.add_argument("--k", type=int, default=3)
    coeff.add_argument("--modulus", type=int, default=None, help="reduce mod M (default: exact integers)")
    coeff.add_argument("--limit", type=int, required=True)
    coeff.add_argument("--format", dest="fmt", choices=FORMATS, default="csv")

    verify = sub.add_parser("verify", help="run registered checks")
    selection = verify.add_mutually_exclusive_group(required=True)
    selection.add_argument("--filter", help="comma-separated glob patterns over check ids")
    selection.add_argument("--all", action="store_true")
    verify.add_argument("--profile", choices=PROFILE_NAMES, default="default")
    verify.add_argument("--timings", action="store_true", help="record elapsed_ms in reports")
    verify.add_argument("--format", dest="fmt", choices=FORMATS, default="text")

    listing = sub.add_parser("list", help="print the check catalog")
    listing.add_argument("--filter", default=None)
    listing.add_argument("--format", dest="fmt", choices=FORMATS, default="text")

    report = sub.add_parser("report", help="merge JSON report files into one summary")
    report.add_argument("paths", nargs="*")
    report.add_argument("--format", dest="fmt", choices=FORMATS, default="text")

    for p in (coeff, verify, listing, report):
        p.add_argument("--output", "-o", default=None)
        p.add_argument("--verbose", "-v", action="store_true")
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    return RunConfig(
        command=args.command,
        fn=getattr(args, "fn", "op"),
        k=getattr(args, "k", 3),
        modulus=getattr(args, "modulus", None),
        limit=getattr(args, "limit", 0),
        profile=getattr(args, "profile", "default"),
        filter=getattr(args, "filter", None),
        fmt=args.fmt,
        output=args.output,
        timings=getattr(args, "timings", False),
        verbose=args.verbose,
        paths=getattr(args, "paths", []),
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the command and return its exit code."""
    try:
        config = parse_config(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for bad flags
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except ConfigError as e:
        configure_logging()
        logger.error("%s", e)
        return EXIT_USAGE
    configure_logging(config.verbose)
    return COMMANDS[config.command](config)


__all__ = [
    "main",
    "build_parser",
    "parse_config",
    "configure_logging",
    "cmd_coeff",
    "cmd_verify",
    "cmd_list",
    "cmd_report",
    "merge_reports",
    "RunConfig",
    "ConfigError",
]
