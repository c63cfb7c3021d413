"""Command-line front end.

``knotgraph [--json] [-v] [--workers N] [--atlas FILE] [--rules R] <command> ...``

Exit codes follow :class:`knotgraph.exceptions.ExitCode`: 0 on success, 1
when a certificate or isometry check fails, 2 on usage, parse and input
errors and 3 when the library itself misbehaves.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from dataclasses import replace
from typing import Any, NoReturn

from knotgraph import commands  # noqa: F401 (registers the subcommands)
from knotgraph import logs
from knotgraph.atlas import get_atlas, load_atlas_file, reset_atlas, set_atlas
from knotgraph.bounds import RULE_SETS
from knotgraph.config import KnotGraphConfig, get_config, set_config
from knotgraph.context import CommandContext
from knotgraph.exceptions import ExitCode, InvalidArgumentError, KnotGraphError
from knotgraph.knots import clear_cover_cache
from knotgraph.registry import CommandRegistry, get_registry
from knotgraph.utils import create_error_payload, create_error_report, dumps_report
from knotgraph.validation import is_error_report, validate_report

logger = logging.getLogger("knotgraph")

#: Verdicts reported with exit code 1.
FAILED_VERDICTS = frozenset({"uncertified", "failed"})

VERBOSITY_LEVELS = ("WARNING", "INFO", "DEBUG")


class KnotGraphArgumentParser(argparse.ArgumentParser):
    """Argument parser raising :class:`InvalidArgumentError` instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise InvalidArgumentError("usage", f"{self.prog}: {message}")


def build_parser(registry: CommandRegistry | None = None) -> argparse.ArgumentParser:
    """Parser with the global flags and one subparser per registered command."""
    parser = KnotGraphArgumentParser(
        prog="knotgraph",
        description="Certified distance bounds and hyperbolicity certificates "
        "for knot graphs.",
    )
    parser.add_argument("--json", action="store_true", help="print the JSON report")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    parser.add_argument("--workers", type=int, help="threads for the four-point scan")
    parser.add_argument("--atlas", metavar="FILE", help="atlas extension file")
    parser.add_argument(
        "--rules",
        choices=RULE_SETS,
        help="H(n) bound propagation rule set (default: sound). 'literal' gives "
        "the literal lower bounds, e.g. d_4 >= 3 from d_2 >= 9 where 'sound' "
        "gives d_4 >= 2",
    )

    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for wrapper in registry or get_registry():
        info = wrapper.info()
        subparser = subparsers.add_parser(
            info.name, help=info.help, description=info.description
        )
        subparser.add_argument(
            "--json", action="store_true", default=argparse.SUPPRESS, help="print JSON"
        )
        wrapper.configure(subparser)
    return parser


def configure_logging(level: str) -> None:
    """Send ``knotgraph`` records to stderr at ``level``."""
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        logger.addHandler(handler)
    logger.setLevel(level)


def _apply_overrides(
    config: KnotGraphConfig, args: argparse.Namespace
) -> KnotGraphConfig:
    overrides: dict[str, Any] = {}
    if args.workers is not None:
        if args.workers < 1:
            raise InvalidArgumentError(
                "workers", f"need at least 1, got {args.workers}"
            )
        overrides["workers"] = args.workers
    if args.atlas:
        overrides["atlas_path"] = args.atlas
    if args.rules:
        overrides["hnt_rules"] = args.rules
    if args.verbose:
        level = VERBOSITY_LEVELS[min(args.verbose, len(VERBOSITY_LEVELS) - 1)]
        overrides["log_level"] = level
    return replace(config, **overrides)


def run(argv: Sequence[str] | None = None) -> tuple[ExitCode, dict[str, Any]]:
    """Run one command line and return its exit code and report.

    Configuration and atlas overrides hold for this call only.

    Examples
    --------
    >>> code, report = run(["brieskorn", "2", "15", "9"])
    >>> int(code), report["results"]["group"]
    (0, '(Z_2)^2')
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    previous = get_config()
    name = "knotgraph"
    atlas_swapped = False
    try:
        args = build_parser().parse_args(argv)
        name = args.command
        config = _apply_overrides(previous, args)
        set_config(config)
        configure_logging(config.log_level)
        if config.atlas_path:
            set_atlas(load_atlas_file(config.atlas_path))
            clear_cover_cache()
            atlas_swapped = True

        wrapper = get_registry().get(name)
        ctx = CommandContext(name, args, config, get_atlas())
        logger.info(logs.COMMAND_START, name, argv)
        report = validate_report(wrapper(ctx))
    except KnotGraphError as exc:
        logger.error(logs.COMMAND_FAILED, name, exc.message)
        return exc.exit_code, create_error_report(name, exc.as_dict())
    except Exception as exc:
        logger.exception(logs.COMMAND_FAILED, name, exc)
        payload = create_error_payload(int(ExitCode.INTERNAL_ERROR), repr(exc))
        return ExitCode.INTERNAL_ERROR, create_error_report(name, payload)
    finally:
        if atlas_swapped:
            reset_atlas()
            clear_cover_cache()
        set_config(previous)

    logger.info(logs.COMMAND_END, name, report["verdict"])
    if report["verdict"] in FAILED_VERDICTS:
        return ExitCode.VERIFICATION_FAILED, report
    return ExitCode.OK, report


def format_text(value: Any, indent: int = 0) -> list[str]:
    """Indented ``key: value`` lines of a decoded report."""
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(format_text(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
        return lines
    if isinstance(value, list):
        if all(not isinstance(item, (dict, list)) for item in value):
            return [pad + ", ".join(_scalar(item) for item in value)]
        lines = []
        for item in value:
            lines.append(f"{pad}-")
            lines.extend(format_text(item, indent + 1))
        return lines
    return [pad + _scalar(value)]


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value in ({}, []):
        return "none"
    return str(value)


def main(argv: Sequence[str] | None = None) -> int:
    """Console entry point: print the report and return the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    code, report = run(argv)
    if "--json" in argv:
        print(dumps_report(report))
    else:
        stream = sys.stderr if is_error_report(report) else sys.stdout
        print("\n".join(format_text(report)), file=stream)
    return int(code)


if __name__ == "__main__":
    sys.exit(main())
