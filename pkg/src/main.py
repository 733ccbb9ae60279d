"""
Toric Envelope Workbench - Command Line Entry Point

Subcommands:
- bounds: degree bound formulas for a range of n
- algorithm1: degree search for a finite subgroup of SL2
- degree: dimension and degree of an ideal file
- examples: worked examples and the GL2 envelope table
- verify: the acceptance suite

Reports go to stdout (JSON by default), logs to stderr.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence, TextIO

import structlog

from src.config import ConeStrategy, LogFormat, OrderName, Settings, get_settings
from src.envelope.examples import EXAMPLE_NAMES
from src.tools import (
    compute_degree,
    get_bound_report,
    get_bound_table,
    get_gl3_cases,
    is_error,
    run_algorithm1,
    run_examples,
    run_verify,
)
from src.tools.envelope_tools import GL2_TABLE
from src.utils.helpers import dumps_report, render_mapping, render_table

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2


class _StderrHandler(logging.StreamHandler):
    """Writes to whatever ``sys.stderr`` is when a record is emitted."""

    @property
    def stream(self) -> TextIO:
        return sys.stderr

    @stream.setter
    def stream(self, value: TextIO) -> None:
        pass


def configure_logging(settings: Settings, level: Optional[str] = None) -> None:
    """Route structlog through stdlib logging on stderr."""
    level_name = (level or settings.log_level).upper()
    logging.basicConfig(
        format="%(message)s",
        handlers=[_StderrHandler()],
        level=getattr(logging, level_name, logging.WARNING),
        force=True,
    )
    renderer = (
        structlog.processors.JSONRenderer()
        if settings.log_format is LogFormat.JSON
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toric-envelope",
        description="Exact computations of degree bounds for toric envelopes.",
    )
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument(
        "--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR; overrides settings"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    bounds = commands.add_parser("bounds", help="evaluate the bound formulas")
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--to", type=int, default=None, help="last n of the range")
    bounds.add_argument("--cases", action="store_true", help="also print the GL3 case bounds")

    alg = commands.add_parser("algorithm1", help="degree search for a finite subgroup of SL2")
    source = alg.add_mutually_exclusive_group(required=True)
    source.add_argument("--group", help="catalog tag, e.g. binary-icosahedral or cyclic-3")
    source.add_argument("--file", help="group file (JSON)")
    alg.add_argument("--order", choices=[o.value for o in OrderName], default=None)
    alg.add_argument("--strategy", choices=[s.value for s in ConeStrategy], default=None)
    alg.add_argument(
        "--compare-orders", action="store_true", help="also run under the other graded order"
    )

    degree = commands.add_parser("degree", help="dimension and degree of an ideal file")
    degree.add_argument("--ideal", required=True, help="ideal file (JSON)")

    examples = commands.add_parser("examples", help="measure the worked examples")
    examples.add_argument("--name", choices=[*EXAMPLE_NAMES, GL2_TABLE], default=None)
    examples.add_argument("--param", type=int, default=None)

    commands.add_parser("verify", help="run the acceptance suite")
    return parser


# =============================================================================
# Text rendering
# =============================================================================


def _render_text(command: str, report: dict) -> str:
    if is_error(report):
        field = f" (field {report['field']})" if report.get("field") else ""
        return f"error: {report['error']}{field}"
    if command == "bounds":
        cases = report.get("cases")
        if "reports" in report:
            columns = ["n", "A_exact", "A_upper", "unipotent", "product_factor", "headline"]
            text = render_table(report["reports"], [*columns, "findings"])
        else:
            text = render_mapping({k: v for k, v in report.items() if k != "cases"})
        if cases:
            text += "\n\n" + render_table(cases["cases"], ["case", "expression", "value"])
        return text
    if command == "examples":
        if "rows" in report:
            return render_table(report["rows"])
        return render_table(report["examples"])
    if command == "verify":
        return render_table(report["cases"], ["case", "passed", "expected", "actual"])
    if command == "degree":
        summary = {k: v for k, v in report.items() if k != "basis"}
        return render_mapping(summary) + "\n\n" + "\n".join(report["basis"])
    return render_mapping(report)


def _dispatch(args: argparse.Namespace) -> dict:
    if args.command == "bounds":
        report = get_bound_report(args.n) if args.to is None else get_bound_table(args.n, args.to)
        if args.cases and not is_error(report):
            report["cases"] = get_gl3_cases()
        return report
    if args.command == "algorithm1":
        return run_algorithm1(
            group=args.group,
            file=args.file,
            order=args.order,
            strategy=args.strategy,
            compare_orders=args.compare_orders,
        )
    if args.command == "degree":
        return compute_degree(args.ideal)
    if args.command == "examples":
        return run_examples(args.name, args.param)
    return run_verify()


def _exit_code(command: str, report: dict) -> int:
    if is_error(report):
        return EXIT_COMPUTATION
    if command == "verify" and not report["passed"]:
        return EXIT_COMPUTATION
    if command == "examples" and not report.get("all_match", True):
        return EXIT_COMPUTATION
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv``, run one subcommand and print its report.

    Returns:
        0 on success, 1 on a computation error or failed check, 2 on a usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    settings = get_settings()
    configure_logging(settings, args.log_level)
    logger.debug("Command parsed", command=args.command)

    report = _dispatch(args)
    if args.format == "text":
        stream = sys.stderr if is_error(report) else sys.stdout
        print(_render_text(args.command, report), file=stream)
    else:
        print(dumps_report(report))
    return _exit_code(args.command, report)


def main() -> None:
    """Console script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
