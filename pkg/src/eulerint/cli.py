"""Command-line front end: ``eulerint <command> ...``.

Exit codes: 0 on success (audit-class findings included), 1 for usage,
parse, domain and I/O errors, 2 when a verified-class identity fails.
"""

import argparse
import logging
import os
import sys
from typing import List, NoReturn, Optional

from . import __version__
from .exactnum import DomainError, parse_rational
from .expr import ExprSyntaxError, parse_expr
from .identities import VERIFIED_IDS, UnknownIdentityError, audit_grid, registry
from .models import AuditRanges
from .oracle import product_integral, product_eval
from .poly import bernoulli_poly, euler_poly
from .report import FileReport, Format, JSONFormat, ReportWriteError, TextFormat
from .sequences import SequenceKind, bernoulli_numbers, euler_numbers

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFIED_FAILURE = 2


class UsageError(Exception):
    """Raised instead of exiting when the command line is malformed."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _format(name: str) -> Format:
    return JSONFormat() if name == "json" else TextFormat()


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=["text", "json"], default="text", help="Output format."
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="eulerint",
        description="Exact Euler/Bernoulli numbers, polynomials, product integrals "
        "and identity audits.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr (-v info, -vv debug).",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    numbers = commands.add_parser("numbers", help="Print E_0..E_N or B_0..B_N.")
    numbers.add_argument(
        "--kind", choices=[k.value for k in SequenceKind], default="euler"
    )
    numbers.add_argument("--max", type=_nonnegative, required=True, dest="max_index")
    _add_format(numbers)

    show = commands.add_parser("show", help="Print the polynomial E_n(x) or B_n(x).")
    show.add_argument("--family", choices=["E", "B"], required=True)
    show.add_argument("--n", type=int, required=True)
    _add_format(show)

    integrate = commands.add_parser(
        "integrate", help="Integrate a product expression over [0, 1]."
    )
    integrate.add_argument("expr", help='Product expression, e.g. "E3(x+1/2)*B2".')
    _add_format(integrate)

    evaluate = commands.add_parser("eval", help="Evaluate a product expression at x.")
    evaluate.add_argument("expr")
    evaluate.add_argument(
        "--at", required=True, help="Rational point p/q (use --at=-p/q for negatives)."
    )
    _add_format(evaluate)

    audit = commands.add_parser("audit", help="Audit registered identities on a grid.")
    which = audit.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", action="store_true", help="Audit every registry id.")
    which.add_argument("--ids", help="Comma-separated registry ids.")
    audit.add_argument(
        "--max", type=_nonnegative, dest="max_all", help="Bound for every parameter."
    )
    for name in ("n", "m", "p", "q"):
        audit.add_argument(f"--{name}-max", type=_nonnegative, dest=f"{name}_max")
    audit.add_argument("--report", help="Write the JSON report to this path.")
    audit.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker threads (default: EULERINT_WORKERS or 1).",
    )
    _add_format(audit)

    listing = commands.add_parser("registry", help="List registered identities.")
    _add_format(listing)

    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = os.environ.get("EULERINT_LOG_LEVEL", "WARNING").upper()
        if not isinstance(logging.getLevelName(level), int):
            raise UsageError(f"eulerint: invalid EULERINT_LOG_LEVEL {level!r}")
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _ranges(args: argparse.Namespace) -> AuditRanges:
    base = AuditRanges() if args.max_all is None else AuditRanges.uniform(args.max_all)
    bounds = base.as_dict()
    for key in bounds:
        if getattr(args, key) is not None:
            bounds[key] = getattr(args, key)
    return AuditRanges(**bounds)


def cmd_numbers(args: argparse.Namespace) -> int:
    table = (
        euler_numbers(args.max_index)
        if args.kind == SequenceKind.EULER.value
        else bernoulli_numbers(args.max_index)
    )
    print(_format(args.format).sequence(table))
    return EXIT_OK


def cmd_show(args: argparse.Namespace) -> int:
    poly = euler_poly(args.n) if args.family == "E" else bernoulli_poly(args.n)
    print(_format(args.format).poly(poly))
    return EXIT_OK


def cmd_integrate(args: argparse.Namespace) -> int:
    spec = parse_expr(args.expr).to_spec()
    print(_format(args.format).rational(product_integral(spec)))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    spec = parse_expr(args.expr).to_spec()
    point = parse_rational(args.at)
    print(_format(args.format).rational(product_eval(spec, point)))
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    ids = None
    if args.ids is not None:
        ids = [i.strip() for i in args.ids.split(",") if i.strip()]
        if not ids:
            raise UsageError("eulerint audit: --ids needs at least one id")
    report = audit_grid(ids=ids, ranges=_ranges(args), workers=args.workers)
    if args.report:
        FileReport(args.report).write_report(report)
    print(_format(args.format).audit(report))

    broken = sorted(set(report.failing_ids()) & VERIFIED_IDS)
    if broken:
        print(f"verified identities failed: {', '.join(broken)}", file=sys.stderr)
        return EXIT_VERIFIED_FAILURE
    return EXIT_OK


def cmd_registry(args: argparse.Namespace) -> int:
    print(_format(args.format).registry(registry()))
    return EXIT_OK


COMMANDS = {
    "numbers": cmd_numbers,
    "show": cmd_show,
    "integrate": cmd_integrate,
    "eval": cmd_eval,
    "audit": cmd_audit,
    "registry": cmd_registry,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line; returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
        _configure_logging(args.verbose)
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(e, file=sys.stderr)
    except ExprSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        print(e.caret(), file=sys.stderr)
    except UnknownIdentityError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
    except (DomainError, ReportWriteError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
