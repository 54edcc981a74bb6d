# overdurfee/cli.py
"""
Command-line front end.

Subcommands:

    count    exact counts p, pbar, g, dki, dkk and squares for one n
    series   coefficients of a generating function up to an order
    map      phi and the two directions of the (gamma, delta) bijection
    dissect  successive Durfee squares of an overpartition
    fibers   preimages of phi for one target, or the table for (n, k)
    verify   identity suites over a range of n

Exit codes are 0 on success, 1 when a verification fails and 2 on usage,
parse or precondition errors. Results go to stdout (or --out), logs and
error messages to stderr.
"""

import argparse
import logging
import sys
from typing import List, Optional

from overdurfee import __version__
from overdurfee.components.durfee import (
    count_at_most_squares,
    count_g,
    dissect,
    durfee_order,
)
from overdurfee.components.partition_core import (
    count_overpartitions,
    count_partitions,
    parse_overpartition,
    parse_partition,
)
from overdurfee.components.qseries import series_by_name
from overdurfee.components.rrg import count_dki, validate_ki
from overdurfee.components.verification import run_identity
from overdurfee.components.weighted_maps import (
    Thm21Pair,
    fiber_reports,
    fibers,
    phi_trace,
    thm21_forward,
    thm21_inverse,
)
from overdurfee.utils import report_export
from overdurfee.utils.constants import (
    COUNT_KINDS,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SERIES_ORDER,
    DEFAULT_VERIFY_CONFIG,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    IDENTITY_NAMES,
    MAP_KINDS,
    OUTPUT_FORMATS,
    OVERLINE_REFERENCES,
    SERIES_NAMES,
    get_max_order,
)
from overdurfee.utils.errors import InvariantViolation, PreconditionError
from overdurfee.utils.logging import get_logger, set_level

logger = get_logger("cli")


def _non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive_int(text):
    value = _non_negative_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


def _require(args, *names):
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join(f"--{name}" for name in missing)
        raise PreconditionError(f"{args.command} {getattr(args, 'kind', '')}".strip() + f" needs {flags}")


def cmd_count(args) -> int:
    """Print one exact count."""
    _require(args, "n")
    n = args.n
    if args.kind == "p":
        value = count_partitions(n)
    elif args.kind == "pbar":
        value = count_overpartitions(n)
    elif args.kind == "g":
        value = count_g(n)
    elif args.kind == "dki":
        _require(args, "k", "i")
        value = count_dki(n, args.k, args.i, args.overline_reference)
    elif args.kind == "dkk":
        _require(args, "k")
        validate_ki(args.k, args.k)
        value = count_dki(n, args.k, args.k, args.overline_reference)
    else:
        _require(args, "j")
        value = count_at_most_squares(n, args.j)

    params = {name: getattr(args, name) for name in ("n", "k", "i", "j") if getattr(args, name) is not None}
    report_export.write_output(report_export.render_count(args.kind, params, value, args.format), args.out)
    return EXIT_OK


def cmd_series(args) -> int:
    """Print the coefficients of a named generating function."""
    cap = get_max_order()
    if args.order > cap:
        raise PreconditionError(f"order {args.order} exceeds the cap {cap}; raise OVERDURFEE_MAX_ORDER to go further")
    series = series_by_name(args.name, args.order, k=args.k, i=args.i, N=args.N)
    report_export.write_output(report_export.render_series(series, args.format), args.out)
    return EXIT_OK


def cmd_map(args) -> int:
    """Apply phi or one direction of the (gamma, delta) bijection."""
    if args.kind == "thm21-forward":
        _require(args, "gamma", "delta")
        pair = Thm21Pair.of(parse_partition(args.gamma), parse_partition(args.delta, allow_zero=True))
        image = thm21_forward(pair)
        text = report_export.render_rows(_image_rows(image, args.format), args.format)
    elif args.kind == "thm21-inverse":
        _require(args, "op")
        text = report_export.render_pair(thm21_inverse(parse_overpartition(args.op)), args.format)
    else:
        _require(args, "op", "k")
        trace = phi_trace(parse_overpartition(args.op), args.k)
        if args.trace:
            text = report_export.render_phi_trace(trace, args.format)
        else:
            text = report_export.render_rows(_image_rows(trace.result, args.format), args.format)
    report_export.write_output(text, args.out)
    return EXIT_OK


def _image_rows(image, fmt):
    # text lists the image in Durfee order, JSON and CSV in canonical order
    return durfee_order(image) if fmt == "text" else image.parts


def cmd_dissect(args) -> int:
    """Print the successive Durfee squares of an overpartition."""
    dissection = dissect(parse_overpartition(args.op))
    text = report_export.render_dissection(dissection, args.format, diagram=not args.no_diagram)
    report_export.write_output(text, args.out)
    return EXIT_OK


def cmd_fibers(args) -> int:
    """Print the fiber of one target, or every fiber of weight n."""
    _require(args, "k")
    if args.beta is not None:
        reports = [fibers(parse_overpartition(args.beta), args.k)]
    else:
        _require(args, "n")
        reports = fiber_reports(args.n, args.k)
    report_export.write_output(report_export.render_fiber_reports(reports, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    """Run an identity suite; exit 1 when it fails."""
    config = {}
    if args.literal_max_n is not None:
        config["literal_weight_max_n"] = args.literal_max_n
    report = run_identity(args.identity, args.max_n, k=args.k, i=args.i, jobs=args.jobs, config=config)
    report_export.write_output(report_export.render_verification(report, args.format), args.out)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=DEFAULT_OUTPUT_FORMAT,
                        help="output format (default: %(default)s)")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")

    parser = argparse.ArgumentParser(
        prog="overdurfee",
        description="Overpartitions, successive Durfee squares and Rogers-Ramanujan-Gordon identities.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    count = sub.add_parser("count", parents=[common], help="exact count for one n")
    count.add_argument("kind", choices=COUNT_KINDS)
    count.add_argument("--n", type=_non_negative_int)
    count.add_argument("--k", type=int)
    count.add_argument("--i", type=int)
    count.add_argument("--j", type=int, help="maximum number of successive squares (kind squares)")
    count.add_argument("--overline-reference", choices=OVERLINE_REFERENCES, default="leading",
                       help="which part's overline sets the window gap (default: %(default)s)")
    count.set_defaults(handler=cmd_count)

    series = sub.add_parser("series", parents=[common], help="generating function coefficients")
    series.add_argument("name", choices=SERIES_NAMES)
    series.add_argument("--order", type=_non_negative_int, default=DEFAULT_SERIES_ORDER)
    series.add_argument("--k", type=int)
    series.add_argument("--i", type=int)
    series.add_argument("--N", type=_non_negative_int, help="Durfee size for durfee-refined (default: all)")
    series.set_defaults(handler=cmd_series)

    mapping = sub.add_parser("map", parents=[common], help="apply phi or the (gamma, delta) bijection")
    mapping.add_argument("kind", choices=MAP_KINDS)
    mapping.add_argument("--op", help='overpartition such as "7,6o,5o,5,5"')
    mapping.add_argument("--k", type=int)
    mapping.add_argument("--gamma", help="distinct parts, e.g. 7,6,5,2,1")
    mapping.add_argument("--delta", help="distinct parts in [0, len(gamma)-1], e.g. 4,3,0")
    mapping.add_argument("--trace", action="store_true", help="show every intermediate step of phi")
    mapping.set_defaults(handler=cmd_map)

    dissection = sub.add_parser("dissect", parents=[common], help="successive Durfee square dissection")
    dissection.add_argument("op", help='overpartition such as "7,6,6,5o,3o,3,2,1o"')
    dissection.add_argument("--no-diagram", action="store_true", help="omit the ASCII Ferrers diagram")
    dissection.set_defaults(handler=cmd_dissect)

    fiber = sub.add_parser("fibers", parents=[common], help="preimages of phi")
    fiber.add_argument("--beta", help="target overpartition with at most k-1 squares")
    fiber.add_argument("--n", type=_non_negative_int, help="list every target of weight n")
    fiber.add_argument("--k", type=int)
    fiber.set_defaults(handler=cmd_fibers)

    verify = sub.add_parser("verify", parents=[common], help="run an identity suite")
    verify.add_argument("identity", choices=IDENTITY_NAMES)
    verify.add_argument("--max-n", type=_non_negative_int, default=DEFAULT_VERIFY_CONFIG["max_n"])
    verify.add_argument("--k", type=int)
    verify.add_argument("--i", type=int)
    verify.add_argument("--jobs", type=_positive_int, default=DEFAULT_VERIFY_CONFIG["jobs"],
                        help="worker processes for independent n values")
    verify.add_argument("--literal-max-n", type=_non_negative_int,
                        help="largest n for the literal weight comparison (weighted only)")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.verbose:
        set_level(logging.DEBUG)
    elif args.quiet:
        set_level(logging.WARNING)
    else:
        set_level(logging.INFO)

    try:
        return args.handler(args)
    except ValueError as exc:
        # parse and precondition errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        logger.error("internal invariant failed: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
