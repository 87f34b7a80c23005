"""
Entry point for the CLI. It parses the arguments and calls the corresponding function.
"""

import sys
from argparse import ArgumentParser, ArgumentTypeError
from fractions import Fraction
from typing import Any, List, Optional

from pystirling.cli import binomial, ext_bell, family, invert, knuth_pittel, lagrange, table, verify, version
from pystirling.cli.utils import series_names
from pystirling.exceptions import RouteMismatch
from pystirling.logger import logger
from pystirling.verification import VerifyReport
from pystirling.verification.suites import suite_names

IGNORED_KEYS = ["command", "func"]
FORMATS = ["text", "json", "latex"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_non_negative(arg: Any) -> int:
    try:
        value = int(arg)
    except ValueError as exc:
        raise ArgumentTypeError("Value must be an integer") from exc

    if value < 0:
        raise ArgumentTypeError("Value must not be negative")
    return value


def parse_positive(arg: Any) -> int:
    value = parse_non_negative(arg)
    if value < 1:
        raise ArgumentTypeError("Value must be greater than 0")
    return value


def parse_rational(arg: Any) -> Fraction:
    try:
        return Fraction(arg)
    except (ValueError, ZeroDivisionError) as exc:
        raise ArgumentTypeError("Value must be a rational number like 2 or -3/4") from exc


def _add_common(parser: ArgumentParser, check: bool = True) -> None:
    parser.add_argument("-c", "--config", help="Path to a config file", dest="config_path", required=False)
    parser.add_argument("--format", help="Output format", choices=FORMATS, dest="output_format", required=False)
    if check:
        parser.add_argument(
            "--check",
            help="Compare the result against independent computation routes",
            action="store_const",
            const=True,
            required=False,
        )


def _add_unify(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--unify",
        help="Print the value with every indeterminate set to VALUE (1 if omitted) instead of the polynomial",
        nargs="?",
        const=Fraction(1),
        type=parse_rational,
        dest="unify_at",
        metavar="VALUE",
        required=False,
    )


def build_parser() -> ArgumentParser:
    """
    Builds the parser with one subcommand per verb.
    """
    parser = ArgumentParser(prog="pystirling", description="Multivariate Stirling and Bell polynomial families")
    subparsers = parser.add_subparsers(dest="command", title="Commands", metavar="")

    # Parser for `family` command
    family_parser = subparsers.add_parser("family", help="Prints a single entry Q(n, k) of a family")
    family_parser.add_argument("name", help="Name of the family, for example bell, stirling-a, lah or comtet")
    family_parser.add_argument("--n", help="Row index", type=int, required=True)
    family_parser.add_argument("--k", help="Column index", type=int, required=True)
    _add_unify(family_parser)
    _add_common(family_parser)
    family_parser.set_defaults(func=family)

    # Parser for `table` command
    table_parser = subparsers.add_parser("table", help="Prints the triangle of a family")
    table_parser.add_argument("name", help="Name of the family")
    table_parser.add_argument("--max-n", help="Last row", type=parse_non_negative, dest="max_n", required=False)
    _add_unify(table_parser)
    _add_common(table_parser)
    table_parser.set_defaults(func=table)

    # Parser for `invert` command
    invert_parser = subparsers.add_parser("invert", help="Prints the compositional inverse of a series")
    invert_parser.add_argument("--series", help="Path to a series document", dest="series_path", required=False)
    invert_parser.add_argument(
        "--generator", help="Named series to invert", choices=series_names() + ["random"], required=False
    )
    invert_parser.add_argument("--order", help="Truncation order", type=parse_positive, required=False)
    invert_parser.add_argument("--seed", help="Seed for random series", type=int, required=False)
    _add_common(invert_parser)
    invert_parser.set_defaults(func=invert)

    # Parser for `lagrange` command
    lagrange_parser = subparsers.add_parser("lagrange", help="Prints a generalized Lagrange inversion polynomial")
    lagrange_parser.add_argument("--n", help="Index of the constant", type=parse_positive, required=True)
    for flag, default in (("a", "one"), ("phi", "identity"), ("b", "one"), ("psi", "identity")):
        lagrange_parser.add_argument(
            f"--{flag}", help=f"Named series for {flag}", choices=series_names(), default=default, required=False
        )
    _add_common(lagrange_parser)
    lagrange_parser.set_defaults(func=lagrange)

    # Parser for `binomial` command
    binomial_parser = subparsers.add_parser("binomial", help="Prints the binomial sequence generated by a series")
    binomial_parser.add_argument(
        "--phi", help="Generating series", choices=series_names() + ["random"], default="logm", required=False
    )
    binomial_parser.add_argument(
        "--max-n", help="Last polynomial", type=parse_non_negative, dest="max_n", required=False
    )
    binomial_parser.add_argument("--seed", help="Seed for random series", type=int, required=False)
    _add_common(binomial_parser)
    binomial_parser.set_defaults(func=binomial)

    # Parser for `knuth-pittel` command
    knuth_pittel_parser = subparsers.add_parser("knuth-pittel", help="Prints the Knuth-Pittel polynomial t_n")
    knuth_pittel_parser.add_argument("--n", help="Index", type=parse_non_negative, required=True)
    _add_common(knuth_pittel_parser)
    knuth_pittel_parser.set_defaults(func=knuth_pittel)

    # Parser for `ext-bell` command
    ext_bell_parser = subparsers.add_parser("ext-bell", help="Prints Bell polynomials at integer indices")
    ext_bell_parser.add_argument("--n", help="Row index", type=int, required=False)
    ext_bell_parser.add_argument("--k", help="Column index", type=int, required=False)
    ext_bell_parser.add_argument("--radius", help="Radius of the matrix", type=parse_non_negative, required=False)
    _add_common(ext_bell_parser)
    ext_bell_parser.set_defaults(func=ext_bell)

    # Parser for `verify` command
    verify_parser = subparsers.add_parser("verify", help="Runs a verification suite")
    verify_parser.add_argument("suite", help="Name of the suite", choices=suite_names())
    verify_parser.add_argument(
        "--max-n", help="Largest row index", type=parse_non_negative, dest="max_n", required=False
    )
    verify_parser.add_argument(
        "--range", help="Index window of the reciprocity suites", type=parse_non_negative, dest="radius", required=False
    )
    verify_parser.add_argument("--deg", help="Degree of the Melzak polynomial", type=parse_non_negative, dest="degree")
    verify_parser.add_argument("--m", help="Backward shifts of the Melzak formula", type=parse_non_negative)
    verify_parser.add_argument("--k", help="Forward shift of the Melzak formula", type=int)
    verify_parser.add_argument("--seed", help="Seed of the randomized suites", type=int, required=False)
    verify_parser.add_argument("--workers", help="Threads used by `all`", type=parse_positive, required=False)
    _add_common(verify_parser, check=False)
    verify_parser.set_defaults(func=verify)

    # Parser for `version` command
    version_parser = subparsers.add_parser("version", help="Prints the installed version")
    version_parser.set_defaults(func=version)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parses `argv` and dispatches to the action of the chosen verb.

    Returns:
        int: 0 on success, 1 if an identity or route comparison failed and 2 on usage errors.
    """
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (None, 0) else EXIT_USAGE

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    if args.command == "ext-bell" and (args.n is None) != (args.k is None):
        logger.error("ext-bell needs both --n and --k or neither")
        return EXIT_USAGE

    arguments = {key: value for key, value in vars(args).items() if key not in IGNORED_KEYS and value is not None}

    try:
        result = args.func(**arguments)
    except RouteMismatch as exc:
        logger.error("%s failed: %s", args.func.__name__, exc)
        return EXIT_FAILED
    except Exception as exc:
        logger.error("%s failed: %s", args.func.__name__, exc)
        return EXIT_USAGE

    if isinstance(result, VerifyReport) and not result.passed:
        return EXIT_FAILED
    return EXIT_OK


def cli() -> None:
    """
    Function that parses the CLI arguments and calls the corresponding function.
    """
    sys.exit(run())
