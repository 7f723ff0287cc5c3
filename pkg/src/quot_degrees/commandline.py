import argparse
import os

from .checks import DEFAULT_ORACLE_TOLERANCE, default_tolerance
from .holla import DEFAULT_ORACLE_CAP
from .version import __version__


class CommandLine:
    @staticmethod
    def _str2bool(string):
        str2val = {"true": True, "false": False}
        if string and string.lower() in str2val:
            return str2val[string.lower()]
        else:
            raise ValueError(f"Expected one of {set(str2val.keys())}, got {string}")

    @staticmethod
    def _optional_bool(string):
        return None if string in ("None", "auto") else CommandLine._str2bool(string)

    @staticmethod
    def _positive_float(string):
        value = float(string)
        if not value > 0:
            raise ValueError(f"Expected a positive number, got {string}")
        return value

    @staticmethod
    def _int_range(string):
        """'3-13' is the inclusive range 3..13, '5' the single value 5."""
        lo, sep, hi = string.strip().partition("-")
        lo = int(lo)
        hi = int(hi) if sep else lo
        return (lo, hi)

    @staticmethod
    def _add_output_options(parser, default_format="txt", formats=("txt", "json")):
        outputs_args = parser.add_argument_group(
            "Configuration options to control generated outputs"
        )
        outputs_args.add_argument(
            "--format",
            "-f",
            type=str,
            default=default_format,
            choices=list(formats),
            help="output format; txt is human readable, the others are machine readable",
        )
        outputs_args.add_argument(
            "--out",
            "-o",
            type=str,
            default="-",
            help="file to write the output to; '-' writes to standard output",
        )
        outputs_args.add_argument(
            "--pretty_json",
            type=CommandLine._str2bool,
            nargs="?",
            const=True,
            default=False,
            help="produce json in a human readable format",
        )
        outputs_args.add_argument(
            "--verbose",
            type=CommandLine._str2bool,
            nargs="?",
            const=True,
            default=False,
            help="print debug messages and timings to standard error",
        )

    @staticmethod
    def _add_tolerance(parser, tolerance):
        parser.add_argument(
            "--tol",
            type=CommandLine._positive_float,
            default=tolerance,
            help="relative tolerance for the floating point cross-checks (default from QUOTDEG_TOL, else 1e-9)",
        )

    @staticmethod
    def _add_workers(parser, default):
        parser.add_argument(
            "--workers",
            type=int,
            default=default,
            help="number of worker processes",
        )

    @staticmethod
    def build_parser():
        tolerance = default_tolerance()
        cpus = os.cpu_count() or 1

        parser = argparse.ArgumentParser(
            prog="quot-degrees",
            description="Exact degrees of zero-dimensional Quot schemes and the rank-2 Verschiebung bound",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        parser.add_argument(
            "--version",
            action="version",
            version="%(prog)s {version}".format(version=__version__),
            help="show program's version number and exit",
        )
        subparsers = parser.add_subparsers(dest="command", required=True)

        holla = subparsers.add_parser(
            "holla",
            help="degree of a zero-dimensional Quot scheme of a general stable bundle",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        bundle_args = holla.add_argument_group("Bundle and subsheaf options")
        bundle_args.add_argument("--n", type=int, required=True, help="rank of the bundle")
        bundle_args.add_argument("--d", type=int, required=True, help="degree of the bundle")
        bundle_args.add_argument("--r", type=int, required=True, help="rank of the subsheaves")
        bundle_args.add_argument("--g", type=int, required=True, help="genus of the curve")
        oracle_args = holla.add_argument_group("Cross-check options")
        oracle_args.add_argument(
            "--oracle",
            type=CommandLine._str2bool,
            nargs="?",
            const=True,
            default=False,
            help="also evaluate the formula in floating point over explicit complex roots",
        )
        oracle_args.add_argument(
            "--oracle-cap",
            type=int,
            default=DEFAULT_ORACLE_CAP,
            help="largest n the floating point oracle accepts",
        )
        oracle_args.add_argument(
            "--oracle-tol",
            type=CommandLine._positive_float,
            default=DEFAULT_ORACLE_TOLERANCE,
            help="relative tolerance between the exact degree and the oracle",
        )
        CommandLine._add_workers(holla, 1)
        CommandLine._add_output_options(holla)

        versch = subparsers.add_parser(
            "versch",
            help="upper bound for the degree of the rank-2 Verschiebung",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        versch.add_argument("--g", type=int, required=True, help="genus of the curve")
        versch.add_argument("--p", type=int, required=True, help="characteristic, an odd prime")
        versch.add_argument(
            "--holla",
            type=CommandLine._optional_bool,
            default="auto",
            help="cross-check against the general Holla engine; 'auto' runs it for p <= 13",
        )
        CommandLine._add_tolerance(versch, tolerance)
        CommandLine._add_output_options(versch)

        poly = subparsers.add_parser(
            "poly",
            help="the bound as an exact polynomial in p",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        poly.add_argument("--g", type=int, required=True, help="genus of the curve")
        CommandLine._add_workers(poly, 1)
        CommandLine._add_output_options(poly)

        verify = subparsers.add_parser(
            "verify",
            help="run every invariant suite over a grid",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        verify.add_argument("--g-max", type=int, default=4, help="largest genus of the grid")
        verify.add_argument("--p-max", type=int, default=13, help="largest prime of the grid")
        CommandLine._add_tolerance(verify, tolerance)
        CommandLine._add_output_options(verify)

        table = subparsers.add_parser(
            "table",
            help="bound table over a (g, p) grid",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        table.add_argument(
            "--g-range", type=CommandLine._int_range, default="2-4", help="genus range, e.g. 2-4"
        )
        table.add_argument(
            "--p-range", type=CommandLine._int_range, default="3-13", help="prime range, e.g. 3-13"
        )
        CommandLine._add_tolerance(table, tolerance)
        CommandLine._add_workers(table, cpus)
        CommandLine._add_output_options(table, default_format="csv", formats=("csv", "json", "txt"))

        return parser

    @staticmethod
    def read_command_line(argv=None):
        parser = CommandLine.build_parser()
        return parser.parse_args(argv).__dict__
