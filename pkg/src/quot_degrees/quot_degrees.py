import concurrent.futures
import datetime
import logging
import os
import sys
import warnings
from typing import List

import tqdm

from .checks import CheckOptions, check
from .commandline import CommandLine
from .errors import DimensionPositive, OracleError, ParameterError, QuotDegreeError
from .holla import (
    anchored_subsets,
    brute_force_degree,
    combine_partial_sums,
    derive_params,
    holla_degree,
    is_zero_dimensional,
    partial_holla_sum,
    rotation_weight,
)
from .polyp import closed_form, expected_support, format_polynomial, interpolate_bound
from .records import OutputRecord
from .suites import odd_primes, run_all
from .summation import relative_error
from .versch import HYPOTHESIS, build_report, versch_params
from .writers import STDOUT, get_writer

logger = logging.getLogger(__name__)


def get_check_options(args) -> CheckOptions:
    defaults = CheckOptions()
    options = CheckOptions(
        tolerance=args.pop("tol", defaults.tolerance),
        oracle_tolerance=args.pop("oracle_tol", defaults.oracle_tolerance),
        oracle_cap=args.pop("oracle_cap", defaults.oracle_cap),
        workers=args.pop("workers", defaults.workers),
    )
    if options.workers < 1:
        raise ParameterError(f"--workers must be at least 1, got {options.workers}")
    return options


def _split(items: List, parts: int) -> List[List]:
    return [items[i::parts] for i in range(parts) if items[i::parts]]


def parallel_holla_degree(params, workers: int) -> int:
    subsets = list(anchored_subsets(params.n, params.r))
    slices = _split(subsets, workers)
    with concurrent.futures.ProcessPoolExecutor(max_workers=len(slices)) as executor:
        partials = list(executor.map(partial_holla_sum, [params] * len(slices), slices))
    return combine_partial_sums(params, partials, rotation_weight(params))


def cmd_holla(args, options: CheckOptions, progress: bool) -> OutputRecord:
    n, d, r, g = args.pop("n"), args.pop("d"), args.pop("r"), args.pop("g")
    oracle: bool = args.pop("oracle")

    params = derive_params(n, d, r, g)
    record = OutputRecord(command="holla", params={"n": n, "d": d, "r": r, "g": g})
    for name in ("a", "b", "eps", "e_max", "s_r", "quot_dim"):
        record.add_exact(name, getattr(params, name))

    if not is_zero_dimensional(params):
        record.notes.append(DimensionPositive(params.eps).message)
        record.exit_code = DimensionPositive.exit_code
        return record

    if oracle and n > options.oracle_cap:
        raise ParameterError(f"--oracle is capped at n <= {options.oracle_cap}, got n={n}")

    if options.workers > 1:
        degree = parallel_holla_degree(params, options.workers)
    else:
        degree = holla_degree(params)
    record.add_exact("degree", degree)

    if oracle:
        try:
            approx = brute_force_degree(params, cap=options.oracle_cap)
        except OracleError as e:
            record.add_checks([check("oracle agrees", False, e.message)])
            return record
        rel_err = relative_error(approx, degree)
        record.add_float("oracle_rel_err", rel_err)
        record.add_checks(
            [
                check(
                    "oracle agrees",
                    rel_err < options.oracle_tolerance,
                    f"rel_err={rel_err:.3e} tol={options.oracle_tolerance:.1e}",
                )
            ]
        )
    return record


def cmd_versch(args, options: CheckOptions, progress: bool) -> OutputRecord:
    g, p = args.pop("g"), args.pop("p")
    holla = args.pop("holla")

    report = build_report(versch_params(g, p), options, cross_check_holla=holla)
    record = OutputRecord(command="versch", params={"g": g, "p": p})
    record.add_exact("bound_exact", report.bound_exact)
    record.add_exact("quotF_degree_bound", report.quotF_degree_bound)
    record.add_exact("bound_cosine", report.bound_cosine)
    if report.holla_degree is not None:
        record.add_exact("holla_degree", report.holla_degree)
    record.add_float("trig_rel_err", report.rel_err)
    for name, value in report.lemma4._asdict().items():
        record.add_exact(f"lemma4_{name}", value)
    if report.g2_comparison is not None:
        record.add_exact("g2_exact", report.g2_comparison.exact)
        record.add_exact("g2_gap", report.g2_comparison.gap)
        if report.g2_comparison.excess_nonempty:
            record.notes.append("genus 2: the bound exceeds the exact degree, the excess locus is nonempty")
    record.add_checks(report.checks)
    return record


def cmd_poly(args, options: CheckOptions, progress: bool) -> OutputRecord:
    g = args.pop("g")

    if options.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=options.workers) as executor:
            interpolation = interpolate_bound(g, mapper=executor.map)
    else:
        interpolation = interpolate_bound(g)

    poly = interpolation.polynomial
    record = OutputRecord(command="poly", params={"g": g})
    record.add_exact("degree", poly.degree())
    for k, c in sorted(poly.nonzero_terms().items(), reverse=True):
        record.add_exact(f"p^{k}", c)
    record.notes.append(f"bound(p) = {format_polynomial(poly)}")
    record.notes.append(f"interpolation nodes m = {interpolation.nodes[0]}..{interpolation.nodes[-1]}")

    record.add_checks(
        [
            check(f"node m={m}: polynomial = sum", got == expected, f"{got}")
            for m, expected, got in interpolation.verification
        ]
    )
    record.add_checks(
        [check("support within g-1, g+1, ..., 3g-3", set(poly.support()) <= set(expected_support(g)))]
    )
    reference = closed_form(g)
    if reference is not None:
        record.add_checks([check("matches closed form", poly == reference, format_polynomial(reference))])
    return record


def cmd_verify(args, options: CheckOptions, progress: bool) -> OutputRecord:
    g_max, p_max = args.pop("g_max"), args.pop("p_max")

    checks = run_all(g_max, p_max, options, progress=progress)
    record = OutputRecord(
        command="verify",
        params={"g_max": g_max, "p_max": p_max, "tol": options.tolerance},
    )
    record.add_checks(checks)
    record.add_exact("checks_total", len(checks))
    record.add_exact("checks_passed", len(checks) - len(record.failed_checks))
    record.add_exact("checks_failed", len(record.failed_checks))
    return record


def table_row(g: int, p: int, options: CheckOptions):
    report = build_report(versch_params(g, p), options)
    row = {
        "g": g,
        "p": p,
        "bound_exact": report.bound_exact,
        "quotF_degree": report.quotF_degree_bound,
        "trig_rel_err": report.rel_err,
        "g2_exact": None,
        "gap": None,
    }
    if report.g2_comparison is not None:
        row["g2_exact"] = report.g2_comparison.exact
        row["gap"] = report.g2_comparison.gap
    checks = [c._replace(name=f"g={g} p={p}: {c.name}") for c in report.checks]
    return row, checks


def _table_row_args(args):
    return table_row(*args)


def table_grid(g_range, p_range):
    grid, skipped = [], []
    for g in range(g_range[0], g_range[1] + 1):
        for p in odd_primes(p_range[1]):
            if p < p_range[0]:
                continue
            if p + 1 > g > 1:
                grid.append((g, p))
            else:
                skipped.append((g, p))
    return grid, skipped


def cmd_table(args, options: CheckOptions, progress: bool) -> OutputRecord:
    g_range, p_range = args.pop("g_range"), args.pop("p_range")

    grid, skipped = table_grid(g_range, p_range)
    record = OutputRecord(
        command="table",
        params={"g_range": list(g_range), "p_range": list(p_range)},
        rows=[],
    )
    for g, p in skipped:
        record.notes.append(f"skipped g={g}, p={p}: violates {HYPOTHESIS}")
    if skipped:
        warnings.warn(f"skipped {len(skipped)} (g, p) pairs violating {HYPOTHESIS}")

    jobs = [(g, p, options) for g, p in grid]
    logger.debug("table grid: %d rows, %d skipped, %d workers", len(jobs), len(skipped), options.workers)
    disable = not progress or len(jobs) < 2
    if options.workers > 1 and len(jobs) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=options.workers) as executor:
            results = list(
                tqdm.tqdm(executor.map(_table_row_args, jobs), total=len(jobs), disable=disable)
            )
    else:
        results = [_table_row_args(job) for job in tqdm.tqdm(jobs, disable=disable)]

    for row, checks in results:
        record.rows.append(row)
        record.add_checks(checks)
    return record


COMMANDS = {
    "holla": cmd_holla,
    "versch": cmd_versch,
    "poly": cmd_poly,
    "verify": cmd_verify,
    "table": cmd_table,
}


def _check_writable(output_path: str):
    if output_path == STDOUT:
        return
    directory = os.path.dirname(os.path.abspath(output_path))
    if not os.path.isdir(directory) or not os.access(directory, os.W_OK):
        raise ParameterError(f"Output path '{output_path}' is not writable")


def run(argv=None) -> int:
    try:
        args = CommandLine().read_command_line(argv)
    except ParameterError as e:
        sys.stderr.write(f"{e.message}\n")
        return e.exit_code

    command: str = args.pop("command")
    verbose: bool = args.pop("verbose")
    output_format: str = args.pop("format")
    output_path: str = args.pop("out")
    writer_args = {"pretty_json": args.pop("pretty_json")}

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )

    start_time = datetime.datetime.now()
    try:
        _check_writable(output_path)
        options = get_check_options(args)
        record = COMMANDS[command](args, options, progress=not verbose)
    except QuotDegreeError as e:
        sys.stderr.write(f"{e.message}\n")
        return e.exit_code
    except AssertionError as e:
        sys.stderr.write(f"internal check failed: {e}\n")
        return QuotDegreeError.exit_code

    if verbose:
        sys.stderr.write(f"Time used for {command}: {datetime.datetime.now() - start_time}\n")

    try:
        writer = get_writer(output_format, output_path)
        writer(record, writer_args)
    except OSError as e:
        sys.stderr.write(f"Cannot write '{output_path}': {e.strerror}\n")
        return ParameterError.exit_code

    if record.exit_code:
        for note in record.notes:
            sys.stderr.write(f"{note}\n")
        return record.exit_code

    failed = record.failed_checks
    for c in failed:
        sys.stderr.write(f"check failed: {c.name} {c.detail}\n")
    return 1 if failed else 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
