"""Command-line entry point.

Every subcommand is a thin wrapper over library calls.  Tabular output goes to
standard output (or ``-o PATH``) as text, CSV or JSON; figures are written to
the files named by ``--figure`` or, for ``report``, next to the CSV files.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors
and on inputs the library rejects.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import bijections, classes, counting, expectation, oracle, tables, trails
from .core import ArrivalSequence, simulate
from .errors import DomainError, MergeError, ResourceLimitError, ValidationError

__all__ = ["build_parser", "main", "run"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

BFILE_OFFSETS = {"A230137": 0, "A031940": 1}


class UsageError(Exception):
    """Argument combination that argparse cannot rule out on its own."""


# ---------------------------------------------------------------- output


def _fraction_text(value: Fraction, digits: int | None) -> str:
    if digits is None:
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    return f"{float(value):.{digits}f}" if digits <= 15 else _long_decimal(value, digits)


def _long_decimal(value: Fraction, digits: int) -> str:
    scaled = round(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _cell(value: Any) -> str:
    return "" if value is None else str(value)


def grid_text(grid: tables.Grid, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(grid.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(grid.header)
        writer.writerows([[_cell(v) for v in row] for row in grid.rows])
        return buf.getvalue()
    cells = [list(grid.header)] + [[_cell(v) for v in row] for row in grid.rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(grid.header))]
    lines = [grid.title]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _bits(text: str) -> ArrivalSequence:
    return ArrivalSequence.parse(text)


# ---------------------------------------------------------------- commands


def cmd_simulate(args) -> int:
    result = simulate(_bits(args.bits))
    payload = {"sequence": args.bits, "r": result.r, "bounces": list(result.bounce_positions)}
    payload.update(result.to_dict())
    _emit(_json(payload), args.output)
    return EXIT_OK


def cmd_count(args) -> int:
    closed = args.method == "closed"
    if args.kind == "bounds":
        length, k = _need(args.values, 2, "count bounds LENGTH K")
        bounds = counting.bounce_bounds(length, k)
        _emit(_json({"length": length, "k": k, "lo": bounds.lo, "hi": bounds.hi}), args.output)
        return EXIT_OK
    if args.kind == "t":
        length, s, k = _need(args.values, 3, "count t LENGTH BOUNCES K")
        _emit(_json({"length": length, "bounces_at_least": s, "k": k, "count": counting.t_count(length, s, k)}), args.output)
        return EXIT_OK
    if not args.values:
        if args.max is None:
            raise UsageError(f"count {args.kind} needs either values or --max")
        if args.kind == "mn":
            grid = tables.count_table(args.max)
        else:
            ks = args.k if args.k is not None else [0, 1, 2, 3]
            grid = tables.count_k_table(ks, range(args.max + 1), args.max)
        _emit(grid_text(grid, args.format), args.output)
        return EXIT_OK
    if args.kind == "mn":
        n, m = _need(args.values, 2, "count mn N M")
        value = counting.m_count_closed(n, m) if closed else counting.m_count_recursive(n, m)
        _emit(_json({"n": n, "m": m, "method": args.method, "count": value}), args.output)
    else:
        n, m, k = _need(args.values, 3, "count mnk N M K")
        value = counting.m_count_k_closed(n, m, k) if closed else counting.m_count_k_recursive(n, m, k)
        _emit(_json({"n": n, "m": m, "k": k, "method": args.method, "count": value}), args.output)
    return EXIT_OK


def _need(values: list[int], count: int, usage: str) -> list[int]:
    if len(values) != count:
        raise UsageError(f"expected {count} integers: {usage}")
    return values


def table_grid(number: int, max_index: int | None) -> tables.Grid:
    if number == 1:
        return tables.count_table(7 if max_index is None else max_index)
    if number == 3:
        return tables.lane_sum_table(8 if max_index is None else max_index)
    if number == 4:
        top = 6 if max_index is None else max_index
        return tables.count_k_table([0, 1, 2, 3], range(top + 1), min(top, 5))
    if number == 5:
        top = 11 if max_index is None else max_index
        return tables.count_k_table([6], range(6, top + 1), top)
    if number == 6:
        return tables.class_table(6 if max_index is None else max_index)
    return tables.coin_table(4 if max_index is None else max_index)


def cmd_table(args) -> int:
    if args.figure and args.number in (2, 6):
        raise UsageError(f"table {args.number} is not numeric; --figure is only for tables 1, 3, 4 and 5")
    grid = table_grid(args.number, args.max)
    _emit(grid_text(grid, args.format), args.output)
    if args.figure:
        from .plotting import plot_grid

        plot_grid(grid, args.figure)
    return EXIT_OK


def cmd_expect(args) -> int:
    if args.bfile:
        top = 30 if args.max is None else args.max
        offset = BFILE_OFFSETS[args.bfile]
        fn = expectation.right_lane_sum if args.bfile == "A230137" else longest_trail_entry
        lines = [f"{i} {fn(i)}" for i in range(offset, top + 1)]
        _emit("\n".join(lines) + "\n", args.output)
        return EXIT_OK
    if args.table:
        _emit(grid_text(tables.lane_sum_table(8 if args.max is None else args.max), args.format), args.output)
        return EXIT_OK
    if args.trace:
        top = 200 if args.max is None else args.max
        trace = expectation.ratio_trace(top, args.trace)
        payload = {
            "rule": args.trace,
            "limit": _fraction_text(expectation.limit_ratio(args.trace), args.digits),
            "trace": [[length, _fraction_text(value, args.digits)] for length, value in trace],
        }
        if args.format == "csv":
            text = "length,ratio\n" + "".join(f"{x},{y}\n" for x, y in payload["trace"])
        else:
            text = _json(payload)
        _emit(text, args.output)
        if args.figure:
            from .plotting import plot_ratio_trace

            plot_ratio_trace({args.trace: trace}, args.figure, {args.trace: float(expectation.limit_ratio(args.trace))})
        return EXIT_OK
    if args.length is None:
        raise UsageError("expect needs LENGTH unless --table, --trace or --bfile is given")
    if args.k is None:
        value = expectation.expected_length(args.length)
        payload = {"length": args.length, "sum": expectation.right_lane_sum(args.length)}
    else:
        value = expectation.expected_length_k(args.length, args.k)
        payload = {"length": args.length, "k": args.k, "sum": expectation.right_lane_sum_k(args.length, args.k)}
    payload["expected"] = _fraction_text(value, None)
    if args.digits is not None:
        payload["decimal"] = _fraction_text(value, args.digits)
    _emit(_json(payload), args.output)
    return EXIT_OK


def longest_trail_entry(length: int) -> int:
    return trails.longest_trail_length(length)


def cmd_bijection(args) -> int:
    op = args.op
    if op == "phi":
        seq = _bits(args.value)
        coins = bijections.phi(seq)
        payload = {"b": str(seq), "c": str(coins), "r": simulate(seq).r, "max": bijections.max_heads_tails(coins)}
    elif op == "phi-inverse":
        seq = bijections.phi_inverse(args.value)
        payload = {"c": args.value.strip(), "b": str(seq)}
    elif op == "psi":
        if args.s is None:
            raise UsageError("psi needs --s")
        payload = {"b": args.value, "s": args.s, "image": str(bijections.psi(_bits(args.value), args.s))}
    elif op == "step":
        fn = bijections.step_map_inverse if args.inverse else bijections.step_map
        payload = {"b": args.value, "inverse": args.inverse, "image": str(fn(_bits(args.value)))}
    elif op == "table":
        _emit(grid_text(tables.coin_table(_int_arg(args.value)), args.format), args.output)
        return EXIT_OK
    else:
        report = oracle.verify_bijections(_int_arg(args.value))
        _emit(_json(report.to_dict()), args.output)
        return EXIT_OK if report.passed else EXIT_FAILED
    _emit(_json(payload), args.output)
    return EXIT_OK


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}") from None


def cmd_trail(args) -> int:
    trail = trails.longest_trail(args.length)
    if args.check_partition:
        report = oracle.verify_trail_partition([args.length])
        _emit(_json(report.to_dict()), args.output)
        return EXIT_OK if report.passed else EXIT_FAILED
    if args.edges:
        _emit(_json({"length": args.length, "edges": [list(e) for e in trail.edges]}), args.output)
    elif args.snake:
        _emit(str(trails.trail_to_snake(trail)) + "\n", args.output)
    else:
        _emit(str(trail) + "\n", args.output)
    return EXIT_OK


def cmd_classes(args) -> int:
    found = classes.partition(args.length)
    if args.format == "json":
        _emit(_json([c.to_dict() for c in found]), args.output)
    else:
        _emit(grid_text(tables.class_table(args.length), args.format), args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    from .plotting import render_path

    seq = _bits(args.bits)
    render_path(seq, args.output, fmt=args.format)
    return EXIT_OK


def cmd_oracle_verify(args) -> int:
    def progress(name: str) -> None:
        if args.verbose:
            print(f"running {name}", file=sys.stderr)

    reports = oracle.verify_all(args.max_length, args.workers, args.samples, args.seed, progress)
    passed = all(r.passed for r in reports)
    payload = {"status": "pass" if passed else "fail", "reports": [r.to_dict() for r in reports]}
    _emit(_json(payload), args.output)
    return EXIT_OK if passed else EXIT_FAILED


def cmd_report(args) -> int:
    """Write the numeric tables as CSV plus a figure for each, and a ratio-trace plot."""
    from .plotting import plot_grid, plot_ratio_trace, render_path

    out = Path(args.directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for number in (1, 3, 4, 5):
        grid = table_grid(number, None)
        csv_path = out / f"table{number}.csv"
        csv_path.write_text(grid_text(grid, "csv"))
        written += [csv_path, plot_grid(grid, out / f"table{number}.{args.figure_format}")]
    for number in (2, 6):
        csv_path = out / f"table{number}.csv"
        csv_path.write_text(grid_text(table_grid(number, None), "csv"))
        written.append(csv_path)
    rules = {"all": "all", "k=3l/4": "3/4", "k=l/4": "1/4"}
    traces = {label: expectation.ratio_trace(args.max, rule) for label, rule in rules.items()}
    limits = {label: float(expectation.limit_ratio(rule)) for label, rule in rules.items()}
    trace_csv = out / "ratio_trace.csv"
    trace_csv.write_text(
        "rule,length,ratio\n"
        + "".join(f"{label},{x},{float(y):.12f}\n" for label, trace in traces.items() for x, y in trace)
    )
    written += [trace_csv, plot_ratio_trace(traces, out / f"ratio_trace.{args.figure_format}", limits)]
    written.append(render_path(args.example, out / f"path_{args.example}.{args.figure_format}"))
    sys.stdout.write("".join(f"{p}\n" for p in written))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trafficmerge", description="Two-lane merging: counts, expectations, bijections.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help_text: str, output: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(handler=handler)
        if output:
            p.add_argument("-o", "--output", help="write to this file instead of standard output")
        return p

    def fmt(p: argparse.ArgumentParser, default: str = "csv") -> None:
        p.add_argument("--format", choices=["text", "csv", "json"], default=default)

    p = add("simulate", cmd_simulate, "merge one arrival sequence and print the result as JSON")
    p.add_argument("bits", help="string of 0 (red) and 1 (green)")

    p = add("count", cmd_count, "merging-path counts, bounded-bounce counts and bounce bounds")
    p.add_argument("kind", choices=["mn", "mnk", "t", "bounds"])
    p.add_argument("values", nargs="*", type=int)
    p.add_argument("--method", choices=["closed", "recursive"], default="closed")
    p.add_argument("--max", type=int, help="print a full grid up to this index instead of one value")
    p.add_argument("--k", type=int, nargs="+", help="zero counts to include in an mnk grid")
    fmt(p)

    p = add("table", cmd_table, "reproduce one of the tables (1-6)")
    p.add_argument("number", type=int, choices=[1, 2, 3, 4, 5, 6])
    p.add_argument("--max", type=int)
    p.add_argument("--figure", help="also render the table as a heat map to this file")
    fmt(p)

    p = add("expect", cmd_expect, "expected right-lane length as an exact fraction")
    p.add_argument("length", type=int, nargs="?")
    p.add_argument("--k", type=int, help="condition on exactly K red cars")
    p.add_argument("--digits", type=int, help="also print a decimal with this many digits")
    p.add_argument("--table", action="store_true", help="print the grid of lane sums by length and k")
    p.add_argument("--trace", help="ratio trace E/l; 'all' or a ratio b/a for k = b*l/a")
    p.add_argument("--bfile", choices=sorted(BFILE_OFFSETS), help="emit an integer sequence as 'index value' lines")
    p.add_argument("--max", type=int)
    p.add_argument("--figure", help="with --trace, plot the trace to this file")
    fmt(p, "json")

    p = add("bijection", cmd_bijection, "apply or verify the bijections")
    p.add_argument("op", choices=["phi", "phi-inverse", "psi", "step", "table", "verify"])
    p.add_argument("value", help="bit string, coin string (H/T) or, for table/verify, a length")
    p.add_argument("--s", type=int, help="bounce index for psi")
    p.add_argument("--inverse", action="store_true", help="apply the inverse step map")
    fmt(p)

    p = add("trail", cmd_trail, "longest trail in the looped complete graph")
    p.add_argument("length", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--snake", action="store_true", help="print as a domino snake")
    group.add_argument("--edges", action="store_true", help="print the edge list as JSON")
    group.add_argument("--check-partition", action="store_true", help="verify the single-red edge partition")

    p = add("classes", cmd_classes, "color-blind equivalence classes")
    p.add_argument("length", type=int)
    fmt(p, "text")

    p = add("render", cmd_render, "draw the merging path of a sequence", output=False)
    p.add_argument("bits")
    p.add_argument("--format", choices=["svg", "png", "pdf"], default="svg")
    p.add_argument("-o", "--output", required=True, help="figure file to write")

    p = add("oracle-verify", cmd_oracle_verify, "run the exhaustive and sampling checks; JSON report")
    p.add_argument("--max-length", type=int, default=14)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=20240601)
    p.add_argument("--verbose", action="store_true")

    p = add("report", cmd_report, "write all tables as CSV with matching figures", output=False)
    p.add_argument("directory")
    p.add_argument("--max", type=int, default=400, help="longest length in the ratio trace")
    p.add_argument("--example", default="00111001", help="sequence whose path is drawn")
    p.add_argument("--figure-format", choices=["svg", "png", "pdf"], default="svg")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
    except DomainError as exc:
        print(f"outside the supported domain: {exc}", file=sys.stderr)
    except ResourceLimitError as exc:
        print(f"request exceeds the enumeration cap: {exc}", file=sys.stderr)
    except MergeError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())
