"""Command-line front end for the solvers, oracles, traces, and tables.

Every invocation runs exactly one subcommand and writes one JSON record
(or, for `table` and `diff`, optionally CSV rows) to stdout. JSON output
is canonical: keys sorted, fixed indentation, and no floating point --
integers above the 53-bit safe range are emitted as decimal strings so
no consumer ever rounds them.

Exit codes: 0 success; 1 output write failure; 2 invalid input (unknown
flags, out-of-range values, rejected instances); 3 internal consistency
failure (for example a solver disagreement found by `diff`).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import IO

from . import closed_form, egyptian, general
from .egyptian import PositiveRational
from .errors import InternalCheckError, ValidationError
from .model import GeneralInstance, SolveInstance

SCHEMA_VERSION = "1"
CSV_HEADER = ("n", "p_or_m", "case", "x", "y")

# Largest integer every JSON consumer can hold exactly in a double.
MAX_SAFE_INT = (1 << 53) - 1

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


@dataclass
class _Outcome:
    command: str
    inputs: dict
    result: dict
    diagnostics: list[str]
    summary: str
    exit_code: int = EXIT_OK
    csv_rows: list[list] | None = None


def canonical_json(value) -> str:
    """Serialize with sorted keys and fixed formatting.

    Parsing the result and re-serializing it with this function
    reproduces the bytes exactly.
    """
    return json.dumps(value, sort_keys=True, indent=2)


def _encode(value, force_strings: bool):
    """Convert ints that would lose precision in JSON to decimal strings."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value) if force_strings or abs(value) > MAX_SAFE_INT else value
    if isinstance(value, (list, tuple)):
        return [_encode(item, force_strings) for item in value]
    if isinstance(value, dict):
        return {key: _encode(item, force_strings) for key, item in value.items()}
    raise TypeError(f"unexpected value in output record: {value!r}")


def _reject_csv(args) -> None:
    if args.format == "csv":
        raise ValidationError(
            "CSV output is only available for the table and diff commands"
        )


def _pairs_payload(pairs) -> list[list[int]]:
    return [list(pair) for pair in pairs]


def _cmd_solve(args) -> _Outcome:
    _reject_csv(args)
    solution = closed_form.solve(SolveInstance(args.n, args.p))
    result = {"case": solution.case.value, "pairs": _pairs_payload(solution.pairs)}
    summary = (
        f"n={args.n} p={args.p}: {solution.case.value}, "
        f"{len(solution.pairs)} solution(s)"
    )
    return _Outcome("solve", {"n": args.n, "p": args.p}, result, [], summary)


def _cmd_classify(args) -> _Outcome:
    _reject_csv(args)
    case = closed_form.classify(SolveInstance(args.n, args.p))
    summary = f"n={args.n} p={args.p}: {case.value}"
    return _Outcome(
        "classify", {"n": args.n, "p": args.p}, {"case": case.value}, [], summary
    )


def _cmd_verify(args) -> _Outcome:
    _reject_csv(args)
    inst = SolveInstance(args.n, args.p)
    holds = closed_form.verify(inst, (args.x, args.y))
    lhs = inst.n * args.x * args.y
    rhs = inst.p * (args.x + args.y)
    result = {"holds": holds, "lhs": lhs, "rhs": rhs}
    word = "solves" if holds else "does not solve"
    summary = f"({args.x}, {args.y}) {word} {args.n}*x*y = {args.p}*(x+y)"
    inputs = {"n": args.n, "p": args.p, "x": args.x, "y": args.y}
    return _Outcome("verify", inputs, result, [], summary)


def _cmd_trace(args) -> _Outcome:
    _reject_csv(args)
    inst = SolveInstance(args.n, args.p)
    trace = closed_form.derive_trace(inst, (args.x, args.y))
    result = {
        "branch": trace.branch.value,
        "d": trace.decomposition.d,
        "u1": trace.decomposition.u1,
        "u2": trace.decomposition.u2,
        "v1": trace.v1,
        "delta": trace.delta,
        "eq8_check": trace.eq8_check,
        "eq12_check": trace.eq12_check,
    }
    summary = f"({args.x}, {args.y}): {trace.branch.value}"
    inputs = {"n": args.n, "p": args.p, "x": args.x, "y": args.y}
    return _Outcome("trace", inputs, result, [], summary)


def _cmd_count(args) -> _Outcome:
    _reject_csv(args)
    total = general.count(GeneralInstance(args.n, args.m))
    summary = f"n={args.n} m={args.m}: {total} solution(s)"
    return _Outcome(
        "count", {"n": args.n, "m": args.m}, {"count": total}, [], summary
    )


def _cmd_oracle(args) -> _Outcome:
    _reject_csv(args)
    solution = general.brute_force(GeneralInstance(args.n, args.m))
    result = {"case": solution.case.value, "pairs": _pairs_payload(solution.pairs)}
    summary = (
        f"n={args.n} m={args.m}: {len(solution.pairs)} solution(s) by enumeration"
    )
    return _Outcome("oracle", {"n": args.n, "m": args.m}, result, [], summary)


def _cmd_diff(args) -> _Outcome:
    disagreements = general.cross_check(args.n_max, args.m_max)
    mismatches = [
        {
            "n": d.n,
            "m": d.m,
            "brute_force": _pairs_payload(d.brute_pairs),
            "divisor_solve": _pairs_payload(d.divisor_pairs),
        }
        for d in disagreements
    ]
    instances = args.n_max * args.m_max
    result = {
        "instances_checked": instances,
        "disagreements": len(disagreements),
        "mismatches": mismatches,
    }
    diagnostics = [f"n={d.n} m={d.m}: solver outputs differ" for d in disagreements]
    summary = f"{len(disagreements)} disagreements across {instances} instances"
    csv_rows = None
    if args.format == "csv":
        csv_rows = []
        for d in disagreements:
            brute, divisor = set(d.brute_pairs), set(d.divisor_pairs)
            for x, y in sorted(brute - divisor):
                csv_rows.append([d.n, d.m, "brute_force_only", x, y])
            for x, y in sorted(divisor - brute):
                csv_rows.append([d.n, d.m, "divisor_solve_only", x, y])
    exit_code = EXIT_OK if not disagreements else EXIT_INTERNAL
    inputs = {"n_max": args.n_max, "m_max": args.m_max}
    return _Outcome("diff", inputs, result, diagnostics, summary, exit_code, csv_rows)


def _cmd_egyptian(args) -> _Outcome:
    _reject_csv(args)
    q = PositiveRational(args.num, args.den)
    expansion = egyptian.greedy(q)
    split_pair = None
    if q.num == 1:
        first, second = egyptian.split(q.den)
        split_pair = [first.den, second.den]
    result = {
        "source": [q.num, q.den],
        "expansion": [term.den for term in expansion.terms],
        "split": split_pair,
    }
    summary = f"{q} = " + " + ".join(f"1/{t.den}" for t in expansion.terms)
    inputs = {"num": args.num, "den": args.den}
    return _Outcome("egyptian", inputs, result, [], summary)


def _cmd_table(args) -> _Outcome:
    tbl = egyptian.table(args.n, args.p_min, args.p_max)
    rows_payload = [
        {"p": inst.p, "case": sol.case.value, "pairs": _pairs_payload(sol.pairs)}
        for inst, sol in tbl.rows
    ]
    result = {"rows": rows_payload, "skipped_primes": list(tbl.skipped_primes)}
    diagnostics = [
        f"skipped prime {p}: divides n = {args.n}" for p in tbl.skipped_primes
    ]
    summary = (
        f"{len(tbl.rows)} row(s) for n={args.n}, "
        f"primes in [{args.p_min}, {args.p_max}]"
    )
    csv_rows = None
    if args.format == "csv":
        csv_rows = []
        for inst, sol in tbl.rows:
            if sol.pairs:
                for x, y in sol.pairs:
                    csv_rows.append([inst.n, inst.p, sol.case.value, x, y])
            else:
                csv_rows.append([inst.n, inst.p, sol.case.value, "", ""])
    inputs = {"n": args.n, "p_min": args.p_min, "p_max": args.p_max}
    return _Outcome(
        "table", inputs, result, diagnostics, summary, EXIT_OK, csv_rows
    )


def _build_parser() -> argparse.ArgumentParser:
    output_flags = argparse.ArgumentParser(add_help=False)
    output_flags.add_argument(
        "--format",
        choices=("json", "csv"),
        default="json",
        help="output format (CSV only for table and diff)",
    )
    output_flags.add_argument(
        "--strings",
        action="store_true",
        help="emit every JSON number as a decimal string",
    )
    output_flags.add_argument(
        "--verbose",
        action="store_true",
        help="print a human-readable summary to stderr",
    )

    parser = argparse.ArgumentParser(
        prog="unitfrac",
        description="Decompose n/p into two unit fractions and verify the result.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name: str, handler, help_text: str):
        cmd = sub.add_parser(name, parents=[output_flags], help=help_text)
        cmd.set_defaults(handler=handler)
        return cmd

    cmd = command("solve", _cmd_solve, "emit the complete solution set for (n, p)")
    cmd.add_argument("--n", type=int, required=True, help="numerator coefficient, n >= 2")
    cmd.add_argument("--p", type=int, required=True, help="prime modulus")

    cmd = command("classify", _cmd_classify, "report which case governs (n, p)")
    cmd.add_argument("--n", type=int, required=True, help="numerator coefficient, n >= 2")
    cmd.add_argument("--p", type=int, required=True, help="prime modulus")

    cmd = command("verify", _cmd_verify, "check whether (x, y) solves n*x*y = p*(x+y)")
    cmd.add_argument("--n", type=int, required=True, help="numerator coefficient, n >= 2")
    cmd.add_argument("--p", type=int, required=True, help="prime modulus")
    cmd.add_argument("--x", type=int, required=True, help="first component")
    cmd.add_argument("--y", type=int, required=True, help="second component")

    cmd = command("trace", _cmd_trace, "re-derive a solution and emit its certificate")
    cmd.add_argument("--n", type=int, required=True, help="numerator coefficient, n >= 2")
    cmd.add_argument("--p", type=int, required=True, help="prime modulus")
    cmd.add_argument("--x", type=int, required=True, help="first component")
    cmd.add_argument("--y", type=int, required=True, help="second component")

    cmd = command("count", _cmd_count, "count solutions of n*x*y = m*(x+y)")
    cmd.add_argument("--n", type=int, required=True, help="numerator coefficient, n >= 1")
    cmd.add_argument("--m", type=int, required=True, help="modulus, m >= 1 (any value)")

    cmd = command("oracle", _cmd_oracle, "solve n*x*y = m*(x+y) by enumeration")
    cmd.add_argument("--n", type=int, required=True, help="numerator coefficient, n >= 1")
    cmd.add_argument("--m", type=int, required=True, help="modulus, m >= 1 (any value)")

    cmd = command("diff", _cmd_diff, "cross-check the two general solvers on a grid")
    cmd.add_argument("--n-max", type=int, required=True, help="check n in [1, n-max]")
    cmd.add_argument("--m-max", type=int, required=True, help="check m in [1, m-max]")

    cmd = command("egyptian", _cmd_egyptian, "expand num/den into unit fractions")
    cmd.add_argument("--num", type=int, required=True, help="numerator")
    cmd.add_argument("--den", type=int, required=True, help="denominator")

    cmd = command("table", _cmd_table, "tabulate solution sets over a prime range")
    cmd.add_argument("--n", type=int, required=True, help="fixed numerator coefficient")
    cmd.add_argument("--p-min", type=int, required=True, help="lowest prime to include")
    cmd.add_argument("--p-max", type=int, required=True, help="highest prime to include")

    return parser


def _write_err(stream: IO[str], message: str) -> None:
    try:
        stream.write(message + "\n")
    except OSError:
        pass


def run(argv: list[str], stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    """Execute one subcommand; returns the process exit code."""
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage or help text
        return EXIT_OK if not exc.code else EXIT_USAGE

    try:
        outcome = args.handler(args)
    except ValidationError as exc:
        _write_err(err, f"error: {exc}")
        return EXIT_USAGE
    except InternalCheckError as exc:
        _write_err(err, f"internal error: {exc}")
        return EXIT_INTERNAL

    try:
        if outcome.csv_rows is not None:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            writer.writerows(outcome.csv_rows)
        else:
            record = {
                "schema_version": SCHEMA_VERSION,
                "command": outcome.command,
                "input": outcome.inputs,
                "result": outcome.result,
                "diagnostics": outcome.diagnostics,
            }
            out.write(canonical_json(_encode(record, args.strings)) + "\n")
    except OSError as exc:
        _write_err(err, f"error: failed to write output: {exc}")
        return EXIT_IO
    if args.verbose:
        _write_err(err, outcome.summary)
    return outcome.exit_code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
