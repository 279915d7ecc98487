"""Command-line interface.

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
errors.  Data goes to stdout (or the ``--out`` file); diagnostics go to
stderr.  JSON and CSV output is byte-identical across runs for identical
inputs, except for the timing column of ``bench``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import arith, cyclo, intpoly, verify

#: Largest index the polynomial-producing commands accept.  The dense
#: representation and desk-scale algorithms degrade beyond this.
MAX_CLI_N = 200_000

_SUITES = ("poly", "totient", "ramanujan", "coeff", "all")


class _UsageError(Exception):
    pass


def _check_cli_n(value: int, name: str) -> None:
    if not 1 <= value <= MAX_CLI_N:
        raise _UsageError("%s must be in [1, %d], got %d" % (name, MAX_CLI_N, value))


def _check_format(fmt: str) -> None:
    if fmt == "csv":
        raise _UsageError("csv format is only valid for bench and table")


def _coeff_strings(poly) -> list:
    return [str(c) for c in poly]


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _cmd_compute(args) -> int:
    _check_cli_n(args.n, "--n")
    _check_format(args.format)
    result = cyclo.cyclotomic(args.n, args.algorithm)
    if args.format == "json":
        print(
            _dump(
                {
                    "n": result.n,
                    "degree": len(result.poly) - 1,
                    "coefficients": _coeff_strings(result.poly),
                }
            )
        )
    else:
        print("Phi_%d(X) = %s" % (result.n, intpoly.poly_str(result.poly)))
    return 0


def _cmd_compose(args) -> int:
    _check_cli_n(args.n, "--n")
    _check_cli_n(args.m, "--m")
    _check_format(args.format)
    try:
        poly = cyclo.cyclotomic_of_power(args.n, args.m)
    except cyclo.NotCoprimeError:
        raise _UsageError("n and m must be coprime")
    if args.format == "json":
        print(
            _dump(
                {
                    "n": args.n,
                    "m": args.m,
                    "degree": len(poly) - 1,
                    "coefficients": _coeff_strings(poly),
                }
            )
        )
    else:
        print("Phi_%d(X^%d) = %s" % (args.n, args.m, intpoly.poly_str(poly)))
    return 0


def _cmd_ramanujan(args) -> int:
    _check_format(args.format)
    if not 1 <= args.n <= arith.MAX_INDEX:
        raise _UsageError("--n must be in [1, 2**63 - 1]")
    if args.q < 0:
        raise _UsageError("--q must be >= 0")
    if args.method == "newton":
        _check_cli_n(args.n, "--n")  # this method builds Phi_n
    value = arith.ramanujan_sum(args.n, args.q, args.method)
    if args.format == "json":
        print(
            _dump({"n": args.n, "q": args.q, "method": args.method, "value": value})
        )
    else:
        print("c_%d(%d) = %d" % (args.n, args.q, value))
    return 0


def _run_suites(max_n: int, max_q: int, suite: str) -> list:
    results = []
    if suite in ("poly", "all"):
        results.append(verify.sweep_polynomial(max_n))
    if suite in ("totient", "all"):
        results.append(verify.sweep_totient(max_n))
    if suite in ("ramanujan", "all"):
        results.append(verify.sweep_ramanujan(max_n, max_q))
    if suite in ("coeff", "all"):
        results.append(verify.sweep_coefficients(max_n))
    return results


def _cmd_verify(args) -> int:
    _check_cli_n(args.max_n, "--max-n")
    _check_format(args.format)
    if args.max_q < 0:
        raise _UsageError("--max-q must be >= 0")
    results = _run_suites(args.max_n, args.max_q, args.suite)
    all_passed = all(r.passed for r in results)
    if args.format == "json":
        print(
            _dump(
                {
                    "max_n": args.max_n,
                    "max_q": args.max_q,
                    "suites": [
                        {
                            "suite": r.suite,
                            "checks": r.checks,
                            "failures": [
                                {
                                    "identity": f.identity_name,
                                    "params": {k: v for k, v in f.params},
                                    "witness": f.witness,
                                }
                                for f in r.failures
                            ],
                        }
                        for r in results
                    ],
                    "passed": all_passed,
                }
            )
        )
    else:
        for r in results:
            print(
                "suite %-9s %d checks, %d failures" % (r.suite, r.checks, len(r.failures))
            )
            for f in r.failures:
                point = ", ".join("%s=%d" % (k, v) for k, v in f.params)
                print("  FAIL %s at %s: %s" % (f.identity_name, point, f.witness))
        print("all checks passed" if all_passed else "some checks failed")
    return 0 if all_passed else 1


def _cmd_bench(args) -> int:
    _check_cli_n(args.max_n, "--max-n")
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    if not algorithms:
        raise _UsageError("--algorithms must name at least one algorithm")
    for a in algorithms:
        if a not in cyclo.ALGORITHMS:
            raise _UsageError(
                "unknown algorithm %r; expected one of %s" % (a, ", ".join(cyclo.ALGORITHMS))
            )
    lines = ["n,algorithm,micros,degree,height"]
    for n in range(1, args.max_n + 1):
        for a in algorithms:
            start = time.perf_counter_ns()
            result = cyclo.cyclotomic(n, a)
            micros = (time.perf_counter_ns() - start) // 1000
            lines.append(
                "%d,%s,%d,%d,%s"
                % (n, a, micros, len(result.poly) - 1, intpoly.poly_height(result.poly))
            )
    _write_out(args.out, "\n".join(lines) + "\n")
    print("wrote %d rows to %s" % (len(lines) - 1, args.out), file=sys.stderr)
    return 0


def _cmd_table(args) -> int:
    _check_cli_n(args.max_n, "--max-n")
    rows = []
    for n in range(1, args.max_n + 1):
        poly = cyclo.cyclotomic_poly(n)
        rows.append(
            {"n": n, "degree": len(poly) - 1, "coefficients": _coeff_strings(poly)}
        )
    _write_out(args.out, _dump(rows) + "\n")
    print("wrote %d rows to %s" % (len(rows), args.out), file=sys.stderr)
    return 0


def _write_out(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclotomy",
        description="Exact cyclotomic polynomials, Ramanujan sums, and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print Phi_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algorithm", choices=cyclo.ALGORITHMS, default="recursive")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("compose", help="print Phi_n(X^m) via the coprime product identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("ramanujan", help="print the Ramanujan sum c_n(q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--method", choices=arith.RAMANUJAN_METHODS, default="kluyver")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=_cmd_ramanujan)

    p = sub.add_parser("verify", help="run identity sweeps; exit 1 on any failure")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-q", type=int, default=50)
    p.add_argument("--suite", choices=_SUITES, default="all")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time algorithms per n and write a CSV")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--algorithms", required=True, help="comma-separated algorithm names")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("table", help="emit all Phi_n coefficient rows as JSON")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out", required=True, help="output JSON path")
    p.set_defaults(func=_cmd_table)

    return parser


def run_cli(argv: list) -> int:
    """Parse ``argv`` and run the selected command, returning the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
