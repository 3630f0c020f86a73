"""Command-line front end.

Subcommands compute single values or whole rows, cross-check the four b_n
methods, probe the a(n,k) row shapes, benchmark the methods and kernel
backends, and verify the 1/ln x derivative formula numerically.

Output contract: ``--format frac`` prints human-readable text with exact
fractions; ``--format json`` emits one object per record with the keys
kind, n, k, method, value, decimal (plus kind-specific extras); ``--format
csv`` emits the same values with those six columns.  Exit codes: 0 success,
1 usage or domain error, 2 verification failure.
"""

import argparse
import json
import statistics
import sys
import time
from csv import writer as csv_writer
from dataclasses import dataclass, field

from ._kernels import active_backend, available_backends, use_backend
from .asequence import ASequence, probe_row
from .bernoulli import (
    bernoulli2_ank,
    bernoulli2_nemes,
    bernoulli2_report,
    bernoulli2_theorem,
)
from .calculus import (
    evaluate_expansion,
    finite_difference_check,
    reciprocal_log_derivative_coeffs,
)
from .exact import decimal_string, format_rational, harmonic
from .series import bernoulli2_series
from .stirling import stirling_triangle

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2

METHODS = ("series", "nemes", "theorem", "ank")


class CommandError(Exception):
    """Usage or domain error; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CommandError(message)


@dataclass
class OutputRecord:
    kind: str
    indices: list
    value: object  # fraction/integer string, or list of them for a row
    decimal: str = None
    method: str = None
    row_keys: list = None  # index labels parallel to a list value
    extra: dict = field(default_factory=dict)


def _record_dict(rec):
    d = {
        "kind": rec.kind,
        "n": rec.indices[0] if len(rec.indices) > 0 else None,
        "k": rec.indices[1] if len(rec.indices) > 1 else None,
        "method": rec.method,
        "value": rec.value,
        "decimal": rec.decimal,
    }
    d.update(rec.extra)
    return d


def emit(records, fmt, out=None):
    out = out or sys.stdout
    if fmt == "json":
        json.dump([_record_dict(r) for r in records], out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        w = csv_writer(out, lineterminator="\n")
        w.writerow(["kind", "n", "k", "method", "value", "decimal"])
        for r in records:
            n = r.indices[0] if r.indices else ""
            if isinstance(r.value, list):
                keys = r.row_keys if r.row_keys is not None else range(len(r.value))
                for kk, v in zip(keys, r.value):
                    w.writerow([r.kind, n, kk, r.method or "", v, r.decimal or ""])
            else:
                k = r.indices[1] if len(r.indices) > 1 else ""
                w.writerow([r.kind, n, k, r.method or "", r.value, r.decimal or ""])
    else:
        raise AssertionError("emit() only handles machine formats")


def _maybe_decimal(value, digits):
    return decimal_string(value, digits) if digits is not None else None


# ---------------------------------------------------------------- commands


def cmd_stirling1(args):
    n = args.n
    triangle = stirling_triangle(n)
    if args.k is None:
        row = [str(v) for v in triangle.row(n)]
        rec = OutputRecord("stirling1", [n], row, row_keys=list(range(n + 1)))
        if args.format == "frac":
            print(" ".join(row))
        else:
            emit([rec], args.format)
        return EXIT_OK
    if not 0 <= args.k <= n:
        raise CommandError("k=%d out of range for n=%d (need 0 <= k <= n)" % (args.k, n))
    value = str(triangle.value(n, args.k))
    rec = OutputRecord("stirling1", [n, args.k], value)
    if args.format == "frac":
        print(value)
    else:
        emit([rec], args.format)
    return EXIT_OK


def _bernoulli2_one(n, method):
    if method == "series":
        return bernoulli2_series(n)[n]
    if method == "nemes":
        return bernoulli2_nemes(n, stirling_triangle(n))
    if method == "theorem":
        return bernoulli2_theorem(n, stirling_triangle(n - 1))
    if method == "ank":
        return bernoulli2_ank(n, ASequence.build(n))
    raise AssertionError(method)


def cmd_bernoulli2(args):
    n = args.n
    if n < 0:
        raise CommandError("n must be >= 0")
    if args.method in ("theorem", "ank", "all") and n < 2:
        raise CommandError(
            "method %r is stated for n >= 2 only; use series or nemes for b_0, b_1"
            % args.method
        )
    if args.method == "all":
        values = {m: _bernoulli2_one(n, m) for m in METHODS}
        agree = len(set(values.values())) == 1
        if args.format == "frac":
            print(
                "n=%d %s agree=%s"
                % (
                    n,
                    " ".join("%s=%s" % (m, format_rational(values[m])) for m in METHODS),
                    "yes" if agree else "NO",
                )
            )
        else:
            records = [
                OutputRecord(
                    "bernoulli2",
                    [n],
                    format_rational(values[m]),
                    decimal=_maybe_decimal(values[m], args.digits),
                    method=m,
                    extra={"agree": agree},
                )
                for m in METHODS
            ]
            emit(records, args.format)
        return EXIT_OK if agree else EXIT_VERIFY
    value = _bernoulli2_one(n, args.method)
    dec = _maybe_decimal(value, args.digits)
    if args.format == "frac":
        print(format_rational(value) if dec is None else "%s %s" % (format_rational(value), dec))
    else:
        emit(
            [OutputRecord("bernoulli2", [n], format_rational(value), decimal=dec, method=args.method)],
            args.format,
        )
    return EXIT_OK


def cmd_harmonic(args):
    if args.n < 0:
        raise CommandError("n must be >= 0")
    value = harmonic(args.n)
    dec = _maybe_decimal(value, args.digits)
    if args.format == "frac":
        print(format_rational(value) if dec is None else "%s %s" % (format_rational(value), dec))
    else:
        emit([OutputRecord("harmonic", [args.n], format_rational(value), decimal=dec)], args.format)
    return EXIT_OK


def cmd_ank(args):
    n, k = args.n, args.k
    if n < 1:
        raise CommandError("n must be >= 1")
    if not 2 <= k <= n + 1:
        raise CommandError("k=%d out of range for n=%d (need 2 <= k <= n+1)" % (k, n))
    value = ASequence.build(n).value(n, k)
    if args.format == "frac":
        print(value)
    else:
        emit([OutputRecord("a_nk", [n, k], str(value))], args.format)
    return EXIT_OK


def cmd_crosscheck(args):
    if args.max_n < 2:
        raise CommandError("--max-n must be >= 2")
    reports = bernoulli2_report(args.max_n)
    all_agree = all(r.agree for r in reports)
    summary = (
        "ALL AGREE [2..%d]" % args.max_n
        if all_agree
        else "DISAGREE at n=%s" % ",".join(str(r.n) for r in reports if not r.agree)
    )
    if args.format == "frac":
        for r in reports:
            print(
                "n=%d series=%s nemes=%s theorem=%s ank=%s agree=%s"
                % (
                    r.n,
                    format_rational(r.by_series),
                    format_rational(r.by_nemes),
                    format_rational(r.by_theorem),
                    format_rational(r.by_ank),
                    "yes" if r.agree else "NO",
                )
            )
        print(summary)
    else:
        records = []
        for r in reports:
            for method, value in (
                ("series", r.by_series),
                ("nemes", r.by_nemes),
                ("theorem", r.by_theorem),
                ("ank", r.by_ank),
            ):
                records.append(
                    OutputRecord(
                        "crosscheck",
                        [r.n],
                        format_rational(value),
                        method=method,
                        extra={"agree": r.agree},
                    )
                )
        records.append(OutputRecord("crosscheck", [], summary, method="summary"))
        emit(records, args.format)
    return EXIT_OK if all_agree else EXIT_VERIFY


def cmd_probe(args):
    if args.max_n < 2:
        raise CommandError("--max-n must be >= 2")
    a = ASequence.build(args.max_n)
    reports = []
    previous = None
    for n in range(1, args.max_n + 1):
        previous = probe_row(n, a, previous)
        reports.append(previous)
    unimodal = sum(1 for r in reports if r.is_unimodal)
    increasing = all(r.increasing_in_n_ok for r in reports)
    if args.format == "frac":
        for r in reports:
            print(
                "n=%d row=%s peaks=%s unimodal=%s increasing=%s"
                % (
                    r.n,
                    list(r.row),
                    r.peak_indices,
                    "yes" if r.is_unimodal else "NO",
                    "ok" if r.increasing_in_n_ok else "NO",
                )
            )
        print("unimodal rows: %d/%d" % (unimodal, len(reports)))
        print(
            "increasing_in_n: %s"
            % ("OK" if increasing else "FAIL at n=%s"
               % ",".join(str(r.n) for r in reports if not r.increasing_in_n_ok))
        )
    else:
        records = [
            OutputRecord(
                "probe",
                [r.n],
                [str(v) for v in r.row],
                row_keys=list(range(2, r.n + 2)),
                extra={
                    "peaks": r.peak_indices,
                    "unimodal": r.is_unimodal,
                    "increasing_in_n": r.increasing_in_n_ok,
                },
            )
            for r in reports
        ]
        records.append(
            OutputRecord(
                "probe",
                [],
                "unimodal rows: %d/%d" % (unimodal, len(reports)),
                method="summary",
                extra={"increasing_in_n": increasing},
            )
        )
        emit(records, args.format)
    return EXIT_OK


def _bench_values(method, max_n):
    """Compute b_2..b_max_n by one method, building its tables from scratch."""
    if method == "series":
        return bernoulli2_series(max_n)[2:]
    if method == "nemes":
        triangle = stirling_triangle(max_n)
        return [bernoulli2_nemes(n, triangle) for n in range(2, max_n + 1)]
    if method == "theorem":
        triangle = stirling_triangle(max_n - 1)
        return [bernoulli2_theorem(n, triangle) for n in range(2, max_n + 1)]
    if method == "ank":
        a = ASequence.build(max_n)
        return [bernoulli2_ank(n, a) for n in range(2, max_n + 1)]
    raise AssertionError(method)


def cmd_bench(args):
    if args.max_n < 2:
        raise CommandError("--max-n must be >= 2")
    if args.repeat < 1:
        raise CommandError("--repeat must be >= 1")
    backends = available_backends() if args.backends else (active_backend(),)
    rows = []
    values_by_method = {}
    for backend in backends:
        with use_backend(backend):
            for method in METHODS:
                times = []
                for _ in range(args.repeat):
                    t0 = time.perf_counter()
                    values = _bench_values(method, args.max_n)
                    times.append(time.perf_counter() - t0)
                rows.append((backend, method, statistics.median(times)))
                values_by_method.setdefault(method, values)
    agree = len({tuple(v) for v in values_by_method.values()}) == 1
    if args.format == "csv":
        w = csv_writer(sys.stdout, lineterminator="\n")
        w.writerow(["backend", "method", "max_n", "repeat", "median_s"])
        for backend, method, median in rows:
            w.writerow([backend, method, args.max_n, args.repeat, "%.6f" % median])
    elif args.format == "json":
        emit(
            [
                OutputRecord(
                    "bench",
                    [args.max_n],
                    "%.6f" % median,
                    method=method,
                    extra={"backend": backend, "repeat": args.repeat},
                )
                for backend, method, median in rows
            ],
            "json",
        )
    else:
        print("%-9s %-8s %6s %6s %12s" % ("backend", "method", "max_n", "repeat", "median_s"))
        for backend, method, median in rows:
            print("%-9s %-8s %6d %6d %12.6f" % (backend, method, args.max_n, args.repeat, median))
        print("methods agree: %s" % ("yes" if agree else "NO"))
    return EXIT_OK if agree else EXIT_VERIFY


def cmd_deriv(args):
    n = args.n
    if n < 1:
        raise CommandError("n must be >= 1")
    expansion = reciprocal_log_derivative_coeffs(n, stirling_triangle(n))
    coeff_text = ", ".join("k=%d: %d" % (k, c) for k, c in expansion.coeffs)
    extra = {}
    lines = [coeff_text]
    code = EXIT_OK
    if args.check is not None and args.x is None:
        raise CommandError("--check needs an evaluation point x")
    if args.x is not None:
        value = evaluate_expansion(expansion, args.x)
        lines.append("value at x=%r: %.12g" % (args.x, value))
        extra["x"] = args.x
        extra["value"] = value
    if args.check is not None:
        h, tol = args.check
        result = finite_difference_check(n, args.x, h, tol)
        lines.append(
            "check: residual=%.3e tol=%g %s"
            % (result.residual, tol, "PASS" if result.passed else "FAIL")
        )
        extra["check"] = {
            "h": h,
            "tol": tol,
            "residual": result.residual,
            "passed": result.passed,
        }
        code = EXIT_OK if result.passed else EXIT_VERIFY
    if args.format == "frac":
        for line in lines:
            print(line)
    else:
        emit(
            [
                OutputRecord(
                    "deriv_coeffs",
                    [n],
                    [str(c) for _, c in expansion.coeffs],
                    row_keys=[k for k, _ in expansion.coeffs],
                    extra=extra,
                )
            ],
            args.format,
        )
    return code


# ---------------------------------------------------------------- parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("frac", "json", "csv"),
        default="frac",
        help="output format (default: frac)",
    )
    common.add_argument(
        "--digits",
        type=int,
        metavar="D",
        help="also render rational values as D-digit decimals (round-half-even)",
    )

    parser = _Parser(
        prog="gregory",
        description="Exact Bernoulli numbers of the second kind, Stirling numbers "
        "of the first kind, and friends, cross-checked across independent formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stirling1", parents=[common], help="signed s(n,k) or a whole row")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?")
    p.set_defaults(func=cmd_stirling1)

    p = sub.add_parser("bernoulli2", parents=[common], help="Bernoulli number of the second kind b_n")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=METHODS + ("all",), default="series")
    p.set_defaults(func=cmd_bernoulli2)

    p = sub.add_parser("harmonic", parents=[common], help="harmonic number H(n)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_harmonic)

    p = sub.add_parser("ank", parents=[common], help="auxiliary table value a(n,k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_ank)

    p = sub.add_parser("crosscheck", parents=[common], help="verify all four b_n methods agree")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("probe", parents=[common], help="row-shape probe of the a(n,k) table")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("bench", parents=[common], help="time the four b_n methods")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument(
        "--backends",
        action="store_true",
        help="time every available kernel backend, not just the active one",
    )
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("deriv", parents=[common], help="n-th derivative of 1/ln x")
    p.add_argument("n", type=int)
    p.add_argument("x", type=float, nargs="?")
    p.add_argument(
        "--check",
        nargs=2,
        type=float,
        metavar=("H", "TOL"),
        help="verify against a central finite difference with step H at relative tolerance TOL",
    )
    p.set_defaults(func=cmd_deriv)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CommandError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
