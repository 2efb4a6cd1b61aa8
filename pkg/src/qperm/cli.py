"""Command-line frontend: compute, cross-verify, scan, and emit reports.

Exit codes are disjoint and stable:

    0  success
    1  verification failure (a cross-check found a mismatch)
    2  usage or I/O error
    3  conjecture counterexample found (a result, not an error)

There is no configuration file; all behavior is driven by flags.  The only
persistent output is the scan report.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import descent, peak, permtools, properties
from .polynomial import IntPolynomial
from .qcore import q_factorial
from .permtools import EnumerationCapError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3

FORMATS = ("text", "json", "latex")


class UsageError(ValueError):
    """A bad flag value; reported on stderr with exit code 2."""


def parse_set_spec(spec: str) -> tuple[int, ...]:
    """Parse a comma-separated set spec; the empty string is the empty set.

    Values must be positive integers in strictly increasing order.  No
    silent sorting: '4,2' is rejected so a typo fails loudly.
    """
    spec = spec.strip()
    if not spec:
        return ()
    try:
        values = tuple(int(tok) for tok in spec.split(","))
    except ValueError:
        raise UsageError(f"set spec {spec!r} is not comma-separated integers") from None
    try:
        return permtools.validate_position_set(values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def render_polynomial(f: IntPolynomial, fmt: str) -> str:
    if fmt == "text":
        return f.to_text()
    if fmt == "latex":
        return f.to_latex()
    if fmt == "json":
        return json.dumps(f.to_json_dict())
    raise UsageError(f"unknown format {fmt!r}")


# ----------------------------------------------------------------- descent


def run_descent(args) -> int:
    S = parse_set_spec(args.set)
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    gf = descent.descent_gf_a(S, args.n) if args.basis == "a" else descent.descent_gf_b(S, args.n)
    print(render_polynomial(gf, args.format))
    if args.coeffs:
        if not S:
            print("(no coefficient table: D for the empty set is the constant 1)")
            return EXIT_OK
        table = (
            descent.a_coefficients_from_b(S) if args.basis == "a" else descent.b_coefficients(S)
        )
        for k, poly in enumerate(table.coeffs):
            print(f"{table.basis}_{k} = {render_polynomial(poly, args.format)}")
    return EXIT_OK


# -------------------------------------------------------------------- peak


def run_peak(args) -> int:
    S = parse_set_spec(args.set)
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    n = args.n
    if args.method == "brute":
        gf = permtools.brute_peak_gf(S, n, cap=args.cap)
    else:
        fn = {
            "compatible": peak.peak_gf_compatible,
            "recurrence": peak.peak_gf_recurrence,
            "pie": peak.peak_gf_pie,
        }[args.method]
        gf = fn(S, n)
    if S and not peak.is_admissible(S, n):
        print(
            f"warning: {{{args.set}}} cannot be a peak set for n={n}; "
            f"the generating function is 0",
            file=sys.stderr,
        )
    print(render_polynomial(gf, args.format))
    return EXIT_OK


# ------------------------------------------------------------------ verify


def _all_position_subsets(n: int):
    import itertools

    for r in range(0, n):
        yield from itertools.combinations(range(1, n), r)


def _admissible_sets(n: int):
    return peak.admissible_supersets((), n)


def verify_descent(max_n: int, cap: int | None = None) -> list[str]:
    """Three-way descent check: a-basis == b-basis == enumeration."""
    mismatches = []
    for n in range(1, max_n + 1):
        for S in _all_position_subsets(n):
            brute = permtools.brute_descent_gf(S, n, cap=cap)
            via_a = descent.descent_gf_a(S, n)
            via_b = descent.descent_gf_b(S, n)
            if via_a != brute:
                mismatches.append(f"descent S={S} n={n}: a-basis {via_a} != brute {brute}")
            if via_b != brute:
                mismatches.append(f"descent S={S} n={n}: b-basis {via_b} != brute {brute}")
    return mismatches


def verify_peak(max_n: int, cap: int | None = None) -> list[str]:
    """Four-way peak check plus the superset-sum factorization."""
    mismatches = []
    for n in range(1, max_n + 1):
        for S in _admissible_sets(n):
            brute = permtools.brute_peak_gf(S, n, cap=cap)
            for name, fn in (
                ("compatible", peak.peak_gf_compatible),
                ("recurrence", peak.peak_gf_recurrence),
                ("pie", peak.peak_gf_pie),
            ):
                got = fn(S, n)
                if got != brute:
                    mismatches.append(f"peak S={S} n={n}: {name} {got} != brute {brute}")
            q_sup = peak.q_superset_gf(S, n)
            brute_sup = permtools.brute_superset_peak_gf(S, n, cap=cap)
            if q_sup != brute_sup:
                mismatches.append(f"superset S={S} n={n}: {q_sup} != brute {brute_sup}")
    return mismatches


def verify_identities(max_n: int, cap: int | None = None) -> list[str]:
    """Partition identities: descent classes and peak classes tile S_n."""
    mismatches = []
    for n in range(1, max_n + 1):
        fact = q_factorial(n)
        d_total = IntPolynomial()
        for S in _all_position_subsets(n):
            d_total = d_total + descent.descent_gf_b(S, n)
        if d_total != fact:
            mismatches.append(f"identity n={n}: sum of descent classes {d_total} != {fact}")
        p_total = IntPolynomial()
        for S in _admissible_sets(n):
            p_total = p_total + peak.peak_gf_compatible(S, n)
        if p_total != fact:
            mismatches.append(f"identity n={n}: sum of peak classes {p_total} != {fact}")
    return mismatches


SUITES = {
    "descent": (verify_descent,),
    "peak": (verify_peak,),
    "identities": (verify_identities,),
    "all": (verify_descent, verify_peak, verify_identities),
}


def run_verify(args) -> int:
    cap = args.cap
    limit = permtools.DEFAULT_ENUMERATION_CAP if cap is None else cap
    if args.max_n > limit:
        raise UsageError(
            f"--max-n {args.max_n} exceeds the enumeration cap of {limit}; "
            f"raise --cap explicitly to proceed"
        )
    mismatches: list[str] = []
    for fn in SUITES[args.suite]:
        mismatches.extend(fn(args.max_n, cap))
    checked = ", ".join(fn.__name__ for fn in SUITES[args.suite])
    if mismatches:
        print(f"FAIL: {len(mismatches)} mismatch(es) in [{checked}] up to n={args.max_n}")
        for line in mismatches:
            print(f"  {line}")
        return EXIT_VERIFY_FAILED
    print(f"ok: [{checked}] verified up to n={args.max_n}, no mismatches")
    return EXIT_OK


# -------------------------------------------------------------------- scan


def run_scan(args) -> int:
    if args.max_m < 1:
        raise UsageError(f"--max-m must be >= 1, got {args.max_m}")
    start = time.perf_counter()
    results = properties.scan_conjecture(args.max_m)
    elapsed = time.perf_counter() - start
    report = properties.scan_report_dict(args.max_m, results, elapsed)
    payload = json.dumps(report, indent=2, sort_keys=False) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            raise UsageError(f"cannot write report to {args.out}: {exc}") from None
    else:
        sys.stdout.write(payload)
    n_bad = len(report["counterexamples"])
    print(
        f"scanned {report['sets_checked']} set(s) at max {args.max_m}: "
        f"{n_bad} counterexample(s)",
        file=sys.stderr,
    )
    return EXIT_COUNTEREXAMPLE if n_bad else EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qperm",
        description="Exact q-analogs of descent and peak polynomials of permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_descent = sub.add_parser("descent", help="compute D_S(n, q)")
    p_descent.add_argument("--set", required=True, help="comma-separated positions; '' for the empty set")
    p_descent.add_argument("--n", type=int, required=True)
    p_descent.add_argument("--basis", choices=("a", "b"), default="b")
    p_descent.add_argument("--coeffs", action="store_true", help="also print the basis coefficients")
    p_descent.add_argument("--format", choices=FORMATS, default="text")
    p_descent.set_defaults(handler=run_descent)

    p_peak = sub.add_parser("peak", help="compute P_S(n, q)")
    p_peak.add_argument("--set", required=True, help="comma-separated positions; '' for the empty set")
    p_peak.add_argument("--n", type=int, required=True)
    p_peak.add_argument(
        "--method", choices=("compatible", "recurrence", "pie", "brute"), default="compatible"
    )
    p_peak.add_argument("--cap", type=int, default=None, help="enumeration cap for --method brute")
    p_peak.add_argument("--format", choices=FORMATS, default="text")
    p_peak.set_defaults(handler=run_peak)

    p_verify = sub.add_parser("verify", help="cross-validate formulas against enumeration")
    p_verify.add_argument("--max-n", type=int, required=True)
    p_verify.add_argument("--suite", choices=sorted(SUITES), default="all")
    p_verify.add_argument("--cap", type=int, default=None, help="raise the enumeration cap")
    p_verify.set_defaults(handler=run_verify)

    p_scan = sub.add_parser("scan", help="scan descent sets for log-concavity counterexamples")
    p_scan.add_argument("--max-m", type=int, required=True, help="scan sets whose maximum is this value")
    p_scan.add_argument("--out", default=None, help="path for the JSON report (default: stdout)")
    p_scan.set_defaults(handler=run_scan)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())
