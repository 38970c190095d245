"""Batch command-line front end.

Standard output carries exclusively machine-readable data (b-file, CSV, or
JSON); progress and diagnostics go to standard error. Exit codes: 0 success,
1 verification failure or scan anomaly, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import CapacityExceededError, NotCertifiedError, ResourceLimitError
from .intervals import GapReport, interval_threshold_sequence, scan_gaps
from .primes import max_limit_for_budget
from .ramanujan import SequenceKind, sequence
from .residue import (
    CULLINAN_HAJIR,
    RAMARE_SAOUTER,
    ResidueClass,
    SmallIntervalTheorem,
    chaining_capacity,
    interval_threshold_for_class,
    ramanujan_sequence_for_class,
)
from .verify import SUITES

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _parse_ratio(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None
    if v <= 1:
        raise argparse.ArgumentTypeError(f"ratio must be > 1, got {text}")
    return v


def _parse_delta(text: str) -> Fraction:
    try:
        d = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None
    if d <= 0:
        raise argparse.ArgumentTypeError(f"delta must be positive, got {text}")
    return d


def _emit_terms(terms: list[int], fmt: str, label: str) -> None:
    if fmt == "bfile":
        sys.stdout.write("".join(f"{i} {t}\n" for i, t in enumerate(terms, 1)))
    elif fmt == "csv":
        sys.stdout.write("index,value\n")
        sys.stdout.write("".join(f"{i},{t}\n" for i, t in enumerate(terms, 1)))
    else:
        sys.stdout.write(json.dumps({"sequence": label, "terms": terms}) + "\n")


def _emit_gap_reports(reports: list[GapReport], fmt: str) -> int:
    anomalies = [r for r in reports if r.anomaly]
    if fmt == "bfile":
        sys.stdout.write(
            "".join(f"{r.k} {r.a_value}\n" for r in reports if not r.anomaly)
        )
    elif fmt == "csv":
        sys.stdout.write("k,a,certified,bound,checked_up_to,scan_limit,anomaly\n")
        for r in reports:
            a = "" if r.anomaly else r.a_value
            sys.stdout.write(
                f"{r.k},{a},{int(r.certified_zero)},{r.bound or ''},"
                f"{r.checked_up_to or ''},{r.scan_limit},{int(r.anomaly)}\n"
            )
    else:
        sys.stdout.write(json.dumps([r.to_dict() for r in reports]) + "\n")
    for r in anomalies:
        sys.stderr.write(
            f"anomaly: k={r.k} has no prime-free interval up to n={r.scan_limit} "
            f"and no certificate\n"
        )
    return EXIT_VERIFY_FAILED if anomalies else EXIT_OK


def _theorem_arg(
    args: argparse.Namespace, default: SmallIntervalTheorem
) -> SmallIntervalTheorem:
    if args.x0 is not None or args.delta is not None:
        if args.x0 is None or args.delta is None:
            raise argparse.ArgumentTypeError("--x0 and --delta must be given together")
        return SmallIntervalTheorem.from_delta(args.x0, args.delta)
    return default


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervalprimes",
        description="Generalized Ramanujan/Chebyshev numbers and interval prime thresholds",
    )
    parser.add_argument(
        "--max-memory",
        type=int,
        metavar="BYTES",
        default=None,
        help="cap auto-sized sieves to roughly this many bytes of prime storage",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ramanujan", help="Ramanujan or Chebyshev number sequence")
    p.add_argument("--v", type=_parse_ratio, required=True, metavar="P/Q")
    p.add_argument("--count", type=int, required=True, metavar="M")
    p.add_argument("--kind", choices=["ramanujan", "chebyshev"], default="ramanujan")
    p.add_argument("--format", choices=["bfile", "csv", "json"], default="bfile")

    p = sub.add_parser("nk", help="interval prime-count thresholds for one k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count", type=int, required=True, metavar="M")
    p.add_argument("--closed", action="store_true", help="use closed intervals [kn,(k+1)n]")
    p.add_argument("--format", choices=["bfile", "csv", "json"], default="bfile")

    p = sub.add_parser("gaps", help="least prime-free n per k (0 = certified none)")
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n-max", type=int, default=64)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["bfile", "csv", "json"], default="bfile")

    p = sub.add_parser("residue", help="residue-class Ramanujan numbers / thresholds")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--res", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--v", type=_parse_ratio, metavar="P/Q")
    group.add_argument("--k", type=int, help="emit thresholds N_k instead of R values")
    p.add_argument("--count", type=int, required=True, metavar="M")
    p.add_argument("--x0", type=int, default=None)
    p.add_argument("--delta", type=_parse_delta, default=None)
    p.add_argument("--format", choices=["bfile", "csv", "json"], default="bfile")

    p = sub.add_parser("capacity", help="how many primes small-interval chaining certifies")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x0", type=int, default=None)
    p.add_argument("--delta", type=_parse_delta, default=None)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)

    return parser


def _run(args: argparse.Namespace) -> int:
    if args.max_memory is not None:
        # Applies to auto-built tables for the lifetime of this process.
        from . import primes

        primes.DEFAULT_MAX_LIMIT = max_limit_for_budget(args.max_memory)

    if args.command == "ramanujan":
        kind = SequenceKind(args.kind)
        terms = sequence(kind, args.v, args.count)
        _emit_terms(terms, args.format, f"{args.kind}:{args.v}")
        return EXIT_OK

    if args.command == "nk":
        terms = interval_threshold_sequence(
            args.k, args.count, closed_endpoints=args.closed
        )
        _emit_terms(terms, args.format, f"thresholds:k={args.k}")
        return EXIT_OK

    if args.command == "gaps":
        if args.k_max < args.k_min:
            raise argparse.ArgumentTypeError("--k-max must be >= --k-min")
        reports = scan_gaps(args.k_min, args.k_max, args.n_max, jobs=args.jobs)
        return _emit_gap_reports(reports, args.format)

    if args.command == "residue":
        thm = _theorem_arg(args, CULLINAN_HAJIR)
        cls = ResidueClass(args.mod, args.res)
        if args.v is not None:
            terms = ramanujan_sequence_for_class(cls, args.v, args.count, thm)
            label = f"class-ramanujan:{cls}:{args.v}"
        else:
            terms = [
                interval_threshold_for_class(cls, args.k, m, thm)
                for m in range(1, args.count + 1)
            ]
            label = f"class-thresholds:{cls}:k={args.k}"
        _emit_terms(terms, args.format, label)
        return EXIT_OK

    if args.command == "capacity":
        thm = _theorem_arg(args, RAMARE_SAOUTER)
        v = Fraction(args.k + 1, args.k)
        sys.stdout.write(f"{chaining_capacity(v, thm)}\n")
        return EXIT_OK

    if args.command == "verify":
        results = SUITES[args.suite]()
        failed = False
        for res in results:
            status = "PASS" if res.passed else "FAIL"
            failed = failed or not res.passed
            sys.stdout.write(f"{status} {res.name} {res.detail}\n".rstrip() + "\n")
        return EXIT_VERIFY_FAILED if failed else EXIT_OK

    raise AssertionError(f"unhandled command {args.command}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except argparse.ArgumentTypeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, NotCertifiedError, CapacityExceededError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
