"""Verification suites: recompute everything and compare against references.

Each suite returns a list of CheckResult; the CLI renders them one per line
and exits nonzero if any check failed. The same functions back the
acceptance tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import fixtures as fx
from .intervals import CERTIFIED_K, certify_no_gap, interval_threshold, interval_threshold_sequence, scan_gaps
from .primes import build_table
from .ramanujan import SequenceKind, sequence, verify_prime_index_bounds
from .residue import CULLINAN_HAJIR, ResidueClass, interval_threshold_for_class, ramanujan_sequence_for_class


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _compare(name: str, got: list[int], want: tuple[int, ...]) -> CheckResult:
    if list(got) == list(want):
        return CheckResult(name, True, f"{len(want)} terms")
    diffs = [
        f"m={i + 1}: got {g} want {w}"
        for i, (g, w) in enumerate(zip(got, want))
        if g != w
    ]
    return CheckResult(name, False, "; ".join(diffs) or f"length {len(got)} vs {len(want)}")


def run_fixture_suite() -> list[CheckResult]:
    """Recompute every tabulated sequence and diff against the stored terms."""
    results = []
    for name, vstr in fx.SEQUENCE_FAMILIES.items():
        fixture = fx.load_fixture(name)
        kind = SequenceKind.RAMANUJAN if name.startswith("ramanujan") else SequenceKind.CHEBYSHEV
        got = sequence(kind, vstr, len(fixture.terms))
        results.append(_compare(name, got, fixture.terms))
    for name, k in fx.THRESHOLD_FAMILIES.items():
        fixture = fx.load_fixture(name)
        got = interval_threshold_sequence(k, len(fixture.terms))
        results.append(_compare(name, got, fixture.terms))
    for name, (q, r) in fx.CLASS_FAMILIES.items():
        fixture = fx.load_fixture(name)
        cls = ResidueClass(q, r)
        if name.startswith("class_ramanujan"):
            got = ramanujan_sequence_for_class(cls, 2, len(fixture.terms), CULLINAN_HAJIR)
        else:
            got = [
                interval_threshold_for_class(cls, 1, m, CULLINAN_HAJIR)
                for m in range(1, len(fixture.terms) + 1)
            ]
        results.append(_compare(name, got, fixture.terms))
    # closed-endpoint variant: the k=1,2,3,5 threshold sequences begin at 1
    closed_first = [
        interval_threshold(k, 1, closed_endpoints=True).value for k in (1, 2, 3, 5)
    ]
    results.append(
        CheckResult(
            "closed_endpoints_first_terms",
            closed_first == [1, 1, 1, 1],
            f"got {closed_first}",
        )
    )
    return results


def run_prime_index_suite(m_max: int = 100) -> list[CheckResult]:
    """R_{(k+1)/k}(m) <= p_{tm} and C_{(k+1)/k}(m-1) <= p_{tm} for all six k."""
    results = []
    for k in sorted(CERTIFIED_K):
        report = verify_prime_index_bounds(k, m_max)
        detail = f"t={report.t}, m<={m_max}, analytic m0={report.analytic_m0}"
        if not report.all_hold:
            detail += (
                f"; R violations {report.ramanujan_violations}"
                f"; C violations {report.chebyshev_violations}"
            )
        results.append(CheckResult(f"prime_index_bounds_k{k}", report.all_hold, detail))
    return results


def run_gap_suite(k_hi: int = 10**5, jobs: int = 1) -> list[CheckResult]:
    """Gap statistic vs reference for k <= 30, range bound and certificates."""
    results = []
    fixture = fx.load_fixture("gap_values")
    reports = scan_gaps(1, len(fixture.terms), jobs=jobs)
    got = [r.a_value for r in reports]
    results.append(_compare("gap_values", got, fixture.terms))
    for k in sorted(CERTIFIED_K):
        rep = certify_no_gap(k)
        results.append(
            CheckResult(
                f"certified_no_gap_k{k}",
                rep.certified_zero,
                f"bound {rep.bound}, exhaustive n <= {rep.checked_up_to}",
            )
        )
    reports = scan_gaps(15, k_hi, jobs=jobs)
    bad = [r.k for r in reports if r.anomaly or (r.gap_n is not None and not 2 <= r.gap_n <= 16)]
    results.append(
        CheckResult(
            f"gap_range_15_to_{k_hi}",
            not bad,
            f"all a(k) in [2,16], no anomalies" if not bad else f"offending k: {bad[:10]}",
        )
    )
    return results


SUITES = {
    "fixtures": run_fixture_suite,
    "bounds": run_prime_index_suite,
    "gaps": run_gap_suite,
}
