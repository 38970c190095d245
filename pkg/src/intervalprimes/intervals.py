"""Prime-count thresholds for the interval family (kn, (k+1)n).

interval_threshold(k, m) is the least N such that every open interval
(kn, (k+1)n) with n >= N contains at least m primes. first_prime_free_n(k)
is the least n > 1 whose interval contains no prime at all; for
k in {1, 2, 3, 5, 9, 14} no such n exists and certify_no_gap produces a
bound-plus-exhaustive-check certificate of that fact.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from .errors import CertificationError, NotCertifiedError
from .primes import PrimeTable, build_table, is_prime
from .ramanujan import descent_upper_bound, ramanujan_number
from .ratio import ceil_div

#: k for which every (kn, (k+1)n), n > 1, is known to contain a prime.
CERTIFIED_K = frozenset({1, 2, 3, 5, 9, 14})

#: Default n ceiling for gap scans: 4x the largest value ever observed (16).
DEFAULT_SCAN_N_MAX = 64

# Above this sieve size a scan falls back to per-candidate primality tests.
_SCAN_TABLE_CEILING = 100_000_000


class ThresholdMethod(Enum):
    """Which closed form (if any) confirmed the descent value."""

    K1_CLOSED_FORM = "k1-closed-form"  # k=1, m>=2: (R+1)/2
    K2_CEILING = "k2-ceiling"          # k=2, m>=2: ceil(R/3)
    RESIDUE_ONE = "residue-one"        # R = 1 mod (k+1): (R+k)/(k+1)
    RESIDUE_TWO = "residue-two"        # R = 2 mod (k+1): (R+k-1)/(k+1)
    DESCENT = "descent"


@dataclass(frozen=True)
class ThresholdResult:
    k: int
    m: int
    value: int
    method: ThresholdMethod

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "m": self.m, "value": self.value, "method": self.method.value}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ThresholdResult":
        return cls(k=d["k"], m=d["m"], value=d["value"], method=ThresholdMethod(d["method"]))


@dataclass(frozen=True)
class GapReport:
    """Per-k outcome of a prime-free-interval search.

    Exactly one of three states:
      * gap_n set: the least n > 1 with (kn, (k+1)n) prime-free.
      * certified_zero: no such n exists; `bound` is a proven threshold above
        which intervals always contain a prime and every smaller n was
        checked exhaustively (through checked_up_to).
      * anomaly: the scan exhausted scan_limit without finding a gap for a k
        that carries no certificate -- never silently treated as certified.
    """

    k: int
    scan_limit: int
    gap_n: int | None = None
    certified_zero: bool = False
    bound: int | None = None
    checked_up_to: int | None = None
    anomaly: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "scan_limit": self.scan_limit,
            "gap_n": self.gap_n,
            "certified_zero": self.certified_zero,
            "bound": self.bound,
            "checked_up_to": self.checked_up_to,
            "anomaly": self.anomaly,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "GapReport":
        return cls(**d)

    @property
    def a_value(self) -> int:
        """The gap statistic: least prime-free n, or 0 when certified absent."""
        if self.certified_zero:
            return 0
        if self.gap_n is None:
            raise ValueError(f"k={self.k}: no gap found and no certificate (anomaly)")
        return self.gap_n


def _interval_count(
    k: int, n: int, table: PrimeTable | None, closed: bool = False
) -> int:
    lo, hi = k * n, (k + 1) * n
    if table is not None and hi <= table.limit:
        return table.count_closed(lo, hi) if closed else table.count_open(lo, hi)
    if closed:
        return sum(1 for x in range(lo, hi + 1) if is_prime(x))
    return sum(1 for x in range(lo + 1, hi) if is_prime(x))


def interval_threshold_bound(k: int, m: int, table: PrimeTable | None = None) -> int:
    """ceil(R_{(k+1)/k}(m) / (k+1)): a proven upper bound for the threshold."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m} (the bound needs the exact R value)")
    r = ramanujan_number(Fraction(k + 1, k), m, table)
    return ceil_div(r, k + 1)


def interval_threshold(
    k: int,
    m: int,
    table: PrimeTable | None = None,
    *,
    r_bound: int | None = None,
    closed_endpoints: bool = False,
) -> ThresholdResult:
    """Exact least N such that (kn, (k+1)n) holds >= m primes for all n >= N.

    Computed by descent below ceil(R/(k+1)) where R is the exact generalized
    Ramanujan number for v = (k+1)/k; the applicable closed form is evaluated
    as well and must agree (a mismatch would mean a bug and raises).

    For k outside the certified set a caller-supplied ``r_bound`` (any proven
    upper bound on R) is required. With ``closed_endpoints`` the intervals
    are [kn, (k+1)n] and the scan starts at n = 1.
    """
    if k < 1 or m < 1:
        raise ValueError(f"need k >= 1 and m >= 1, got k={k}, m={m}")
    if k not in CERTIFIED_K and r_bound is None:
        raise NotCertifiedError(
            f"k={k} carries no certificate that (kn,(k+1)n) eventually holds "
            f"{m} prime(s); pass r_bound= with a proven bound to proceed"
        )
    v = Fraction(k + 1, k)
    if r_bound is None:
        bound = descent_upper_bound(v, m)
        table = table if table is not None and table.limit >= bound else build_table(bound)
        r = ramanujan_number(v, m, table)
        n_top = ceil_div(r, k + 1)
    else:
        r = None
        n_top = ceil_div(r_bound, k + 1)
        need = (k + 1) * max(n_top - 1, 2)
        table = table if table is not None and table.limit >= need else build_table(max(need, 4))

    n_start = 1 if closed_endpoints else 2
    last_deficient = n_start - 1
    for n in range(n_start, n_top):
        if _interval_count(k, n, table, closed_endpoints) < m:
            last_deficient = n
    value = max(last_deficient + 1, n_start)

    method = ThresholdMethod.DESCENT
    if not closed_endpoints and r is not None and m >= 2:
        closed_form: int | None = None
        if k == 1:
            method, closed_form = ThresholdMethod.K1_CLOSED_FORM, (r + 1) // 2
        elif k == 2:
            method, closed_form = ThresholdMethod.K2_CEILING, ceil_div(r, 3)
        elif r % (k + 1) == 1:
            method, closed_form = ThresholdMethod.RESIDUE_ONE, (r + k) // (k + 1)
        elif r % (k + 1) == 2:
            method, closed_form = ThresholdMethod.RESIDUE_TWO, (r + k - 1) // (k + 1)
        if closed_form is not None and closed_form != value:
            raise CertificationError(
                f"closed form {method.value} gives N_{k}({m})={closed_form} but "
                f"descent found {value}"
            )
    return ThresholdResult(k=k, m=m, value=value, method=method)


def interval_threshold_sequence(
    k: int,
    m_max: int,
    table: PrimeTable | None = None,
    *,
    closed_endpoints: bool = False,
) -> list[int]:
    """First m_max threshold values for this k (nondecreasing in m)."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    if k in CERTIFIED_K:
        bound = descent_upper_bound(Fraction(k + 1, k), m_max)
        if table is None or table.limit < bound:
            table = build_table(bound)
    return [
        interval_threshold(k, m, table, closed_endpoints=closed_endpoints).value
        for m in range(1, m_max + 1)
    ]


def first_prime_free_n(
    k: int, n_max: int = DEFAULT_SCAN_N_MAX, table: PrimeTable | None = None
) -> int | None:
    """Least n in [2, n_max] with no prime in (kn, (k+1)n), or None."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    for n in range(2, n_max + 1):
        if _interval_count(k, n, table) == 0:
            return n
    return None


def certify_no_gap(k: int, table: PrimeTable | None = None) -> GapReport:
    """Certificate that every (kn, (k+1)n) with n > 1 contains a prime.

    Mechanism: B = descent_upper_bound((k+1)/k, 1) guarantees a prime in
    (kx/(k+1), x] for every x >= B; taking x = (k+1)n (composite for n > 1)
    puts that prime strictly inside (kn, (k+1)n). All smaller n are checked
    exhaustively; a failure there would falsify the certificate and raises.
    """
    if k not in CERTIFIED_K:
        raise NotCertifiedError(f"k={k} is not in the certified set {sorted(CERTIFIED_K)}")
    bound = descent_upper_bound(Fraction(k + 1, k), 1)
    n_top = ceil_div(bound, k + 1)
    if table is None or table.limit < (k + 1) * n_top:
        table = build_table((k + 1) * n_top)
    for n in range(2, n_top):
        if _interval_count(k, n, table) == 0:
            raise CertificationError(
                f"certification failed: ({k}*{n}, {k + 1}*{n}) contains no prime"
            )
    return GapReport(
        k=k,
        scan_limit=n_top - 1,
        certified_zero=True,
        bound=bound,
        checked_up_to=n_top - 1,
    )


def _scan_one(k: int, n_max: int, table: PrimeTable | None) -> GapReport:
    if k in CERTIFIED_K:
        return certify_no_gap(k, table)
    n = first_prime_free_n(k, n_max, table)
    if n is None:
        return GapReport(k=k, scan_limit=n_max, anomaly=True)
    return GapReport(k=k, scan_limit=n_max, gap_n=n)


_WORKER_TABLE: PrimeTable | None = None


def _init_worker(limit: int | None) -> None:
    global _WORKER_TABLE
    _WORKER_TABLE = build_table(limit) if limit is not None else None


def _scan_chunk(args: tuple[int, int, int]) -> list[dict[str, Any]]:
    lo, hi, n_max = args
    return [_scan_one(k, n_max, _WORKER_TABLE).to_dict() for k in range(lo, hi)]


def scan_gaps(
    k_min: int,
    k_max: int,
    n_max: int = DEFAULT_SCAN_N_MAX,
    *,
    jobs: int = 1,
    table: PrimeTable | None = None,
) -> list[GapReport]:
    """GapReport for every k in [k_min, k_max], in k order.

    Certified k produce certificates; all others are scanned up to n_max.
    The scan is data-parallel over k-chunks when jobs > 1, with results
    merged in k order so output is identical for any job count.
    """
    if k_min < 1 or k_max < k_min:
        raise ValueError(f"need 1 <= k_min <= k_max, got [{k_min}, {k_max}]")
    if n_max < 16:
        raise ValueError(f"n_max must be >= 16, got {n_max}")
    limit = (k_max + 1) * n_max
    shared_limit = limit if limit <= _SCAN_TABLE_CEILING else None

    if jobs <= 1:
        if table is None and shared_limit is not None:
            table = build_table(shared_limit)
        return [_scan_one(k, n_max, table) for k in range(k_min, k_max + 1)]

    chunk = max(1, ceil_div(k_max - k_min + 1, jobs * 4))
    tasks = [
        (lo, min(lo + chunk, k_max + 1), n_max)
        for lo in range(k_min, k_max + 1, chunk)
    ]
    with ProcessPoolExecutor(
        max_workers=jobs, initializer=_init_worker, initargs=(shared_limit,)
    ) as pool:
        out: list[GapReport] = []
        for part in pool.map(_scan_chunk, tasks):
            out.extend(GapReport.from_dict(d) for d in part)
    return out
