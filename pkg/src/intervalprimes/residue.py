"""Residue-class prime counting and small-interval chaining.

A theorem of the form "for x >= x0, the interval (x, rho*x] contains a prime
of class P" can be chained: m consecutive ratio-rho steps fit inside
(x/v, x] whenever rho^m < v, giving a computable upper bound B = ceil(x0*v)
for the class analogue of the Ramanujan number. Everything below B is then
settled by exhaustive descent.

The same chaining, applied to all primes, yields interval thresholds
N_k(m) for *any* k (not only the certified six), at the price of scanning
n all the way up to x0/k.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import CapacityExceededError, ResourceLimitError
from .primes import PrimeStream, PrimeTable, build_table, is_prime
from .ratio import as_ratio, ceil_div


@dataclass(frozen=True)
class ResidueClass:
    """Primes p = residue (mod modulus); gcd(residue, modulus) must be 1."""

    modulus: int
    residue: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} not in [0, {self.modulus})")
        if math.gcd(self.residue, self.modulus) != 1:
            raise ValueError(
                f"gcd({self.residue}, {self.modulus}) != 1: the class holds at "
                f"most one prime"
            )

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"

    def contains(self, n: int) -> bool:
        return n % self.modulus == self.residue


@dataclass(frozen=True)
class SmallIntervalTheorem:
    """For x >= x0, the interval (x, ratio*x] contains a (class-)prime.

    The ratio 1 + 1/delta is stored as an exact Fraction so capacity and
    chaining arithmetic never round.
    """

    x0: int
    ratio: Fraction

    def __post_init__(self) -> None:
        if self.x0 < 2:
            raise ValueError(f"x0 must be >= 2, got {self.x0}")
        if not self.ratio > 1:
            raise ValueError(f"ratio must be > 1, got {self.ratio}")

    @classmethod
    def from_delta(cls, x0: int, delta: int | str | Fraction) -> "SmallIntervalTheorem":
        d = Fraction(delta)
        if d <= 0:
            raise ValueError(f"delta must be positive, got {d}")
        return cls(x0=x0, ratio=1 + 1 / d)

    @property
    def delta(self) -> Fraction:
        return 1 / (self.ratio - 1)


#: All primes: interval (x, (1 + 1/28313999)x) contains a prime for
#: x > 10726905419 (stored with the inclusive threshold).
RAMARE_SAOUTER = SmallIntervalTheorem(x0=10726905420, ratio=Fraction(28314000, 28313999))

#: Primes p = 1 (mod 3): interval (x, 1.048x) contains one for x >= 106706.
CULLINAN_HAJIR = SmallIntervalTheorem(x0=106706, ratio=Fraction(131, 125))


def class_prime_count(table: PrimeTable, cls: ResidueClass, x: int) -> int:
    """Number of primes p <= x with p in the residue class."""
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    if x > table.limit:
        raise ValueError(f"x={x} beyond table limit {table.limit}")
    idx = bisect_right(table.primes, x)
    head = table.primes_np[:idx]
    return int(np.count_nonzero(head % cls.modulus == cls.residue))


def _pow_lt(rho: Fraction, m: int, v: Fraction) -> bool:
    """Certified check of rho**m < v."""
    if m <= 0:
        return 1 < v
    # Exact when the powers stay modest; otherwise certified interval
    # arithmetic with escalating precision, falling back to exact.
    if m * rho.numerator.bit_length() <= 1 << 17:
        return rho**m < v
    from mpmath import iv

    saved = iv.prec
    try:
        for prec in (80, 160, 320, 640):
            iv.prec = prec
            diff = m * (iv.log(rho.numerator) - iv.log(rho.denominator)) - (
                iv.log(v.numerator) - iv.log(v.denominator)
            )
            if diff.b < 0:  # upper endpoint negative: certainly rho**m < v
                return True
            if diff.a > 0:  # lower endpoint positive: certainly rho**m > v
                return False
    finally:
        iv.prec = saved
    return rho**m < v  # interval stayed ambiguous: decide exactly


def chaining_capacity(v: int | str | Fraction, thm: SmallIntervalTheorem) -> int:
    """Largest m with thm.ratio**m < v: how many primes chaining can certify.

    Seeded with float logs, then settled by exact (or certified-interval)
    comparisons at the boundary so rounding can never shift the answer.
    """
    v = as_ratio(v)
    rho = thm.ratio
    if rho >= v:
        return 0
    est = int(math.log(float(v)) / math.log1p(float(rho - 1)))
    m = max(est - 2, 0)
    while _pow_lt(rho, m + 1, v):
        m += 1
    while m > 0 and not _pow_lt(rho, m, v):
        m -= 1
    return m


def _class_deficits(
    cls: ResidueClass, v: Fraction, m_max: int, bound: int, table: PrimeTable
) -> list[int]:
    """last_fail[m-1] = max x in [1, bound) with pi_P(x) - pi_P(x/v) < m."""
    num, den = v.numerator, v.denominator
    q, r = cls.modulus, cls.residue
    primes = table.primes
    n_primes = len(primes)
    hi_idx = lo_idx = 0
    hi_count = lo_count = 0
    last_at = [0] * m_max
    for x in range(1, bound):
        while hi_idx < n_primes and primes[hi_idx] <= x:
            if primes[hi_idx] % q == r:
                hi_count += 1
            hi_idx += 1
        t = x * den // num
        while lo_idx < n_primes and primes[lo_idx] <= t:
            if primes[lo_idx] % q == r:
                lo_count += 1
            lo_idx += 1
        f = hi_count - lo_count
        if f < m_max:
            last_at[f] = x
    out = []
    running = 0
    for j in range(m_max):
        running = max(running, last_at[j])
        out.append(running)
    return out


def _chaining_bound(v: Fraction, thm: SmallIntervalTheorem) -> int:
    # For integer x >= ceil(x0*v): x/v >= x0, so m ratio-steps from x/v stay
    # inside (x/v, x] whenever ratio^m < v, each contributing one class prime.
    return ceil_div(thm.x0 * v.numerator, v.denominator)


def ramanujan_sequence_for_class(
    cls: ResidueClass,
    v: int | str | Fraction,
    m_max: int,
    thm: SmallIntervalTheorem,
    table: PrimeTable | None = None,
) -> list[int]:
    """First m_max class-restricted Ramanujan numbers for ratio v.

    Term m is the smallest X such that every integer x >= X has at least m
    class primes in (x/v, x]. Only valid for m_max within the chaining
    capacity of the backing theorem.
    """
    v = as_ratio(v)
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    cap = chaining_capacity(v, thm)
    if m_max > cap:
        raise CapacityExceededError(
            f"m={m_max} exceeds chaining capacity {cap} for v={v} with this theorem"
        )
    bound = _chaining_bound(v, thm)
    if table is None:
        table = build_table(bound)
    elif table.limit < bound:
        raise ResourceLimitError(f"need table limit >= {bound}, have {table.limit}")
    deficits = _class_deficits(cls, v, m_max, bound, table)
    values = [max(2, d + 1) for d in deficits]
    for val in values:
        assert is_prime(val) and cls.contains(val), (
            f"class Ramanujan value {val} is not a {cls} prime (internal bug)"
        )
    return values


def ramanujan_number_for_class(
    cls: ResidueClass,
    v: int | str | Fraction,
    m: int,
    thm: SmallIntervalTheorem,
    table: PrimeTable | None = None,
) -> int:
    """m-th class-restricted Ramanujan number (see ramanujan_sequence_for_class)."""
    return ramanujan_sequence_for_class(cls, v, m, thm, table)[-1]


def interval_threshold_for_class(
    cls: ResidueClass,
    k: int,
    m: int,
    thm: SmallIntervalTheorem,
    table: PrimeTable | None = None,
) -> int:
    """Least N such that (kn, (k+1)n) holds >= m class primes for all n >= N.

    Descent below ceil(R/(k+1)) with R the exact class Ramanujan number for
    v = (k+1)/k; the k=1 and k=2 closed forms and the residue-1/2 closed
    forms are cross-checked when they apply.
    """
    if k < 1 or m < 1:
        raise ValueError(f"need k >= 1 and m >= 1, got k={k}, m={m}")
    v = Fraction(k + 1, k)
    bound = _chaining_bound(v, thm)
    if table is None:
        table = build_table(bound)
    r = ramanujan_number_for_class(cls, v, m, thm, table)
    n_top = ceil_div(r, k + 1)
    q, res = cls.modulus, cls.residue
    last_deficient = 1
    for n in range(2, n_top):
        lo, hi = k * n, (k + 1) * n
        i = bisect_right(table.primes, lo)
        j = bisect_right(table.primes, hi - 1)
        count = int(np.count_nonzero(table.primes_np[i:j] % q == res))
        if count < m:
            last_deficient = n
    value = last_deficient + 1

    closed_form: int | None = None
    if k == 1:
        closed_form = (r + 1) // 2 if r % 2 == 1 else None
    elif k == 2:
        closed_form = ceil_div(r, 3)
    elif r % (k + 1) == 1:
        closed_form = (r + k) // (k + 1)
    elif r % (k + 1) == 2:
        closed_form = (r + k - 1) // (k + 1)
    assert closed_form is None or closed_form == value, (
        f"closed form gives {closed_form} for class N_{k}({m}) but descent "
        f"found {value}"
    )
    return value


def chained_subintervals(
    v: Fraction, thm: SmallIntervalTheorem, m: int
) -> Iterator[tuple[Fraction, Fraction]]:
    """The m exact sub-intervals (y_{i}, y_{i+1}] chained from y_0 = B/v.

    Exposed for verification: each lies in (B/v, B], starts at >= x0, and
    consecutive intervals share only endpoints (so they are disjoint).
    """
    b = Fraction(_chaining_bound(v, thm))
    y = b / v
    for _ in range(m):
        y_next = y * thm.ratio
        yield (y, y_next)
        y = y_next


def interval_threshold_by_chaining_sequence(
    k: int,
    m_max: int,
    thm: SmallIntervalTheorem,
    *,
    block_size: int = 1 << 19,
) -> list[int]:
    """Thresholds N_k(1..m_max) for unrestricted primes via chaining only.

    Works for ANY k >= 1 (no certificate needed): the theorem guarantees
    >= m primes in (kn, (k+1)n) once n >= x0/k, and every smaller n is
    checked exhaustively with a pair of streaming prime counters. Exact, but
    the scan length is x0/k, so theorems with large x0 take a while.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    cap = chaining_capacity(Fraction(k + 1, k), thm)
    if m_max > cap:
        raise CapacityExceededError(
            f"m={m_max} exceeds chaining capacity {cap} for k={k} with this theorem"
        )
    n_start = ceil_div(thm.x0, k)
    lo_stream = PrimeStream()
    hi_stream = PrimeStream()
    last_deficient = [1] * m_max
    for n0 in range(2, n_start, block_size):
        ns = np.arange(n0, min(n0 + block_size, n_start), dtype=np.int64)
        counts = hi_stream.count(ns * (k + 1) - 1) - lo_stream.count(ns * k)
        for m in range(1, m_max + 1):
            bad = np.flatnonzero(counts < m)
            if bad.size:
                last_deficient[m - 1] = int(ns[bad[-1]])
    return [d + 1 for d in last_deficient]


def interval_threshold_by_chaining(
    k: int,
    m: int,
    thm: SmallIntervalTheorem,
    *,
    block_size: int = 1 << 19,
) -> int:
    """Threshold N_k(m) via chaining (see the sequence variant)."""
    return interval_threshold_by_chaining_sequence(k, m, thm, block_size=block_size)[-1]
