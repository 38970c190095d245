"""Generalized Ramanujan and Chebyshev numbers by finite descent.

For a rational ratio v > 1:

  ramanujan_number(v, m): smallest R such that every integer x >= R has at
      least m primes in (x/v, x], i.e. pi(x) - pi(floor(x/v)) >= m.
  chebyshev_number(v, m): smallest C such that for every integer x >= C the
      product of primes in (x/v, x] is >= x^m (equivalently, the log-weighted
      prime sum over (x/v, x] is >= m*ln x).

Both are computed exactly: a proven upper bound B comes from explicit
|theta(x) - x| <= a*x/ln^b(x) estimates, and a single forward sweep over
x < B records the last integer where the defining condition fails. The
Chebyshev comparison is done in arbitrary-precision integers (primorial vs
x^m), never in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .errors import ResourceLimitError
from .primes import PrimeTable, build_table, is_prime
from .ratio import as_ratio


class SequenceKind(Enum):
    RAMANUJAN = "ramanujan"
    CHEBYSHEV = "chebyshev"


@dataclass(frozen=True)
class DusartRegime:
    """One row of the piecewise |theta(y) - y| <= a*y/ln^b(y) table.

    Valid for y in (x_lo, x_hi]; x_hi is None for the last row.
    """

    a: float
    b: int
    x_lo: int
    x_hi: int | None


# Smallest x the bound solver will ever return (keeps every ln-power factor
# comfortably positive: ln^4(406) > 1300).
SOLVER_FLOOR = 406

DUSART_REGIMES = (
    DusartRegime(3.965, 2, 25, 70_000_000),
    DusartRegime(1300.0, 4, 70_000_000, 10**9),
    DusartRegime(0.001, 1, 10**9, 8 * 10**9),
    DusartRegime(0.78, 3, 8 * 10**9, 7 * 10**33),
    DusartRegime(1300.0, 4, 7 * 10**33, None),
)


def _regime_at(y: Fraction) -> DusartRegime:
    """The table row whose range (x_lo, x_hi] contains y (y must be > 25)."""
    for regime in DUSART_REGIMES:
        if y > regime.x_lo and (regime.x_hi is None or y <= regime.x_hi):
            return regime
    raise ValueError(f"no theta-bound regime covers {y}")


def _deficiency(x: int, v: Fraction, m: int, rx: DusartRegime, rxv: DusartRegime) -> float:
    """a1/ln^b1(x) + (a2/v)/ln^b2(x/v) + m*ln(x)/x: strictly decreasing in x.

    theta(x) - theta(x/v) >= m*ln(x) is guaranteed once this drops to
    1 - 1/v, using the theta bound rx at x and rxv at x/v. Both bounds are
    applied only inside their validity ranges (the caller picks rx, rxv per
    constant-regime stretch).
    """
    lx = math.log(x)
    lxv = lx - math.log(v)  # ln(x/v), exact to float rounding
    return rx.a / lx**rx.b + (rxv.a / v) / lxv**rxv.b + m * lx / x


def descent_upper_bound(v: int | str | Fraction, m: int) -> int:
    """An integer B with ramanujan_number(v, m) <= chebyshev_number(v, m) <= B.

    Uses explicit bounds on |theta(y) - y| at both y = x and y = x/v. The
    sufficient condition is monotone within each stretch of x where both
    regime rows stay fixed, so one check at the start of every later stretch
    certifies the whole tail beyond the returned B.
    """
    v = as_ratio(v)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    gap = 1 - 1 / v  # Fraction; compare against float deficiency
    gap_f = float(gap)

    # First x where x/v > 25 (so x/v lands inside some regime), >= SOLVER_FLOOR.
    start = max(SOLVER_FLOOR, 25 * v.numerator // v.denominator + 1)
    while Fraction(start) / v <= 25:
        start += 1

    # Stretch boundaries: where regime(x) or regime(x/v) changes.
    cuts = {start}
    for regime in DUSART_REGIMES:
        if regime.x_hi is None:
            continue
        cuts.add(regime.x_hi + 1)  # regime(x) switches
        cuts.add(regime.x_hi * v.numerator // v.denominator + 1)  # regime(x/v) switches
    bounds = sorted(c for c in cuts if c >= start)
    stretches: list[tuple[int, int | None]] = [
        (bounds[i], bounds[i + 1] - 1) for i in range(len(bounds) - 1)
    ]
    stretches.append((bounds[-1], None))

    def ok(x: int, rx: DusartRegime, rxv: DusartRegime) -> bool:
        return _deficiency(x, v, m, rx, rxv) <= gap_f

    best: int | None = None
    suffix_ok = True
    for lo, hi in reversed(stretches):
        rx = _regime_at(Fraction(lo))
        rxv = _regime_at(Fraction(lo) / v)
        if hi is None:
            top = lo
            while not ok(top, rx, rxv):
                top *= 2
            hi_search = top
        else:
            hi_search = hi if ok(hi, rx, rxv) else None
        found: int | None = None
        if hi_search is not None:
            a, b = lo, hi_search
            while a < b:  # smallest admissible x in the stretch (monotone)
                mid = (a + b) // 2
                if ok(mid, rx, rxv):
                    b = mid
                else:
                    a = mid + 1
            found = a if ok(a, rx, rxv) else None
        if found is not None and suffix_ok:
            best = found
        suffix_ok = suffix_ok and ok(lo, rx, rxv)
    assert best is not None, "unreachable: the deficiency vanishes as x grows"
    return best


def _ensure_table(table: PrimeTable | None, limit: int) -> PrimeTable:
    if table is None:
        return build_table(limit)
    if table.limit < limit:
        raise ResourceLimitError(
            f"table limit {table.limit} is below the required bound {limit}"
        )
    return table


def _ramanujan_deficits(
    v: Fraction, m_max: int, bound: int, table: PrimeTable
) -> list[int]:
    """last_fail[m-1] = max integer x in [1, bound) with pi(x) - pi(x/v) < m."""
    num, den = v.numerator, v.denominator
    primes = table.primes
    n_primes = len(primes)
    hi_idx = 0  # primes <= x
    lo_idx = 0  # primes <= floor(x/v)
    last_at = [0] * m_max  # last x with deficit count exactly j
    for x in range(1, bound):
        while hi_idx < n_primes and primes[hi_idx] <= x:
            hi_idx += 1
        q = x * den // num
        while lo_idx < n_primes and primes[lo_idx] <= q:
            lo_idx += 1
        f = hi_idx - lo_idx
        if f < m_max:
            last_at[f] = x
    out = []
    running = 0
    for j in range(m_max):
        running = max(running, last_at[j])
        out.append(running)
    return out


def _exact_power_floor(x: int, window: int, g_est: int) -> int:
    """Exact g = max t >= 0 with x**t <= window, starting from an estimate."""
    g = max(g_est, 0)
    while x**(g + 1) <= window:
        g += 1
    while g > 0 and x**g > window:
        g -= 1
    return g


# Escalate from log-domain comparison to exact integers inside this margin.
_LOG_SAFETY = 1e-6


def _chebyshev_deficits(
    v: Fraction, m_max: int, bound: int, table: PrimeTable
) -> list[int]:
    """last_fail[m-1] = max x in [2, bound) where prod_{x/v<p<=x} p < x^m.

    Maintains the window primorial W incrementally as an exact big integer
    and tracks g(x) = max m with x^m <= W. g is located in the log domain
    (math.log of a big int keeps ~1e-13 relative accuracy) and settled by
    exact integer power comparisons whenever the log estimate comes within
    a safety margin of an integer boundary, so no tie is ever decided in
    floating point.
    """
    num, den = v.numerator, v.denominator
    primes = table.primes
    n_primes = len(primes)
    hi_idx = 0
    lo_idx = 0
    window = 1
    last_at = [0] * m_max
    for x in range(2, bound):
        while hi_idx < n_primes and primes[hi_idx] <= x:
            window *= primes[hi_idx]
            hi_idx += 1
        q = x * den // num
        while lo_idx < n_primes and primes[lo_idx] <= q:
            window //= primes[lo_idx]
            lo_idx += 1
        g_float = math.log(window) / math.log(x)
        g = int(g_float)
        frac = g_float - g
        if frac < _LOG_SAFETY or frac > 1.0 - _LOG_SAFETY:
            g = _exact_power_floor(x, window, g)
        if g < m_max:
            last_at[g] = x
    out = []
    running = 0
    for j in range(m_max):
        running = max(running, last_at[j])
        out.append(running)
    return out


def _descend(
    kind: SequenceKind,
    v: Fraction,
    m_max: int,
    table: PrimeTable | None,
) -> list[int]:
    bound = descent_upper_bound(v, m_max)
    table = _ensure_table(table, bound)
    if kind is SequenceKind.RAMANUJAN:
        deficits = _ramanujan_deficits(v, m_max, bound, table)
    else:
        deficits = _chebyshev_deficits(v, m_max, bound, table)
    values = [max(2, d + 1) for d in deficits]
    for val in values:
        assert is_prime(val), f"{kind.value} value {val} is not prime (internal bug)"
    return values


def ramanujan_number(
    v: int | str | Fraction, m: int, table: PrimeTable | None = None
) -> int:
    """Smallest R with pi(x) - pi(floor(x/v)) >= m for every integer x >= R."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return _descend(SequenceKind.RAMANUJAN, as_ratio(v), m, table)[-1]


def chebyshev_number(
    v: int | str | Fraction, m: int, table: PrimeTable | None = None
) -> int:
    """Smallest C such that the primorial over (x/v, x] is >= x^m for x >= C."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return _descend(SequenceKind.CHEBYSHEV, as_ratio(v), m, table)[-1]


def sequence(
    kind: SequenceKind,
    v: int | str | Fraction,
    m_max: int,
    table: PrimeTable | None = None,
) -> list[int]:
    """First m_max terms of the Ramanujan or Chebyshev sequence for ratio v."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    return _descend(kind, as_ratio(v), m_max, table)


# ---------------------------------------------------------------------------
# Bounds of the form R_{(k+1)/k}(m) <= p_{t*m}

_PRIME_INDEX_FACTOR = {1: 3, 2: 4, 3: 6, 5: 11, 9: 31, 14: 32}


def prime_index_factor(k: int) -> int:
    """The multiplier t such that R_{(k+1)/k}(m) <= p_{t*m} is certified."""
    try:
        return _PRIME_INDEX_FACTOR[k]
    except KeyError:
        raise ValueError(
            f"no certified prime-index bound for k={k}; supported: "
            f"{sorted(_PRIME_INDEX_FACTOR)}"
        ) from None


@dataclass(frozen=True)
class PrimeIndexBoundReport:
    """Outcome of checking R_{(k+1)/k}(m) <= p_{tm} and C_{(k+1)/k}(m-1) <= p_{tm}."""

    k: int
    t: int
    m_max: int
    all_hold: bool
    ramanujan_violations: tuple[int, ...]
    chebyshev_violations: tuple[int, ...]
    analytic_m0: int


def _analytic_m0(k: int, t: int, m_cap: int = 10**7) -> int:
    """Least m >= 2 where the closed-form tail inequality certifies the bound.

    Checks (ln(tm) + ln ln(tm) + 1) / (ln(tm) * (1 - 3.965/ln^2(tm*ln(tm))))
    <= t/(k+1); the left side decreases in m in the scanned range, so the
    first hit is where the analytic certificate takes over from the
    computational check.
    """
    rhs = t / (k + 1)
    for m in range(2, m_cap):
        y = t * m
        ly = math.log(y)
        denom_factor = 1.0 - 3.965 / math.log(y * ly) ** 2
        if denom_factor <= 0:
            continue
        lhs = (ly + math.log(ly) + 1.0) / (ly * denom_factor)
        if lhs <= rhs:
            return m
    raise AssertionError(f"no analytic threshold below {m_cap} for k={k}, t={t}")


def verify_prime_index_bounds(
    k: int, m_max: int, table: PrimeTable | None = None
) -> PrimeIndexBoundReport:
    """Check the certified p_{tm} upper bounds for 1 <= m <= m_max."""
    if m_max < 2:
        raise ValueError(f"m_max must be >= 2, got {m_max}")
    t = prime_index_factor(k)
    v = Fraction(k + 1, k)
    bound = descent_upper_bound(v, m_max)
    n_top = t * m_max
    # p_n < n (ln n + ln ln n) for n >= 6; pad generously for small n
    p_top = int(n_top * (math.log(n_top) + math.log(math.log(n_top)))) + 16
    table = _ensure_table(table, max(bound, p_top))
    r_seq = sequence(SequenceKind.RAMANUJAN, v, m_max, table)
    c_seq = sequence(SequenceKind.CHEBYSHEV, v, m_max - 1, table)
    r_bad = tuple(m for m in range(1, m_max + 1) if r_seq[m - 1] > table.nth_prime(t * m))
    c_bad = tuple(m for m in range(2, m_max + 1) if c_seq[m - 2] > table.nth_prime(t * m))
    return PrimeIndexBoundReport(
        k=k,
        t=t,
        m_max=m_max,
        all_hold=not r_bad and not c_bad,
        ramanujan_violations=r_bad,
        chebyshev_violations=c_bad,
        analytic_m0=_analytic_m0(k, t),
    )


def halved_interval_count_lower_bound_holds(
    table: PrimeTable, x_lo: int = 301, x_hi: int = 10**6
) -> bool:
    """Check pi(x) - pi(floor(x/2)) > (x/6 - 3*sqrt(x)) / ln(x) on (x_lo-1, x_hi].

    The classical explicit lower bound for the prime count of (x/2, x];
    exposed as a predicate only. Vectorized over the whole range.
    """
    if x_hi > table.limit:
        raise ResourceLimitError(f"need table limit >= {x_hi}")
    xs = np.arange(x_lo, x_hi + 1, dtype=np.int64)
    primes = table.primes_np
    counts = np.searchsorted(primes, xs, side="right") - np.searchsorted(
        primes, xs // 2, side="right"
    )
    rhs = (xs / 6.0 - 3.0 * np.sqrt(xs)) / np.log(xs)
    return bool(np.all(counts > rhs))
