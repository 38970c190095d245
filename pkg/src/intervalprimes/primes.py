"""Exact prime infrastructure: segmented sieve, prime counting, primorials.

Everything here is deterministic and exact. The sieve is segmented so that
scans touching numbers near 8*10^8 (and beyond, via PrimeStream) never need a
monolithic bitmap; ``is_prime`` is a Miller-Rabin test with a fixed witness
set that is proven deterministic far beyond 64-bit inputs.
"""

from __future__ import annotations

import math
from array import array
from bisect import bisect_right

import numpy as np

from .errors import ResourceLimitError

DEFAULT_SEGMENT_SIZE = 1 << 22
DEFAULT_MAX_LIMIT = 1 << 30

# Miller-Rabin with these witnesses is deterministic for n < 3.317e24
# (Sorenson & Webster), which covers every 64-bit integer.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for any non-negative 64-bit integer."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _small_sieve(limit: int) -> np.ndarray:
    """Dense sieve for the base primes (limit is at most ~sqrt of any range)."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def _sieve_segment(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Primes in [lo, hi) given base primes covering sqrt(hi-1).

    Only odd candidates are marked; 2 is patched in when the range covers it.
    """
    if hi <= 2:
        return np.empty(0, dtype=np.int64)
    lo = max(lo, 2)
    first_odd = lo | 1
    n_odd = (hi - first_odd + 1) // 2
    flags = np.ones(n_odd, dtype=bool)
    for p in base[1:]:  # skip 2
        p = int(p)
        if p * p >= hi:
            break
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start % 2 == 0:
            start += p
        if start < hi:
            flags[(start - first_odd) // 2 :: p] = False
    if first_odd == 1:
        flags[0] = False
    primes = first_odd + 2 * np.flatnonzero(flags).astype(np.int64)
    if lo <= 2 < hi:
        primes = np.concatenate((np.array([2], dtype=np.int64), primes))
    return primes


class PrimeTable:
    """Immutable store of all primes up to ``limit`` with O(log) pi queries.

    pi(x) is answered by binary search over the prime array; this trades a
    little query time for not keeping a full cumulative-count array in memory.
    Safe for concurrent reads; nothing is mutated after construction.
    """

    __slots__ = ("limit", "_primes", "_primes_np")

    def __init__(self, limit: int, primes: array) -> None:
        self.limit = limit
        self._primes = primes
        self._primes_np = np.frombuffer(primes, dtype=np.int64)

    @property
    def primes(self) -> array:
        """Ascending array('q') of all primes <= limit."""
        return self._primes

    @property
    def primes_np(self) -> np.ndarray:
        """Read-only int64 view of the prime array (for vectorized callers)."""
        return self._primes_np

    def __len__(self) -> int:
        return len(self._primes)

    def pi(self, x: int) -> int:
        """pi(x): number of primes <= x."""
        if x < 0:
            raise ValueError(f"x must be non-negative, got {x}")
        if x > self.limit:
            raise ValueError(f"pi({x}) out of range: table limit is {self.limit}")
        return bisect_right(self._primes, x)

    def nth_prime(self, n: int) -> int:
        """The n-th prime (1-based). Requires p_n <= limit."""
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        if n > len(self._primes):
            raise ResourceLimitError(
                f"table holds {len(self._primes)} primes, p_{n} not available"
            )
        return int(self._primes[n - 1])

    def count_open(self, lo: int, hi: int) -> int:
        """Number of primes in the open interval (lo, hi)."""
        if not 0 <= lo <= hi:
            raise ValueError(f"need 0 <= lo <= hi, got ({lo}, {hi})")
        if hi > self.limit:
            raise ValueError(f"count_open({lo}, {hi}) beyond table limit {self.limit}")
        if hi <= lo + 1:
            return 0
        return bisect_right(self._primes, hi - 1) - bisect_right(self._primes, lo)

    def count_closed(self, lo: int, hi: int) -> int:
        """Number of primes in the closed interval [lo, hi]."""
        if not 0 <= lo <= hi:
            raise ValueError(f"need 0 <= lo <= hi, got ({lo}, {hi})")
        if hi > self.limit:
            raise ValueError(f"count_closed({lo}, {hi}) beyond table limit {self.limit}")
        return bisect_right(self._primes, hi) - bisect_right(self._primes, lo - 1)

    def primorial_segment(self, lo: int, hi: int) -> int:
        """Exact product of all primes p with lo < p <= hi (empty product = 1)."""
        if not 0 <= lo <= hi:
            raise ValueError(f"need 0 <= lo <= hi, got ({lo}, {hi})")
        if hi > self.limit:
            raise ValueError(f"primorial({lo}, {hi}) beyond table limit {self.limit}")
        i = bisect_right(self._primes, lo)
        j = bisect_right(self._primes, hi)
        # tolist() yields Python ints; int64 math.prod would silently overflow
        return math.prod(self._primes[i:j].tolist(), start=1)


def build_table(
    limit: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    max_limit: int | None = None,
) -> PrimeTable:
    """Sieve all primes up to ``limit`` (inclusive) into a PrimeTable.

    max_limit defaults to the module-level DEFAULT_MAX_LIMIT (read at call
    time so a process-wide budget can be installed before auto-sized builds).
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if max_limit is None:
        max_limit = DEFAULT_MAX_LIMIT
    if limit > max_limit:
        raise ResourceLimitError(
            f"sieve limit {limit} exceeds budget {max_limit}; raise max_limit "
            f"(or --max-memory on the CLI) if this is intentional"
        )
    base = _small_sieve(math.isqrt(limit))
    primes = array("q")
    for lo in range(2, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)
        primes.frombytes(_sieve_segment(lo, hi, base).tobytes())
    return PrimeTable(limit, primes)


def max_limit_for_budget(max_bytes: int) -> int:
    """Largest sieve limit whose prime storage fits in ~max_bytes.

    Uses the overestimate pi(x) <= x / (ln x - 1.2) for x >= 100; 8 bytes per
    stored prime. Only used to translate a CLI memory cap into a limit cap.
    """
    if max_bytes < 1024:
        raise ValueError("budget too small to hold any useful table")
    lo, hi = 100, 1 << 44
    while lo < hi:
        mid = (lo + hi + 1) // 2
        est = 8 * int(mid / (math.log(mid) - 1.2))
        if est <= max_bytes:
            lo = mid
        else:
            hi = mid - 1
    return lo


class PrimeStream:
    """Forward-only prime counter over an unbounded ascending range.

    count(xs) returns pi(x) for an ascending array of query points, sieving
    segments on demand and discarding them once passed. Memory stays bounded
    by one segment regardless of how far the scan runs, so two streams can
    walk the lower and upper edges of a moving interval family in lockstep.
    """

    __slots__ = ("_seg_size", "_seg_primes", "_seg_end", "_count_before", "_base", "_base_limit")

    def __init__(self, *, segment_size: int = DEFAULT_SEGMENT_SIZE) -> None:
        self._seg_size = segment_size
        self._seg_primes = np.empty(0, dtype=np.int64)
        self._seg_end = 2  # pi known for all x < _seg_end
        self._count_before = 0  # pi(start of current segment - 1)
        self._base = np.empty(0, dtype=np.int64)
        self._base_limit = 1

    def _ensure_base(self, up_to: int) -> None:
        if up_to > self._base_limit:
            self._base_limit = max(up_to * 2, 1 << 16)
            self._base = _small_sieve(self._base_limit)

    def _advance(self) -> None:
        lo = self._seg_end
        hi = lo + self._seg_size
        self._ensure_base(math.isqrt(hi - 1))
        self._count_before += len(self._seg_primes)
        self._seg_primes = _sieve_segment(lo, hi, self._base)
        self._seg_end = hi

    def count(self, xs: np.ndarray) -> np.ndarray:
        """pi(x) for each x in ascending int64 array xs (monotone across calls)."""
        out = np.empty(len(xs), dtype=np.int64)
        pos = 0
        while pos < len(xs):
            ready = int(np.searchsorted(xs, self._seg_end, side="left"))
            if ready > pos:
                chunk = xs[pos:ready]
                out[pos:ready] = (
                    np.searchsorted(self._seg_primes, chunk, side="right")
                    + self._count_before
                )
                pos = ready
            else:
                self._advance()
        return out
