"""Brute-force reference implementations for cross-checking the fast paths.

These deliberately share no code with the sieve machinery: primality is
plain trial division and every count is recomputed from scratch. They are
O(x^1.5)-ish and exist purely so tests have an independent second opinion.
"""

from __future__ import annotations

from fractions import Fraction

from .ratio import as_ratio


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def ramanujan_number(v: int | str | Fraction, m: int, x_max: int) -> int | None:
    """Smallest X with pi(x) - pi(floor(x/v)) >= m for every x in [X, x_max].

    Scans every integer up to x_max with trial-division prime counts. Returns
    None if the condition fails at x_max itself (the tail never stabilized);
    pass x_max comfortably above the expected answer, at least 2x.
    """
    v = as_ratio(v)
    if x_max < 2:
        raise ValueError(f"x_max must be >= 2, got {x_max}")
    num, den = v.numerator, v.denominator
    pi = [0] * (x_max + 1)
    count = 0
    for x in range(1, x_max + 1):
        if trial_is_prime(x):
            count += 1
        pi[x] = count
    last_fail = 0
    for x in range(1, x_max + 1):
        if pi[x] - pi[x * den // num] < m:
            last_fail = x
    if last_fail == x_max:
        return None
    return max(last_fail + 1, 2)


def interval_threshold(k: int, m: int, n_max: int) -> int | None:
    """Smallest N such that (kn, (k+1)n) holds >= m primes for all n in [N, n_max].

    Counts by trial division per interval. Returns None when the property
    fails at n_max (no stable tail inside the scanned range).
    """
    if k < 1 or m < 1:
        raise ValueError(f"need k >= 1 and m >= 1, got k={k}, m={m}")
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    last_fail = 0
    for n in range(2, n_max + 1):
        count = sum(1 for x in range(k * n + 1, (k + 1) * n) if trial_is_prime(x))
        if count < m:
            last_fail = n
    if last_fail == n_max:
        return None
    return max(last_fail + 1, 2)
