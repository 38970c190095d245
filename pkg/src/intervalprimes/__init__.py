"""Primes in intervals (kn, (k+1)n): generalized Ramanujan numbers & friends.

Exact, deterministic computation of:

* generalized Ramanujan numbers R(v, m) and Chebyshev numbers C(v, m) for
  rational ratios v > 1, by finite descent from explicit theta-function
  bounds;
* the least N such that every (kn, (k+1)n) with n >= N contains at least m
  primes, with closed-form cross-checks;
* the gap statistic: the least n > 1 whose interval (kn, (k+1)n) is
  prime-free, including no-gap certificates for k in {1, 2, 3, 5, 9, 14};
* residue-class analogues driven by small-interval theorems.
"""

from .errors import (
    CapacityExceededError,
    CertificationError,
    NotCertifiedError,
    ResourceLimitError,
)
from .fixtures import Fixture, load_fixture
from .intervals import (
    CERTIFIED_K,
    GapReport,
    ThresholdMethod,
    ThresholdResult,
    certify_no_gap,
    first_prime_free_n,
    interval_threshold,
    interval_threshold_bound,
    interval_threshold_sequence,
    scan_gaps,
)
from .primes import PrimeStream, PrimeTable, build_table, is_prime
from .ramanujan import (
    DUSART_REGIMES,
    DusartRegime,
    PrimeIndexBoundReport,
    SequenceKind,
    chebyshev_number,
    descent_upper_bound,
    halved_interval_count_lower_bound_holds,
    prime_index_factor,
    ramanujan_number,
    sequence,
    verify_prime_index_bounds,
)
from .ratio import as_ratio
from .residue import (
    CULLINAN_HAJIR,
    RAMARE_SAOUTER,
    ResidueClass,
    SmallIntervalTheorem,
    chaining_capacity,
    class_prime_count,
    interval_threshold_by_chaining,
    interval_threshold_by_chaining_sequence,
    interval_threshold_for_class,
    ramanujan_number_for_class,
    ramanujan_sequence_for_class,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityExceededError",
    "CertificationError",
    "NotCertifiedError",
    "ResourceLimitError",
    "Fixture",
    "load_fixture",
    "CERTIFIED_K",
    "GapReport",
    "ThresholdMethod",
    "ThresholdResult",
    "certify_no_gap",
    "first_prime_free_n",
    "interval_threshold",
    "interval_threshold_bound",
    "interval_threshold_sequence",
    "scan_gaps",
    "PrimeStream",
    "PrimeTable",
    "build_table",
    "is_prime",
    "DUSART_REGIMES",
    "DusartRegime",
    "PrimeIndexBoundReport",
    "SequenceKind",
    "chebyshev_number",
    "descent_upper_bound",
    "halved_interval_count_lower_bound_holds",
    "prime_index_factor",
    "ramanujan_number",
    "sequence",
    "verify_prime_index_bounds",
    "as_ratio",
    "CULLINAN_HAJIR",
    "RAMARE_SAOUTER",
    "ResidueClass",
    "SmallIntervalTheorem",
    "chaining_capacity",
    "class_prime_count",
    "interval_threshold_by_chaining",
    "interval_threshold_by_chaining_sequence",
    "interval_threshold_for_class",
    "ramanujan_number_for_class",
    "ramanujan_sequence_for_class",
    "__version__",
]
