"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A sieve or table would exceed the configured size budget.

    Raised when a requested computation needs primes beyond the limit of the
    supplied table, or when an auto-sized sieve would blow past ``max_limit``.
    The caller can retry with a larger table / budget.
    """


class CapacityExceededError(ValueError):
    """Requested prime count exceeds what a small-interval theorem can chain."""


class NotCertifiedError(ValueError):
    """The interval family for this k is not known to eventually contain primes.

    Only k in {1, 2, 3, 5, 9, 14} is certified; for other k the caller must
    supply a proven upper bound explicitly.
    """


class CertificationError(RuntimeError):
    """An exhaustive verification pass found a counterexample.

    This is a loud, non-recoverable failure: it means either a bug or a
    genuine anomaly in a range the certificate claims to cover.
    """
