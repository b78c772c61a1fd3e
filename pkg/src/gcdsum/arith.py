"""Exact integer primitives: floor square root, divisor counting, divisor sieve.

Everything downstream assumes these are exact.  Python integers never wrap,
so the only overflow concern is the advertised 64-bit magnitude contract on
public arguments and results, enforced here.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

MAX_NATURAL = 2**63 - 1

DEFAULT_SIEVE_CAP = 10**8
SIEVE_CAP_ENV = "GCDSUM_SIEVE_CAP"


def check_natural(n: int, name: str = "n") -> int:
    """Reject anything that is not an int in [0, 2^63 - 1]."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"{name} must be nonnegative, got {n}")
    if n > MAX_NATURAL:
        raise OverflowError(f"{name}={n} exceeds the 2^63 - 1 magnitude contract")
    return n


def isqrt(n: int) -> int:
    """Floor square root: the unique r with r*r <= n < (r+1)*(r+1).

    Integer Newton iteration via math.isqrt; no float is involved, so
    there is no misrounding near 2^52 the way int(n**0.5) suffers.
    """
    check_natural(n)
    return math.isqrt(n)


def tau(n: int) -> int:
    """Number of positive divisors of n, by trial division up to sqrt(n).

    Each d <= sqrt(n) dividing n pairs with n // d; a square root counts once.
    """
    check_natural(n)
    if n == 0:
        raise ValueError("tau(0) is undefined")
    count = 0
    d = 1
    while d * d < n:
        if n % d == 0:
            count += 2
        d += 1
    if d * d == n:
        count += 1
    return count


@dataclass(frozen=True)
class DivisorTable:
    """tau values and their running sums for 1 <= n <= limit.

    tau[n] is the divisor count of n (slot 0 is unused and holds 0);
    prefix[x] = sum of tau[n] for n <= x, so prefix[0] = 0 and
    prefix[x] - prefix[x-1] = tau[x].  Both arrays are int64 and frozen
    read-only after construction, hence safe to share across threads.
    """

    limit: int
    tau: np.ndarray
    prefix: np.ndarray


def sieve_cap() -> int:
    """Sieve entry cap; override with the GCDSUM_SIEVE_CAP env variable."""
    raw = os.environ.get(SIEVE_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_SIEVE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SIEVE_CAP_ENV} must be an integer, got {raw!r}") from None


def sieve_tau(limit: int, cap: int | None = None) -> DivisorTable:
    """Build the divisor table by marking: every d increments all its multiples.

    O(limit log limit) element updates; two int64 arrays of limit + 1 entries
    (the default cap of 10^8 entries keeps that under ~1.6 GB).
    """
    check_natural(limit, "limit")
    if limit < 1:
        raise ValueError("sieve limit must be >= 1")
    if cap is None:
        cap = sieve_cap()
    if limit > cap:
        raise ValueError(
            f"sieve limit {limit} exceeds the cap of {cap} entries "
            f"(override with {SIEVE_CAP_ENV})"
        )
    t = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        t[d::d] += 1
    p = np.cumsum(t)
    t.flags.writeable = False
    p.flags.writeable = False
    return DivisorTable(limit=limit, tau=t, prefix=p)
