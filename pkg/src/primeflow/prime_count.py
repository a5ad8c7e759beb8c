"""Exact prime counting, by sieve and by a sublinear combinatorial counter.

The two counters share nothing beyond the small base-prime table, so each
serves as the other's oracle wherever their ranges overlap.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import ConfigError, LimitExceededError
from .sieve import MAX_N, base_primes, count_primes_range

__all__ = [
    "FAST_LIMIT",
    "SIEVE_LIMIT",
    "PrimePi",
    "pi_fast",
    "pi_sieve",
    "prime_pi",
]

SIEVE_LIMIT = 2 * 10**9
FAST_LIMIT = 10**11


@dataclass(frozen=True)
class PrimePi:
    n: int
    count: int

    def __int__(self) -> int:
        return self.count


def _check_n(n: int, limit: int, what: str) -> None:
    if n < 0:
        raise ConfigError(f"n must be non-negative, got {n}")
    if n > limit:
        raise LimitExceededError(f"{what}: n={n} exceeds the configured limit {limit}")


def pi_sieve(n: int, *, limit: int = SIEVE_LIMIT, workers: int = 1) -> PrimePi:
    """pi(n) by segmented sieve (exact, linear time)."""
    _check_n(n, limit, "pi_sieve")
    return PrimePi(n, count_primes_range(0, n, workers=workers) if n >= 2 else 0)


def _lucy_count(n: int) -> int:
    # S(v) = #{2 <= m <= v : m has no prime factor < p}, held for every
    # distinct v = n // k. Values <= r live in `small`, values > r in
    # `large[k]` with v = n // k. Removing the multiples of p:
    #   S(v) -= S(v // p) - S(p - 1)   for v >= p*p
    r = isqrt(n)
    kmax = n // (r + 1)
    small = np.arange(-1, r, dtype=np.int64)
    small[0] = 0
    k_all = np.arange(1, kmax + 1, dtype=np.int64)
    large = np.empty(kmax + 1, dtype=np.int64)
    large[0] = 0
    large[1:] = n // k_all - 1

    for p in base_primes(r).tolist():
        sp = small[p - 1]
        p2 = p * p
        kl = min(kmax, n // p2)
        if kl >= 1:
            split = min(kl, kmax // p)
            via_large = large[p : p * split + 1 : p]
            via_small = small[n // (p * k_all[split:kl])]
            large[1 : kl + 1] -= np.concatenate((via_large, via_small)) - sp
        if p2 <= r:
            small[p2:] -= small[np.arange(p2, r + 1) // p] - sp
    return int(large[1]) if kmax >= 1 else int(small[n])


def pi_fast(n: int, *, limit: int = FAST_LIMIT) -> PrimePi:
    """pi(n) in about n**(3/4) operations by the Legendre-style
    floor-quotient recursion (Lucy's method), vectorized over quotients."""
    _check_n(n, min(limit, MAX_N), "pi_fast")
    if n < 2:
        return PrimePi(n, 0)
    return PrimePi(n, _lucy_count(n))


def prime_pi(n: int, *, sieve_limit: int = SIEVE_LIMIT,
             fast_limit: int = FAST_LIMIT) -> PrimePi:
    """pi(n) from whichever exact counter accepts n, preferring the fast one."""
    if n <= fast_limit:
        return pi_fast(n, limit=fast_limit)
    return pi_sieve(n, limit=sieve_limit)
