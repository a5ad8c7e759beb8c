"""Segmented sieve of Eratosthenes over 63-bit windows.

Everything else in the package counts or enumerates primes through this
module, so it is kept small and checkable: odd-only segments, base primes
shared across calls, and a deterministic Miller-Rabin test for one-off
queries outside any sieved window.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import Iterator

import numpy as np

from .errors import ConfigError, IntegerOverflowError, RangeTooLargeError

__all__ = [
    "MAX_N",
    "SEGMENT_CAP",
    "SieveSegment",
    "base_primes",
    "count_primes_range",
    "is_prime",
    "iter_prime_blocks",
    "primes_up_to",
    "sieve_range",
]

MAX_N = 2**63 - 1
SEGMENT_CAP = 1 << 26

# odd entries per internal block (16 MiB of flags)
_BLOCK_ODDS = 1 << 24

# windows above PRESIEVE_MAX**2 are sieved by primes <= PRESIEVE_MAX and the
# survivors confirmed by deterministic Miller-Rabin
PRESIEVE_MAX = 1 << 22

# first 12 primes: deterministic Miller-Rabin for n < 3.3e24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_base_lock = threading.RLock()
_base_cache = np.array([2, 3, 5, 7], dtype=np.int64)
_base_cache_limit = 10


def _simple_sieve(n: int) -> np.ndarray:
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def base_primes(limit: int) -> np.ndarray:
    """All primes ``<= limit`` as a read-only int64 array.

    The largest table computed so far is cached and sliced for later
    requests, so a run pays for its base primes once.
    """
    global _base_cache, _base_cache_limit
    if limit < 2:
        return _base_cache[:0]
    with _base_lock:
        if limit > _base_cache_limit:
            table = _simple_sieve(limit)
            table.flags.writeable = False
            _base_cache, _base_cache_limit = table, limit
        cache = _base_cache
    return cache[: np.searchsorted(cache, limit, side="right")]


def _odd_flags(lo: int, hi: int, odd_base: np.ndarray) -> tuple[int, np.ndarray]:
    """Primality of the odd numbers in ``[lo, hi]``.

    Returns ``(first_odd, flags)`` where ``flags[i]`` is the primality of
    ``first_odd + 2*i``. ``odd_base`` must hold every odd prime up to
    ``isqrt(hi)``.
    """
    first = lo | 1
    if first > hi:
        return first, np.zeros(0, dtype=bool)
    count = (hi - first) // 2 + 1
    flags = np.ones(count, dtype=bool)
    if first == 1:
        flags[0] = False
    for p in odd_base.tolist():
        sq = p * p
        if sq > hi:
            break
        start = sq if sq >= first else -(-first // p) * p
        if not start & 1:
            start += p
        flags[(start - first) >> 1 :: p] = False
    return first, flags


def _window_odd_flags(lo: int, hi: int) -> tuple[int, np.ndarray]:
    root = isqrt(hi)
    first, odd = _odd_flags(lo, hi, base_primes(min(root, PRESIEVE_MAX))[1:])
    if root > PRESIEVE_MAX:
        for i in np.flatnonzero(odd).tolist():
            if not is_prime(first + 2 * i):
                odd[i] = False
    return first, odd


def _check_window(lo: int, hi: int) -> None:
    if lo < 0 or lo > hi:
        raise ConfigError(f"invalid window [{lo}, {hi}]")
    if hi > MAX_N:
        raise IntegerOverflowError(f"hi={hi} exceeds the supported maximum 2**63-1")


@dataclass(frozen=True)
class SieveSegment:
    """Primality flags for the closed window ``[lo, hi]``.

    ``flags[i]`` is True iff ``lo + i`` is prime. The array is marked
    read-only, so segments can be shared between threads.
    """

    lo: int
    hi: int
    flags: np.ndarray

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def count(self) -> int:
        return int(np.count_nonzero(self.flags))

    def primes(self) -> np.ndarray:
        return np.flatnonzero(self.flags).astype(np.int64) + self.lo

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi and bool(self.flags[n - self.lo])


def sieve_range(lo: int, hi: int, *, cap: int = SEGMENT_CAP) -> SieveSegment:
    """Sieve the closed window ``[lo, hi]``.

    Raises RangeTooLargeError when the window holds more than ``cap``
    numbers and IntegerOverflowError when ``hi`` exceeds 2**63-1.
    """
    _check_window(lo, hi)
    if hi - lo + 1 > cap:
        raise RangeTooLargeError(f"window of {hi - lo + 1} numbers exceeds cap {cap}")
    first, odd = _window_odd_flags(lo, hi)
    flags = np.zeros(hi - lo + 1, dtype=bool)
    flags[first - lo :: 2] = odd
    if lo <= 2 <= hi:
        flags[2 - lo] = True
    flags.flags.writeable = False
    return SieveSegment(lo, hi, flags)


def _blocks(lo: int, hi: int, block_odds: int) -> list[tuple[int, int]]:
    span = 2 * block_odds
    return [(a, min(a + span - 1, hi)) for a in range(lo, hi + 1, span)]


def count_primes_range(lo: int, hi: int, *, workers: int = 1,
                       block_odds: int = _BLOCK_ODDS) -> int:
    """Number of primes in ``[lo, hi]``, sieving block by block.

    Blocks are independent; with ``workers > 1`` they are sieved on a
    thread pool and the per-block counts summed in block order.
    """
    _check_window(lo, hi)

    def one(block: tuple[int, int]) -> int:
        return int(np.count_nonzero(_window_odd_flags(*block)[1]))

    blocks = _blocks(lo, hi, block_odds)
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(one, blocks))
    else:
        counts = [one(b) for b in blocks]
    return sum(counts) + (1 if lo <= 2 <= hi else 0)


def iter_prime_blocks(hi: int, lo: int = 0, *,
                      block_odds: int = _BLOCK_ODDS) -> Iterator[np.ndarray]:
    """Yield the primes in ``[lo, hi]`` as increasing int64 arrays, one per block."""
    if hi < max(lo, 2):
        return
    _check_window(lo, hi)
    if lo <= 2:
        yield np.array([2], dtype=np.int64)
    for a, b in _blocks(max(lo, 3), hi, block_odds):
        first, odd = _window_odd_flags(a, b)
        yield np.flatnonzero(odd).astype(np.int64) * 2 + first


def primes_up_to(n: int) -> Iterator[int]:
    """Stream every prime ``p <= n`` in increasing order."""
    for block in iter_prime_blocks(n):
        yield from block.tolist()


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``0 <= n <= 2**63-1``."""
    if n < 0 or n > MAX_N:
        raise IntegerOverflowError(f"{n} is outside [0, 2**63-1]")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
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
