"""Reciprocal-prime sums and the normalized statistic sum / log log L.

Sums run over primes strictly below the cutoff. Each sieve block is summed
with ``math.fsum`` (correctly rounded) and the block partials are combined
with ``fsum`` again, so the result is independent of block layout up to a
few ulps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConfigError, LimitExceededError
from .prime_count import SIEVE_LIMIT
from .sieve import iter_prime_blocks

__all__ = [
    "MertensSample",
    "fbar",
    "mertens_residual_curve",
    "reciprocal_prime_sum",
]


@dataclass(frozen=True)
class MertensSample:
    lam: int
    sum: float
    loglog: float
    fbar: float
    residual: float

    @classmethod
    def from_sum(cls, lam: int, total: float) -> "MertensSample":
        ll = math.log(math.log(lam))
        return cls(lam, total, ll, total / ll, total - ll)


def _check_cutoff(lam: int, limit: int) -> None:
    if lam < 3:
        raise ConfigError(f"cutoff must be >= 3 so that log log is positive, got {lam}")
    if lam - 1 > limit:
        raise LimitExceededError(f"cutoff {lam} exceeds the enumeration limit {limit}")


def reciprocal_prime_sum(lam: int, *, limit: int = SIEVE_LIMIT) -> float:
    """Sum of 1/p over primes p < lam."""
    _check_cutoff(lam, limit)
    partials = [math.fsum(1.0 / block) for block in iter_prime_blocks(lam - 1)]
    return math.fsum(partials)


def fbar(lam: int, *, limit: int = SIEVE_LIMIT) -> MertensSample:
    return MertensSample.from_sum(lam, reciprocal_prime_sum(lam, limit=limit))


def mertens_residual_curve(grid: Sequence[int], *,
                           limit: int = SIEVE_LIMIT) -> list[MertensSample]:
    """One MertensSample per cutoff in ``grid``, from a single sieve pass.

    The grid must be strictly increasing with every cutoff >= 3.
    """
    grid = [int(g) for g in grid]
    if not grid:
        return []
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigError("grid must be strictly increasing")
    for lam in grid:
        _check_cutoff(lam, limit)

    cutoffs = np.asarray(grid, dtype=np.int64)
    partials: list[float] = []
    samples: list[MertensSample] = []
    nxt = 0
    for block in iter_prime_blocks(grid[-1] - 1):
        # positions where each remaining cutoff splits this block (p < lam)
        cuts = np.searchsorted(block, cutoffs[nxt:], side="left")
        start = 0
        for cut in cuts.tolist():
            if cut >= len(block):
                break
            partials.append(math.fsum(1.0 / block[start:cut]))
            samples.append(MertensSample.from_sum(grid[nxt], math.fsum(partials)))
            start = cut
            nxt += 1
        partials.append(math.fsum(1.0 / block[start:]))
    while nxt < len(grid):
        samples.append(MertensSample.from_sum(grid[nxt], math.fsum(partials)))
        nxt += 1
    return samples
