"""Empirical prime density and the two smooth models it is compared with.

Cumulative density ``pi(n)/n`` is the default notion; ``window_density``
gives the local density of primes around a point instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import isqrt

from scipy.special import expi

from .errors import ConfigError
from .prime_count import FAST_LIMIT, SIEVE_LIMIT, prime_pi
from .sieve import count_primes_range

__all__ = [
    "DensitySample",
    "ModelComparison",
    "WindowDensity",
    "compare_models",
    "default_window_width",
    "density_at",
    "li",
    "window_density",
]

_EI_LOG2 = float(expi(math.log(2.0)))


@dataclass(frozen=True)
class DensitySample:
    n: int
    pi: int
    density: float
    inv_density: float
    log_n: float


@dataclass(frozen=True)
class ModelComparison:
    sample: DensitySample
    inv_log: float
    li_over_n: float
    rel_err_invlog: float
    rel_err_li: float


@dataclass(frozen=True)
class WindowDensity:
    center: int
    width: int
    lo: int
    hi: int
    count: int
    density: float

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1


def density_at(n: int, *, sieve_limit: int = SIEVE_LIMIT,
               fast_limit: int = FAST_LIMIT) -> DensitySample:
    if n < 2:
        raise ConfigError(f"density needs n >= 2, got {n}")
    pi = prime_pi(n, sieve_limit=sieve_limit, fast_limit=fast_limit).count
    return DensitySample(n, pi, pi / n, n / pi, math.log(n))


def li(x: float) -> float:
    """Offset logarithmic integral, the integral of 1/log t from 2 to x.

    Evaluated as Ei(log x) - Ei(log 2).
    """
    if not x >= 2:
        raise ConfigError(f"li is defined here for x >= 2, got {x}")
    return float(expi(math.log(x))) - _EI_LOG2


def default_window_width(n: int) -> int:
    return max(10**4, isqrt(n))


def window_density(center: int, width: int | None = None) -> WindowDensity:
    """Prime density in ``[center - width//2, center + width//2]``."""
    if width is None:
        width = default_window_width(center)
    half = width // 2
    if half < 1 or center <= half:
        raise ConfigError(f"invalid window: center={center}, width={width}")
    lo, hi = center - half, center + half
    count = count_primes_range(lo, hi)
    return WindowDensity(center, width, lo, hi, count, count / (hi - lo + 1))


def compare_models(n: int, **limits) -> ModelComparison:
    """Empirical density at n next to 1/log n and li(n)/n.

    No ordering between the two model errors is enforced; which one is
    sharper at a given n is part of what gets reported.
    """
    if n < 3:
        raise ConfigError(f"model comparison needs n >= 3, got {n}")
    s = density_at(n, **limits)
    inv_log = 1.0 / s.log_n
    li_n = li(n) / n
    return ModelComparison(
        s, inv_log, li_n,
        abs(inv_log - s.density) / s.density,
        abs(li_n - s.density) / s.density,
    )
