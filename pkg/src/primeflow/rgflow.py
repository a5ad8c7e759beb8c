"""Renormalization-group flow of the prime density in t = log N.

The flow is generated by a quadratic vector field V(d) = c*d**2 with
c = -1, which gives the single-power logarithmic decrease

    d(t, d0) = d0 / (1 + t*d0).

The flow map is realized three ways that share no code: the closed form,
the Lie-series exponentiation of V, and fixed-step RK4 integration of
d' = V(d). The remaining functions check the flow's group law and its
consequence 1/d(N1) - 1/d(N2) = log(N1/N2) against measured densities.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Union

import numpy as np

from .density import DensitySample, WindowDensity, window_density
from .errors import BlowUpError, ConfigError, RadiusError, SingularityError

__all__ = [
    "FlowState",
    "NearPoleWarning",
    "PAPER_FIELD",
    "QuadraticVectorField",
    "ScaleCheckRecord",
    "default_steps",
    "flow_closed_form",
    "flow_numeric",
    "flow_series",
    "group_law_residual",
    "predict_density",
    "random_flow_points",
    "random_group_triples",
    "scale_invariance_check",
    "scale_relation_check",
]

NEAR_POLE = 1e-6


class NearPoleWarning(RuntimeWarning):
    """Extrapolation landed close to the pole or outside physical densities."""


@dataclass(frozen=True)
class FlowState:
    t: float
    d: float

    @classmethod
    def at(cls, n: int, density: float) -> "FlowState":
        return cls(math.log(n), density)


@dataclass(frozen=True)
class QuadraticVectorField:
    c: float = -1.0

    def __call__(self, d: float) -> float:
        return self.c * d * d

    evaluate = __call__

    def flow(self, t: float, d0: float) -> float:
        """Exact flow of d' = c*d**2 from d0 over time t."""
        den = 1.0 - self.c * t * d0
        if den <= 0.0:
            raise SingularityError(
                f"flow of c={self.c} from d0={d0} has a pole before t={t}",
                t_star=1.0 / (self.c * d0),
            )
        return d0 / den


PAPER_FIELD = QuadraticVectorField(-1.0)


@dataclass(frozen=True)
class ScaleCheckRecord:
    n1: int
    n2: int
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float


def flow_closed_form(t: float, d0: float) -> float:
    if d0 <= 0:
        raise ConfigError(f"d0 must be positive, got {d0}")
    den = 1.0 + t * d0
    if den <= 0.0:
        raise SingularityError(
            f"t={t} is at or beyond the pole t*={-1.0 / d0}", t_star=-1.0 / d0)
    return d0 / den


def flow_series(t: float, d0: float, order: int,
                field: QuadraticVectorField = PAPER_FIELD) -> float:
    """Partial sum of exp(t * V d/dd) applied to d, through order ``order``.

    For V = c*d**2, (V d/dd)^k d = c**k k! d**(k+1), so the k-th term is
    d0 * (c*t*d0)**k. The terms are accumulated from smallest to largest.
    """
    if d0 <= 0:
        raise ConfigError(f"d0 must be positive, got {d0}")
    if order < 0:
        raise ConfigError(f"order must be >= 0, got {order}")
    ratio = field.c * t * d0
    if abs(ratio) >= 1.0:
        raise RadiusError(f"|c*t*d0| = {abs(ratio)} is outside the series radius 1")
    terms = [d0]
    coeff = 1.0
    for k in range(1, order + 1):
        # V d/dd maps d**k to c*k*d**(k+1); the exponential contributes t**k/k!
        coeff *= field.c * k
        coeff *= t / k
        terms.append(coeff * d0 ** (k + 1))
    return math.fsum(terms)


def default_steps(t: float) -> int:
    return max(1000, math.ceil(1000 * abs(t)))


def flow_numeric(t: float, d0: float, field: QuadraticVectorField = PAPER_FIELD,
                 steps: int | None = None) -> float:
    """Integrate d' = field(d) from 0 to t with classic fixed-step RK4.

    Raises BlowUpError once a step stops resolving the dynamics
    (|h * c * d| >= 1 at any stage), which happens before the pole is
    reached, so no value past the singularity is ever returned.
    """
    if d0 <= 0:
        raise ConfigError(f"d0 must be positive, got {d0}")
    if steps is None:
        steps = default_steps(t)
    if steps < 1:
        raise ConfigError(f"steps must be >= 1, got {steps}")
    if t == 0:
        return d0
    h = t / steps
    c = field.c
    d = d0
    for i in range(steps):
        k1 = c * d * d
        y2 = d + 0.5 * h * k1
        k2 = c * y2 * y2
        y3 = d + 0.5 * h * k2
        k3 = c * y3 * y3
        y4 = d + h * k3
        k4 = c * y4 * y4
        if max(abs(d), abs(y2), abs(y3), abs(y4)) * abs(h * c) >= 1.0:
            raise BlowUpError(
                f"trajectory from d0={d0} blows up near t={i * h}", t_star=i * h)
        d = d + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not math.isfinite(d) or d <= 0.0:
            raise BlowUpError(f"trajectory from d0={d0} left the domain at t={(i + 1) * h}",
                              t_star=(i + 1) * h)
    return d


def group_law_residual(s: float, t: float, x: float) -> float:
    """|d(s+t, x) - d(t, d(s, x))| for the closed-form flow."""
    return abs(flow_closed_form(s + t, x) - flow_closed_form(t, flow_closed_form(s, x)))


def scale_relation_check(s1: DensitySample, s2: DensitySample) -> ScaleCheckRecord:
    """Compare 1/d(N1) - 1/d(N2) with log(N1/N2) for two measured samples."""
    if s1.n == s2.n:
        raise ConfigError("scale relation needs two different scales")
    lhs = s1.inv_density - s2.inv_density
    rhs = s1.log_n - s2.log_n
    err = abs(lhs - rhs)
    return ScaleCheckRecord(s1.n, s2.n, lhs, rhs, err, err / abs(rhs))


Anchor = Union[DensitySample, FlowState]


def _as_state(anchor: Anchor) -> tuple[float, float]:
    if isinstance(anchor, FlowState):
        return anchor.t, anchor.d
    return anchor.log_n, anchor.density


def predict_density(n_target: int, anchor: Anchor) -> float:
    """Carry a measured density to ``n_target`` along the flow.

    Equivalent to ``1 / (1/d_anchor + log(n_target / n_anchor))``, evaluated
    as ``d / (1 + L*d)`` so that zero flow time returns the anchor exactly.
    Raises SingularityError when the denominator is not positive and warns
    with NearPoleWarning when it is below 1e-6 or the result exceeds 1.
    """
    if n_target < 2:
        raise ConfigError(f"target scale must be >= 2, got {n_target}")
    t0, d = _as_state(anchor)
    lapse = math.log(n_target) - t0
    den = 1.0 / d + lapse
    if den <= 0.0:
        raise SingularityError(
            f"extrapolating to n={n_target} crosses the pole", t_star=t0 - 1.0 / d)
    pred = d / (1.0 + lapse * d)
    if den < NEAR_POLE or pred > 1.0:
        warnings.warn(
            f"prediction at n={n_target} is near the pole (denominator {den:.3g}, "
            f"density {pred:.3g})", NearPoleWarning, stacklevel=2)
    return pred


def _naturals_density(center: int, width: int) -> float:
    half = width // 2
    if half < 1 or center <= half:
        raise ConfigError(f"invalid window: center={center}, width={width}")
    lo, hi = center - half, center + half
    return (hi - lo + 1) / (2 * half + 1)


def scale_invariance_check(window_a: tuple[int, int], window_b: tuple[int, int],
                           *, kind: str = "naturals") -> float:
    """Density drift between two (center, width) windows.

    With ``kind="naturals"`` every integer is counted, so the drift is
    exactly 0 under any rescaling. With ``kind="primes"`` the prime
    densities of the windows are compared instead.
    """
    if kind == "naturals":
        return abs(_naturals_density(*window_a) - _naturals_density(*window_b))
    if kind == "primes":
        a: WindowDensity = window_density(*window_a)
        b: WindowDensity = window_density(*window_b)
        return abs(a.density - b.density)
    raise ConfigError(f"unknown kind {kind!r}")


def random_flow_points(rng: np.random.Generator, size: int, *,
                       max_ratio: float = 0.9, t_max: float = 10.0) -> np.ndarray:
    """(t, d0) pairs with |t| <= t_max, 0 < d0 <= 1 and |t*d0| <= max_ratio."""
    t = rng.uniform(-t_max, t_max, size)
    cap = np.minimum(1.0, max_ratio / np.maximum(np.abs(t), 1e-300))
    d0 = cap * (1.0 - rng.random(size))
    return np.column_stack((t, d0))


def random_group_triples(rng: np.random.Generator, size: int) -> np.ndarray:
    """(s, t, x) triples whose states x, d(s, x) and d(s+t, x) all lie in (0, 1]."""
    out = np.empty((size, 3))
    filled = 0
    while filled < size:
        s, t = rng.uniform(-5.0, 5.0, 2)
        x = 1.0 - rng.random()
        if 1 + s * x >= x and 1 + (s + t) * x >= x:
            out[filled] = s, t, x
            filled += 1
    return out
