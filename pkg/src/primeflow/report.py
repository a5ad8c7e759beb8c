"""Per-scale verification table and its CSV / JSON serializations."""

from __future__ import annotations

import io
import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from .density import density_at, li
from .errors import ConfigError, VerificationError
from .mertens import mertens_residual_curve
from .prime_count import FAST_LIMIT, SIEVE_LIMIT
from .rgflow import (group_law_residual, predict_density, random_group_triples,
                     scale_relation_check)

__all__ = [
    "CSV_COLUMNS",
    "ReportRow",
    "emit_report",
    "expand_grid",
    "format_number",
    "parse_grid",
    "parse_int",
    "plain_record",
    "rows_to_csv",
    "rows_to_json",
    "to_json",
    "verify_group_law",
]

CSV_COLUMNS = ("n", "pi", "density", "inv_log", "li_over_n", "fbar", "residual",
               "rg_pred", "scale_lhs", "scale_rhs", "scale_rel_err")

GROUP_LAW_TOL = 1e-12
GROUP_LAW_SAMPLES = 1000


@dataclass(frozen=True)
class ReportRow:
    n: int
    pi: int
    density: float
    inv_log: float
    li_over_n: float
    fbar: float
    residual: float
    rg_pred: float
    scale_lhs: float | None = None
    scale_rhs: float | None = None
    scale_rel_err: float | None = None


def expand_grid(start: int, stop: int, per_decade: int) -> list[int]:
    """Log-spaced integers from start to stop, rounded and deduplicated."""
    if per_decade < 1:
        raise ConfigError("points per decade must be >= 1")
    if start < 1 or stop < start:
        raise ConfigError(f"invalid grid bounds {start}:{stop}")
    span = math.log10(stop) - math.log10(start)
    count = int(math.floor(span * per_decade + 1e-9)) + 1
    points = (round(start * 10 ** (k / per_decade)) for k in range(count))
    return sorted(set(points))


def parse_int(text: str) -> int:
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise ConfigError(f"not an integer: {text!r}") from None
    if not value.is_integer():
        raise ConfigError(f"not an integer: {text!r}")
    return int(value)


def parse_grid(spec: str) -> list[int]:
    """``start:stop:ppd`` (log-spaced) or a comma-separated list of integers."""
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ConfigError(f"grid must be start:stop:ppd, got {spec!r}")
        start, stop, ppd = (parse_int(p) for p in parts)
        return expand_grid(start, stop, ppd)
    grid = [parse_int(p) for p in spec.split(",") if p.strip()]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigError("grid must be strictly increasing")
    return grid


def verify_group_law(seed: int, samples: int = GROUP_LAW_SAMPLES) -> float:
    rng = np.random.default_rng(seed)
    worst = max(group_law_residual(*row) for row in random_group_triples(rng, samples))
    if worst > GROUP_LAW_TOL:
        raise VerificationError(f"group law residual {worst:.3g} exceeds {GROUP_LAW_TOL}")
    return worst


def emit_report(grid: Sequence[int], *, sieve_limit: int = SIEVE_LIMIT,
                fast_limit: int = FAST_LIMIT, seed: int = 1) -> list[ReportRow]:
    """Build one row per grid scale.

    The smallest grid point anchors the RG prediction; the scale-relation
    columns of row i compare scale i with scale i-1. Internal consistency
    (monotone counts, exact reciprocal identities, group law on a seeded
    batch) is checked along the way and raises VerificationError.
    """
    grid = [int(n) for n in grid]
    if not grid:
        raise ConfigError("empty grid")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigError("grid must be strictly increasing")
    if grid[0] < 3:
        raise ConfigError("report grid must start at n >= 3")

    verify_group_law(seed)
    mertens = mertens_residual_curve(grid, limit=sieve_limit)
    samples = [density_at(n, sieve_limit=sieve_limit, fast_limit=fast_limit) for n in grid]
    anchor = samples[0]

    rows = []
    for i, (s, m) in enumerate(zip(samples, mertens)):
        if i and s.pi < samples[i - 1].pi:
            raise VerificationError(f"pi is not monotone at n={s.n}")
        if abs(s.inv_density * s.density - 1.0) > 1e-15:
            raise VerificationError(f"inverse density mismatch at n={s.n}")
        if i and m.sum <= mertens[i - 1].sum:
            raise VerificationError(f"reciprocal sum not increasing at n={s.n}")
        pair = {}
        if i:
            rec = scale_relation_check(s, samples[i - 1])
            pair = dict(scale_lhs=rec.lhs, scale_rhs=rec.rhs, scale_rel_err=rec.rel_err)
        rows.append(ReportRow(
            n=s.n, pi=s.pi, density=s.density, inv_log=1.0 / s.log_n,
            li_over_n=li(s.n) / s.n, fbar=m.fbar, residual=m.residual,
            rg_pred=predict_density(s.n, anchor), **pair,
        ))
    return rows


def format_number(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".15g")


def _plain(value):
    # JSON numbers go through the same 15-digit rounding as CSV fields
    if value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, np.integer):
        return int(value)
    return float(format_number(value))


def rows_to_csv(rows: Iterable, columns: Sequence[str] = CSV_COLUMNS) -> str:
    buf = io.StringIO()
    buf.write(",".join(columns) + "\n")
    for row in rows:
        record = row if isinstance(row, dict) else asdict(row)
        buf.write(",".join(format_number(record[c]) for c in columns) + "\n")
    return buf.getvalue()


def to_json(doc) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def plain_record(row) -> dict:
    record = row if isinstance(row, dict) else asdict(row)
    return {k: _plain(v) for k, v in record.items()}


def rows_to_json(rows: Iterable, **meta) -> str:
    return to_json({**meta, "rows": [plain_record(r) for r in rows]})
