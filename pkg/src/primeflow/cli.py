"""``primeflow`` command line.

Exit codes: 0 success, 1 invalid configuration, 2 limit exceeded,
3 internal verification failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .density import compare_models, density_at
from .errors import (ConfigError, LimitExceededError, PrimeflowError, RadiusError,
                     VerificationError)
from .mertens import mertens_residual_curve
from .prime_count import FAST_LIMIT, SIEVE_LIMIT, prime_pi
from .report import (CSV_COLUMNS, emit_report, parse_grid, parse_int, plain_record,
                     rows_to_csv, rows_to_json, to_json)
from .rgflow import flow_closed_form, flow_numeric, flow_series, scale_relation_check

EXIT_OK, EXIT_CONFIG, EXIT_LIMIT, EXIT_VERIFY = 0, 1, 2, 3

SUBCOMMANDS = ("pi", "mertens", "density", "flow", "scale-check", "report")
DEFAULT_SERIES_ORDER = 60


@dataclass
class RunConfig:
    subcommand: str
    grid: list[int] = field(default_factory=list)
    n1: int | None = None
    n2: int | None = None
    t: float | None = None
    d0: float | None = None
    order: int = DEFAULT_SERIES_ORDER
    limit_sieve: int = SIEVE_LIMIT
    limit_fast: int = FAST_LIMIT
    output_format: str = "csv"
    output_path: Path | None = None
    seed: int = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=parse_int)
    common.add_argument("--n1", type=parse_int)
    common.add_argument("--n2", type=parse_int)
    common.add_argument("--t", type=float)
    common.add_argument("--d0", type=float)
    common.add_argument("--order", type=int, default=DEFAULT_SERIES_ORDER)
    common.add_argument("--grid", type=parse_grid)
    common.add_argument("--limit-sieve", type=parse_int, default=SIEVE_LIMIT)
    common.add_argument("--limit-fast", type=parse_int, default=FAST_LIMIT)
    common.add_argument("--format", dest="output_format", choices=("csv", "json"),
                        default="csv")
    common.add_argument("--out", type=Path)
    common.add_argument("--seed", type=int, default=1)

    parser = _Parser(prog="primeflow", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def parse_config(argv) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    grid = ns.grid
    if ns.n is not None:
        if grid:
            raise ConfigError("give either --n or --grid, not both")
        grid = [ns.n]
    if ns.seed < 0:
        raise ConfigError("seed must be a natural number")
    return RunConfig(
        subcommand=ns.subcommand, grid=grid or [], n1=ns.n1, n2=ns.n2, t=ns.t,
        d0=ns.d0, order=ns.order, limit_sieve=ns.limit_sieve, limit_fast=ns.limit_fast,
        output_format=ns.output_format, output_path=ns.out, seed=ns.seed,
    )


def _need(value, flag):
    if value is None:
        raise ConfigError(f"{flag} is required")
    return value


def _need_grid(cfg: RunConfig) -> list[int]:
    if not cfg.grid:
        raise ConfigError("--n or --grid is required")
    return cfg.grid


def _table(cfg: RunConfig, columns, records) -> str:
    if cfg.output_format == "csv":
        return rows_to_csv(records, columns)
    records = [plain_record({c: r[c] for c in columns}) for r in records]
    return to_json(records[0] if len(records) == 1 else records)


def _limits(cfg: RunConfig) -> dict:
    return dict(sieve_limit=cfg.limit_sieve, fast_limit=cfg.limit_fast)


def _run_pi(cfg):
    records = [{"n": n, "pi": prime_pi(n, **_limits(cfg)).count} for n in _need_grid(cfg)]
    return _table(cfg, ("n", "pi"), records)


def _run_mertens(cfg):
    samples = mertens_residual_curve(_need_grid(cfg), limit=cfg.limit_sieve)
    records = [{"lambda": s.lam, "sum": s.sum, "loglog": s.loglog, "fbar": s.fbar,
                "residual": s.residual} for s in samples]
    return _table(cfg, ("lambda", "sum", "loglog", "fbar", "residual"), records)


def _run_density(cfg):
    records = []
    for n in _need_grid(cfg):
        m = compare_models(n, **_limits(cfg))
        records.append({**asdict(m.sample), "inv_log": m.inv_log, "li_over_n": m.li_over_n,
                        "rel_err_invlog": m.rel_err_invlog, "rel_err_li": m.rel_err_li})
    columns = ("n", "pi", "density", "inv_density", "log_n", "inv_log", "li_over_n",
               "rel_err_invlog", "rel_err_li")
    return _table(cfg, columns, records)


def _run_flow(cfg):
    t, d0 = _need(cfg.t, "--t"), _need(cfg.d0, "--d0")
    closed = flow_closed_form(t, d0)
    numeric = flow_numeric(t, d0)
    try:
        series = flow_series(t, d0, cfg.order)
    except RadiusError:
        series = None
    if not math.isclose(closed, numeric, rel_tol=1e-8, abs_tol=1e-10):
        raise VerificationError(f"closed form {closed} and RK4 {numeric} disagree")
    record = {"t": t, "d0": d0, "closed_form": closed, "series": series,
              "numeric": numeric, "order": cfg.order}
    return _table(cfg, ("t", "d0", "closed_form", "series", "numeric", "order"), [record])


def _run_scale_check(cfg):
    n1, n2 = _need(cfg.n1, "--n1"), _need(cfg.n2, "--n2")
    rec = scale_relation_check(density_at(n1, **_limits(cfg)), density_at(n2, **_limits(cfg)))
    return _table(cfg, ("n1", "n2", "lhs", "rhs", "abs_err", "rel_err"), [asdict(rec)])


def _run_report(cfg):
    rows = emit_report(_need_grid(cfg), seed=cfg.seed, **_limits(cfg))
    if cfg.output_format == "csv":
        return rows_to_csv(rows)
    return rows_to_json(rows, columns=list(CSV_COLUMNS), grid=cfg.grid,
                        anchor=cfg.grid[0], seed=cfg.seed,
                        limits={"sieve": cfg.limit_sieve, "fast": cfg.limit_fast})


_RUNNERS = {
    "pi": _run_pi,
    "mertens": _run_mertens,
    "density": _run_density,
    "flow": _run_flow,
    "scale-check": _run_scale_check,
    "report": _run_report,
}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute one subcommand, writing its table to ``cfg.output_path`` or stdout."""
    stdout = stdout or sys.stdout
    text = _RUNNERS[cfg.subcommand](cfg)
    if cfg.output_path is None:
        stdout.write(text)
    else:
        cfg.output_path.write_text(text, encoding="utf-8", newline="\n")
    return EXIT_OK


def main(argv=None) -> int:
    try:
        return run(parse_config(argv))
    except LimitExceededError as exc:
        print(f"primeflow: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except VerificationError as exc:
        print(f"primeflow: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except PrimeflowError as exc:
        print(f"primeflow: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
