"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".
"""

import math
import time

import numpy as np

from primeflow import cli
from primeflow.density import compare_models, density_at
from primeflow.mertens import mertens_residual_curve
from primeflow.prime_count import pi_fast, pi_sieve
from primeflow.report import expand_grid
from primeflow.rgflow import (flow_closed_form, flow_numeric, flow_series,
                              group_law_residual, predict_density, random_flow_points,
                              random_group_triples, FlowState)

from conftest import trial_division_flags

SEED = 1


def test_1_pnt_density_trend(criterion):
    start = time.perf_counter()
    errs = [compare_models(10**k).rel_err_invlog for k in range(4, 10)]
    elapsed = time.perf_counter() - start
    decreasing = all(b < a for a, b in zip(errs, errs[1:]))
    at_1e9 = errs[-1]
    ok = decreasing and abs(at_1e9 - 0.0527) <= 0.002 and elapsed <= 300
    criterion(1, ok, f"rel_err(1e9)={at_1e9:.5f} (target 0.0527+-0.002), "
                     f"decreasing={decreasing}, {elapsed:.1f}s")
    assert ok


def test_2_scale_relation(criterion):
    start = time.perf_counter()
    s6, s8, s10 = (density_at(10**k) for k in (6, 8, 10))

    def rel(a, b):
        lhs = a.inv_density - b.inv_density
        rhs = math.log(a.n / b.n)
        return abs(lhs - rhs) / rhs

    near, far = rel(s8, s6), rel(s10, s8)
    elapsed = time.perf_counter() - start
    ok = near <= 0.005 and far < near and elapsed <= 600
    criterion(2, ok, f"rel_err(1e8,1e6)={near:.6f} (<=0.005), "
                     f"rel_err(1e10,1e8)={far:.6f} (must be < previous), {elapsed:.1f}s")
    assert near <= 0.005
    assert far < near


def test_3_euler_mertens_statistic(criterion):
    s6, s9 = mertens_residual_curve([10**6, 10**9])
    ok = (s6.fbar > 1 and s9.fbar > 1 and abs(s9.fbar - 1.086) <= 0.002
          and abs(s9.fbar - 1) < abs(s6.fbar - 1))
    criterion(3, ok, f"Fbar(1e6)={s6.fbar:.5f}, Fbar(1e9)={s9.fbar:.5f} (target 1.086+-0.002)")
    assert ok


def test_4_mertens_residual_convergence(criterion):
    s6, s8 = mertens_residual_curve([10**6, 10**8])
    ok = (abs(s8.residual - s6.residual) < 0.01
          and all(0.25 < s.residual < 0.28 for s in (s6, s8)))
    criterion(4, ok, f"residual(1e6)={s6.residual:.6f}, residual(1e8)={s8.residual:.6f}")
    assert ok


def test_5_flow_triple_agreement(criterion):
    points = random_flow_points(np.random.default_rng(SEED), 200, max_ratio=0.9)
    worst = {"closed-series": 0.0, "closed-numeric": 0.0, "series-numeric": 0.0}
    for t, d0 in points.tolist():
        closed = flow_closed_form(t, d0)
        series = flow_series(t, d0, 60)
        numeric = flow_numeric(t, d0)
        worst["closed-series"] = max(worst["closed-series"], abs(closed - series))
        worst["closed-numeric"] = max(worst["closed-numeric"], abs(closed - numeric))
        worst["series-numeric"] = max(worst["series-numeric"], abs(series - numeric))
    ok = max(worst.values()) <= 1e-9
    criterion(5, ok, "max pairwise diffs " +
              ", ".join(f"{k}={v:.2e}" for k, v in worst.items()) + " (tol 1e-9, order 60)")
    assert ok


def test_6_group_law(criterion):
    rng = np.random.default_rng(SEED)
    group = max(group_law_residual(*row) for row in random_group_triples(rng, 1000))
    anchor = density_at(10**6)
    trans = 0.0
    for b, c in rng.integers(10, 10**12, size=(1000, 2)).tolist():
        via = FlowState.at(b, predict_density(b, anchor))
        trans = max(trans, abs(predict_density(c, via) - predict_density(c, anchor)))
    ok = group <= 1e-12 and trans <= 1e-12
    criterion(6, ok, f"group law max residual={group:.2e}, transitivity max={trans:.2e}")
    assert ok


def test_7_rg_prediction_quality(criterion):
    anchor = density_at(10**6)
    grid = [10**k for k in range(6, 11)]
    samples = [density_at(n) for n in grid]
    pred8 = predict_density(10**8, anchor)
    err8 = abs(pred8 - samples[2].density) / samples[2].density
    beats = []
    for s in samples:
        rg = abs(predict_density(s.n, anchor) - s.density)
        plain = abs(1 / s.log_n - s.density)
        beats.append(rg < plain)
    ok = err8 <= 0.002 and all(beats)
    criterion(7, ok, f"rel_err(pred 1e8 from 1e6)={err8:.5f} (<=0.002), "
                     f"beats 1/log N at {sum(beats)}/{len(beats)} grid points")
    assert ok


def test_8_oracle_equivalence(criterion):
    grid = sorted({round(10 ** (2 + 7 * k / 19)) for k in range(20)})
    mismatches = [n for n in grid if pi_fast(n).count != pi_sieve(n).count]
    flags = trial_division_flags(10**6)
    from primeflow.sieve import sieve_range
    sieve_ok = bool(np.array_equal(sieve_range(0, 10**6).flags, flags))
    ok = len(grid) == 20 and not mismatches and sieve_ok
    criterion(8, ok, f"{len(grid)} grid points in [1e2,1e9], mismatches={mismatches}, "
                     f"sieve==trial division up to 1e6: {sieve_ok}")
    assert ok


def test_9_report_determinism(criterion, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    ja, jb = tmp_path / "a.json", tmp_path / "b.json"
    base = ["report", "--grid", "1e3:1e7:2", "--seed", "1"]
    codes = [cli.main(base + ["--out", str(a)]), cli.main(base + ["--out", str(b)]),
             cli.main(base + ["--format", "json", "--out", str(ja)]),
             cli.main(base + ["--format", "json", "--out", str(jb)])]
    same = a.read_bytes() == b.read_bytes() and ja.read_bytes() == jb.read_bytes()
    ok = codes == [0, 0, 0, 0] and same
    criterion(9, ok, f"exit codes {codes}, byte-identical={same}, "
                     f"{len(a.read_text().splitlines()) - 1} rows")
    assert ok
    assert len(expand_grid(10**3, 10**7, 2)) == 9
