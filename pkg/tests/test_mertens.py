import math
from fractions import Fraction

import pytest

from primeflow.errors import ConfigError, LimitExceededError
from primeflow.mertens import (MertensSample, fbar, mertens_residual_curve,
                               reciprocal_prime_sum)

from conftest import is_prime_trial


def exact_sum(lam):
    return sum(Fraction(1, p) for p in range(2, lam) if is_prime_trial(p))


def test_examples():
    assert reciprocal_prime_sum(3) == 0.5
    assert reciprocal_prime_sum(11) == pytest.approx(1 / 2 + 1 / 3 + 1 / 5 + 1 / 7, abs=1e-15)
    assert reciprocal_prime_sum(11) == pytest.approx(1.176190476, abs=1e-9)


def test_cutoff_is_strict():
    # 11 and 13 are prime: the cutoff itself is excluded
    assert reciprocal_prime_sum(13) == reciprocal_prime_sum(12) == reciprocal_prime_sum(11) + 1 / 11
    assert reciprocal_prime_sum(14) == pytest.approx(reciprocal_prime_sum(13) + 1 / 13, abs=1e-15)


@pytest.mark.parametrize("lam", [3, 4, 50, 997, 5000, 20_000])
def test_against_exact_rational_sum(lam):
    assert abs(reciprocal_prime_sum(lam) - float(exact_sum(lam))) <= 1e-15


def test_fbar_small():
    s = fbar(16)
    assert s.loglog == math.log(math.log(16))
    assert s.loglog == pytest.approx(1.020, abs=5e-4)
    assert s.sum == pytest.approx(1.3440, abs=1e-4)
    assert s.fbar == pytest.approx(1.318, abs=1e-3)
    s3 = fbar(3)
    assert s3.sum == 0.5
    assert s3.loglog == pytest.approx(0.0940, abs=1e-4)
    assert s3.fbar == pytest.approx(5.32, abs=1e-2)


def test_sample_fields_by_construction():
    s = fbar(10**5)
    assert s.fbar == s.sum / s.loglog
    assert s.residual == s.sum - s.loglog


def test_residual_at_one_million():
    v = reciprocal_prime_sum(10**6)
    assert 0.26 < v - math.log(math.log(10**6)) < 0.27


def test_curve_matches_independent_sums():
    grid = [3, 10, 11, 12, 1000, 10**4, 123_457, 10**6]
    curve = mertens_residual_curve(grid)
    assert [s.lam for s in curve] == grid
    for s in curve:
        assert abs(s.sum - reciprocal_prime_sum(s.lam)) <= 1e-12


def test_curve_across_block_edges(monkeypatch):
    import primeflow.mertens as mod
    from primeflow import sieve
    real = sieve.iter_prime_blocks
    monkeypatch.setattr(mod, "iter_prime_blocks",
                        lambda hi: real(hi, block_odds=97))
    grid = [5, 193, 194, 195, 196, 197, 5000, 5001]
    curve = mertens_residual_curve(grid)
    for s in curve:
        assert abs(s.sum - float(exact_sum(s.lam))) <= 1e-14


def test_curve_residuals_decrease():
    curve = mertens_residual_curve([10**4, 10**6, 10**8])
    res = [s.residual for s in curve]
    assert res[0] > res[1] > res[2] > 0.26
    assert abs(res[2] - res[1]) < 0.01


def test_convergence_direction():
    grid = [10**3, 10**5, 10**7]
    curve = mertens_residual_curve(grid)
    dev = [abs(s.fbar - 1) for s in curve]
    assert dev[0] > dev[1] > dev[2]


def test_single_and_invalid_grids():
    (only,) = mertens_residual_curve([3])
    assert only.residual == 0.5 - math.log(math.log(3))
    assert mertens_residual_curve([]) == []
    with pytest.raises(ConfigError):
        mertens_residual_curve([10, 10])
    with pytest.raises(ConfigError):
        mertens_residual_curve([100, 10])
    with pytest.raises(ConfigError):
        mertens_residual_curve([2, 10])
    with pytest.raises(ConfigError):
        reciprocal_prime_sum(2)
    with pytest.raises(LimitExceededError):
        reciprocal_prime_sum(10**6, limit=1000)


def test_from_sum_roundtrip():
    s = MertensSample.from_sum(100, 1.8)
    assert s.lam == 100 and s.sum == 1.8
