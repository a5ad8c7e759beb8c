import math

import numpy as np
import pytest


def trial_division_flags(n):
    """Primality of 0..n by dividing every m by every d in [2, isqrt(m)].

    Deliberately not a sieve: each number is tested by remainders only.
    """
    m = np.arange(n + 1, dtype=np.int64)
    flags = m >= 2
    for d in range(2, math.isqrt(n) + 1):
        flags &= ~((m % d == 0) & (m > d))
    return flags


def is_prime_trial(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


# Well-known values of pi(10**k)
PI_POWERS_OF_TEN = {
    1: 4, 2: 25, 3: 168, 4: 1229, 5: 9592, 6: 78498, 7: 664579,
    8: 5761455, 9: 50847534, 10: 455052511, 11: 4118054813,
}


@pytest.fixture(scope="session")
def flags_1e6():
    return trial_division_flags(10**6)


_criteria = {}


@pytest.fixture
def criterion():
    def record(number, passed, detail):
        _criteria[number] = (bool(passed), detail)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        passed, detail = _criteria[number]
        terminalreporter.write_line(
            f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
