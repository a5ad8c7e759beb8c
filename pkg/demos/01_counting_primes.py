# Counting primes two ways.
#
# pi_sieve walks a segmented sieve; pi_fast runs the floor-quotient
# recursion in roughly n**(3/4) steps. They share no counting code, so
# agreement between them is the check on every large count used later.

import time

from primeflow import pi_fast, pi_sieve, sieve_range

seg = sieve_range(90, 100)
print("primes in [90, 100]:", seg.primes().tolist())

print(f"{'n':>14} {'pi_sieve':>12} {'s':>6} {'pi_fast':>12} {'s':>6}")
for k in range(3, 10):
    n = 10**k
    t0 = time.perf_counter()
    a = pi_sieve(n).count
    t1 = time.perf_counter()
    b = pi_fast(n).count
    t2 = time.perf_counter()
    assert a == b
    print(f"{n:>14} {a:>12} {t1 - t0:6.2f} {b:>12} {t2 - t1:6.2f}")

# past the sieve's comfortable range only the fast counter is used
for k in (10, 11):
    print(f"pi(10^{k}) = {pi_fast(10**k).count}")
