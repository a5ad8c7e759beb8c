# Measured density pi(n)/n next to 1/log n and li(n)/n.
#
# 1/log n is the single-power law; li(n)/n is the smoother Stieltjes
# version. li wins from n = 223 on; below that the two trade places.

from primeflow import compare_models, window_density

print(f"{'n':>12} {'pi(n)/n':>11} {'1/log n':>11} {'li(n)/n':>11} {'err 1/log':>10} {'err li':>10}")
for k in range(2, 11):
    m = compare_models(10**k)
    print(f"{10**k:>12} {m.sample.density:11.8f} {m.inv_log:11.8f} {m.li_over_n:11.8f} "
          f"{m.rel_err_invlog:10.2e} {m.rel_err_li:10.2e}")

# local density around a point, rather than the cumulative fraction
for center in (10**4, 10**6, 10**8):
    w = window_density(center)
    print(f"primes in [{w.lo}, {w.hi}]: {w.count} -> local density {w.density:.5f}")
