# Sum of 1/p over primes p < L against log log L.
#
# The ratio Fbar = sum / log log L creeps toward 1 very slowly, while the
# difference sum - log log L settles near 0.2615 (the Meissel-Mertens
# constant, which we only observe, never assume).

from primeflow import mertens_residual_curve

grid = [10**k for k in range(2, 9)]
print(f"{'L':>11} {'sum 1/p':>12} {'loglog L':>10} {'Fbar':>9} {'residual':>10}")
for s in mertens_residual_curve(grid):
    print(f"{s.lam:>11} {s.sum:12.8f} {s.loglog:10.6f} {s.fbar:9.5f} {s.residual:10.7f}")
