# The flow d(t, d0) = d0 / (1 + t*d0) generated by V(d) = -d**2.
#
# Three realizations: the closed form, the exponential series of V d/dd
# (a geometric series, radius |t*d0| < 1), and RK4 integration of d' = -d**2.
# The series needs roughly log(tol)/log|t*d0| terms: order 60 is plenty
# at |t*d0| = 0.5 and nowhere near enough at 0.9.

import math

from primeflow import (QuadraticVectorField, flow_closed_form, flow_numeric,
                       flow_series, group_law_residual)

for ratio in (0.1, 0.5, 0.7, 0.9):
    t, d0 = ratio / 0.5, 0.5
    closed = flow_closed_form(t, d0)
    print(f"t*d0={ratio:.1f}: closed={closed:.15f}  "
          f"series60 err={abs(flow_series(t, d0, 60) - closed):.1e}  "
          f"series300 err={abs(flow_series(t, d0, 300) - closed):.1e}  "
          f"rk4 err={abs(flow_numeric(t, d0) - closed):.1e}")

print("group law d(s+t,x) vs d(t,d(s,x)):", group_law_residual(0.3, 1.7, 0.8))

# only c = -1 turns the flow into 1/d(N1) - 1/d(N2) = log(N1/N2)
t1, t2 = math.log(1e8), math.log(1e6)
for c in (-0.5, -1.0, -2.0):
    f = QuadraticVectorField(c)
    gap = 1 / f.flow(t1, 1.0) - 1 / f.flow(t2, 1.0)
    print(f"c={c:+.1f}: inverse-density gap {gap:.5f} vs log ratio {t1 - t2:.5f}")
