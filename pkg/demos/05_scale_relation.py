# Measured densities against the flow's scale relation and its use as a
# predictor: calibrate d0 at one scale, carry it to another.

from primeflow import density_at, predict_density, scale_relation_check

samples = {k: density_at(10**k) for k in range(4, 11)}
print("pair          lhs        rhs   rel err")
for k in range(6, 11, 2):
    rec = scale_relation_check(samples[k], samples[k - 2])
    print(f"1e{k}/1e{k-2}  {rec.lhs:9.5f}  {rec.rhs:9.5f}  {rec.rel_err:.5f}")

anchor = samples[6]
print("\nanchored at 1e6:")
print("     n    measured   RG pred    1/log n")
for k in range(6, 11):
    s = samples[k]
    print(f"  1e{k:<3} {s.density:.7f}  {predict_density(s.n, anchor):.7f}  {1 / s.log_n:.7f}")
