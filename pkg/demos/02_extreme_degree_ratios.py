# Shares of minimum- and maximum-degree nodes
# ===========================================

from asdegree import BoundedPowerLaw, ratio_max_degree, ratio_min_degree, sweep

for lam in (2.0, 2.25, 2.5, 2.75, 3.0):
    d = BoundedPowerLaw(lam, 1, 1500)
    print(f"lambda={lam:4.2f}  r_kmin={ratio_min_degree(d):.3f}  r_kmax={ratio_max_degree(d):.2e}")

# both shares fall off as power laws in the right regime
low = sweep("ratio_min_degree", "k_min", range(1, 51), {"lambda": 2.25, "k_max": 1500}, fit_decay=True)
high = sweep("ratio_max_degree", "k_max", range(500, 5001, 50), {"lambda": 2.25, "k_min": 1}, fit_decay=True)
print("r_kmin ~ k_min^-gamma, gamma =", round(low.decay_exponent, 3))
print("r_kmax ~ k_max^-gamma, gamma =", round(high.decay_exponent, 3), "(the distribution exponent)")

# r_kmin bottoms out once k_min reaches about half of k_max
table = sweep("ratio_min_degree", "k_min", range(1, 1500), {"lambda": 2.25, "k_max": 1500})
k_best = min(table.rows, key=lambda r: r[1])
print("minimum r_kmin over k_min: %.4f at k_min=%d" % (k_best[1], k_best[0]))
