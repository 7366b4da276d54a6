# Average degree of a bounded power law
# =====================================
#
# With a maximum degree the mean depends on all three parameters, and it
# stays far below the unbounded estimate (lam - 1)/(lam - 2) * k_min.

from asdegree import BoundedPowerLaw, newman_mean_degree, sweep

for lam in (2.0, 2.25, 2.5, 2.75, 3.0):
    row = [BoundedPowerLaw(lam, 1, k_max).mean_degree() for k_max in (600, 1500, 2600)]
    print(f"lambda={lam:4.2f}  <k> for k_max=600/1500/2600: " + "  ".join(f"{v:.2f}" for v in row))

# the unbounded formula diverges as lam -> 2
print("unbounded estimate at 2.25:", newman_mean_degree(2.25, 1))

# how fast does the mean grow with k_min?  forward difference along k_min
table = sweep("mean_degree_increase", "k_min", range(1, 60), {"lambda": 2.25, "k_max": 1500},
              fit_decay=True, window=(1, 50))
print("decay exponent of the increase rate over k_min in [1, 50]:", round(table.decay_exponent, 3))
