# Degree held by the best-connected nodes
# =======================================
#
# Walk the degree classes from the top down: R_nodes is the share of nodes
# seen so far, R_degrees the share of total degree they hold.

from asdegree import BoundedPowerLaw, degrees_at_top_fraction, newman_rich_fraction, rich_fractions

d = BoundedPowerLaw(2.25, 1, 1500)
p = rich_fractions(d, 3)
print(f"degree >= 3: {p.r_nodes:.1%} of nodes hold {p.r_degrees:.1%} of degree")

for target in (0.10, 0.17, 0.20, 0.27, 0.50):
    bounded = degrees_at_top_fraction(d, target)
    closed = newman_rich_fraction(2.25, target)
    print(f"top {target:4.0%}: bounded {bounded:.3f}   unbounded closed form {closed:.3f}")

# the "73/27" neighbourhood for the snapshot-sized maximum degree
print("k_max=2031, top 27%:", round(degrees_at_top_fraction(BoundedPowerLaw(2.25, 1, 2031), 0.27), 3))
