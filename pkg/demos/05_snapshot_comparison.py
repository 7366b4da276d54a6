# Comparing methods on the published snapshot metrics
# ===================================================
#
# Only the eight snapshots' aggregate metrics are available, which is
# enough to compare the model predictions with the closed-form comparators.

from asdegree.analysis import AnalysisConfig, aggregate, compare_table1
from asdegree.table1 import TABLE1

for row in TABLE1:
    print(f"{row.name}: n={row.n} m={row.m} <k0>={2 * row.m / row.n:.2f} lambda={row.lam} k_max={row.k_max}")

print()
for a in aggregate(compare_table1(AnalysisConfig())):
    print(f"{a['metric']:18s} {a['method']:18s} theory {a['theory_mean']:.4g} +- {a['theory_std']:.2g}"
          f"   error {a['rel_error_mean']:.3f} +- {a['rel_error_std']:.3f}")
