"""
Closed-form bounds and target classification
============================================

Targets are sorted by cyclomatic number: cycles and pendant cycles have exact
formulas, other unicyclic graphs linear bounds, and graphs with two or more
independent cycles no linear upper bound at all.
"""

from antiramsey.formulas import classify, rb_cycle, sandwich_bounds
from antiramsey.graphs import family, minus_edge_family, resolve
from antiramsey.search import rb_exact, turan_exact

for tag in ("C5", "C4+", "bull", "Z2", "diamond", "K2,3", "P4"):
    cl = classify(resolve(tag))
    print(f"{tag:8s} {cl.kind:26s} n=8 bounds: {cl.bounds(8)}")

# the cycle formula against exhaustive search
for n, k in [(5, 3), (6, 4), (6, 5)]:
    print(f"rb(K_{n}, C_{k}): formula {rb_cycle(n, k)}, search {rb_exact(n, resolve(f'C{k}')).rb}")

# Turán numbers sandwich the rainbow number
h = resolve("bull")
for n in (5, 6):
    b = sandwich_bounds(n, h, turan_exact(n, minus_edge_family(h)).value, turan_exact(n, family("bull")).value)
    print(f"bull, n={n}: {b.lower} <= rb = {rb_exact(n, h).rb} <= {b.upper}")
