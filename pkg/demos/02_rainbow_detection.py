"""
Colorings and rainbow copies
============================

An edge-coloring of K_n is a color id per edge index, kept in
restricted-growth form so that equal partitions compare equal.
"""

import numpy as np

from antiramsey.coloring import color_classes, find_rainbow_copy, normalize, rainbow_mask
from antiramsey.embeddings import enumerate_copies
from antiramsey.graphs import resolve

rng = np.random.default_rng(1)
n = 6
c = normalize(rng.integers(0, 5, 15).tolist(), n)
print("coloring:", c.colors, "with", c.color_count, "colors")

# how many triangles are rainbow under this coloring?
table = enumerate_copies(n, resolve("C3"))
mask = rainbow_mask(c.as_array(), table)
print(f"{mask.sum()} of {len(table)} triangles are rainbow")

first = find_rainbow_copy(c, table)
if first is not None:
    print("first rainbow triangle on vertices", table.vertices_of(first))

# color classes that are stars (all edges share a vertex) versus the rest
view = color_classes(c)
c1, c2, c3 = view.counts
print(f"single-edge stars {c1}, larger stars {c2}, other classes {c3}; total {c1 + c2 + c3}")
for v in range(n):
    print(f"  colors whose whole class sits at vertex {v}: {sorted(view.unique_at(v))}")
