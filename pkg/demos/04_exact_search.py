"""
Exact anti-Ramsey numbers
=========================

``f_exact`` starts from the best construction and asks the decision search
for one more color until it proves that count impossible. ``rb = f + 1``.
"""

import time

from antiramsey.formulas import paper_tables
from antiramsey.graphs import resolve
from antiramsey.search import SearchConfig, decide_colorable, rb_exact

tables = paper_tables()
cfg = SearchConfig(timeout=120)

for n, tag in [(4, "diamond"), (5, "diamond"), (6, "diamond"), (5, "bull"), (6, "bull"),
               (5, "K2,3"), (6, "K2,3"), (5, "house"), (6, "house")]:
    t0 = time.perf_counter()
    out = rb_exact(n, resolve(tag), cfg)
    print(f"rb(K_{n}, {tag:7s}) = {out.rb:2d}  [{out.status}, {out.nodes_explored} nodes, "
          f"{time.perf_counter() - t0:.2f}s]  published: {tables.rb_value(tag, n)}")

# the decision question underneath: is there a k-coloring with no rainbow bull?
for k in (5, 6):
    witness = decide_colorable(5, resolve("bull"), k, cfg)
    print(f"5 vertices, {k} colors, no rainbow bull:", "yes" if witness else "no")
