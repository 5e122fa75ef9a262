"""
Turán numbers by orderly generation
===================================

Graphs free of a forbidden family are grown one vertex at a time, keeping one
representative per isomorphism class. The result for {C3, C4} gives the exact
rainbow number of the diamond: ext + 2.
"""

import time

from antiramsey.formulas import girth_bound, paper_tables
from antiramsey.graphs import family, to_literal
from antiramsey.search import turan_exact

tables = paper_tables()
fam = family("C3", "C4")
for n in range(4, 13):
    t0 = time.perf_counter()
    out = turan_exact(n, fam)
    print(f"ext({n:2d}, {{C3,C4}}) = {out.value:2d}  published {tables.ext_c3_c4[n]:2d}  "
          f"bound {girth_bound(n):6.2f}  {time.perf_counter() - t0:5.2f}s")

print("an extremal graph on 10 vertices:", to_literal(turan_exact(10, fam).witness))

# replacing C3 by K_{1,3}+e gives the same numbers for small n
alt = family("K1,3+e", "C4")
print([turan_exact(n, alt).value for n in range(4, 9)])
