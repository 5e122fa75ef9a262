"""
Lower-bound constructions
=========================

Each construction is a concrete coloring plus a claimed color count. The
verifier checks every copy of the target, so a certificate is only as good as
that exhaustive check.
"""

from antiramsey.constructions import (bull_cycle_partition, disjoint_cliques_plus_one,
                                      extremal_plus_one, k23_special)
from antiramsey.formulas import paper_tables
from antiramsey.graphs import family, resolve

tables = paper_tables()

# bull: disjoint rainbow triangles and 4-cycles, one color for the rest
for n in range(6, 11):
    cert = bull_cycle_partition(n)
    print(f"bull   n={n:2d}: {cert.claimed_colors:2d} colors, verified={cert.verify()}, "
          f"published rb - 1 = {tables.rb_value('bull', n) - 1}")

# house: a rainbow K4 next to a rainbow K_{n-4}
for n in range(5, 9):
    cert = disjoint_cliques_plus_one(n, (4, n - 4), resolve("house"))
    print(f"house  n={n:2d}: {cert.claimed_colors:2d} colors, verified={cert.verify()}")

# K_{2,3}: hand-built colorings for K_6 and K_7
for n in (6, 7):
    cert = k23_special(n)
    print(f"K2,3   n={n:2d}: {cert.claimed_colors:2d} colors, verified={cert.verify()}")

# diamond: rainbow copy of an extremal {C3, C4}-free graph
for n in range(4, 11):
    cert = extremal_plus_one(n, family("C3", "C4"), resolve("diamond"))
    print(f"diamond n={n:2d}: {cert.claimed_colors:2d} colors, verified={cert.verify()}")
