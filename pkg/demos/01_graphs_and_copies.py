"""
Small graphs, canonical forms and copy tables
=============================================

Graphs are stored as tuples of adjacency bitsets. Targets can be named by
catalog tag or written out as a literal edge list.
"""

from antiramsey.embeddings import automorphism_count, canonical_code, enumerate_copies, is_isomorphic
from antiramsey.graphs import minus_edge_family, resolve, to_literal

bull = resolve("bull")
print("bull as a literal:", to_literal(bull))

# relabeling the vertices does not change the canonical code
shuffled = resolve("5:3-4,3-0,4-0,4-1,0-2")
print("same graph after relabeling:", canonical_code(bull) == canonical_code(shuffled))

# copies of H in K_n: n!/(n-p)! injective maps, divided by |Aut(H)|
for tag, n in [("C3", 5), ("bull", 7), ("K2,3", 6)]:
    h = resolve(tag)
    table = enumerate_copies(n, h)
    print(f"{tag:>5} in K_{n}: {len(table):5d} copies, |Aut| = {automorphism_count(h)}")

# deleting one edge in every possible way, up to isomorphism
for tag in ("diamond", "house"):
    fam = minus_edge_family(resolve(tag))
    print(tag, "minus an edge:", [to_literal(g) for g in fam])

print("house is the complement of P5:", is_isomorphic(resolve("house"), resolve("P5").complement()))
