"""Edge indexing of K_n, canonical labeling, automorphisms, and copy tables.

Edge ``{i, j}`` with ``i < j`` has index ``j*(j-1)/2 + i``. Certificates and
copy tables depend on this convention; do not change it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

import numpy as np

from .graphs import SmallGraph, bits, embeddings, popcount

MAX_HOST = 12


def edge_index(i: int, j: int) -> int:
    if i == j:
        raise ValueError("loop has no edge index")
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """``edge_pairs(n)[t]`` is the vertex pair of edge index ``t`` in K_n."""
    return tuple((i, j) for j in range(n) for i in range(j))


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


# -- canonical labeling ------------------------------------------------------

def _refine(adj, cells):
    """Equitable refinement of an ordered partition (list of lists)."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            wmask = 0
            for v in cells[w]:
                wmask |= 1 << v
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault(popcount(adj[v] & wmask), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    out.extend(groups[key] for key in sorted(groups))
            if changed:
                cells = out
                break
    return cells


def _leaf_code(adj, lab):
    n = len(lab)
    code = 0
    for j in range(n):
        row = adj[lab[j]]
        for i in range(j):
            code = code << 1 | (row >> lab[i] & 1)
    return code


def _orbits(n, gens, fixed):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(g: SmallGraph, colors=None):
    """Individualization-refinement canonical labeling.

    Returns ``(lab, code, generators)`` where ``lab[i]`` is the vertex placed at
    canonical position ``i``, ``code`` is the integer adjacency bit string of
    the relabeled graph (minimal over the search tree), and ``generators`` are
    automorphisms found on the way. ``colors`` (one int per vertex) restricts
    labelings to color-preserving ones; color classes are ordered by value.
    """
    n = g.order
    adj = g.adj
    if colors is None:
        init = [list(range(n))] if n else []
    else:
        init = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    gens = []
    best = [None, None]  # code, lab
    first = [None, None]

    def search(cells, fixed):
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            lab = [c[0] for c in cells]
            code = _leaf_code(adj, lab)
            if first[0] is None:
                first[0], first[1] = code, lab
                best[0], best[1] = code, lab
                return
            for ref_code, ref_lab in (first, best):
                if code == ref_code:
                    perm = [0] * n
                    for a, b in zip(ref_lab, lab):
                        perm[a] = b
                    gens.append(perm)
                    return
            if code < best[0]:
                best[0], best[1] = code, lab
            return
        done = []
        for v in cells[target]:
            if done:
                orb = _orbits(n, gens, fixed)
                if any(orb[v] == orb[u] for u in done):
                    continue
            done.append(v)
            rest = [u for u in cells[target] if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:], fixed + [v])

    if n:
        search(init, [])
        return best[1], best[0], gens
    return [], 0, []


def canonical_code(g: SmallGraph, colors=None) -> bytes:
    """Isomorphism-invariant byte string: order byte followed by the canonical adjacency bits."""
    _, code, _ = canonical_labeling(g, colors)
    nbits = num_edges(g.order)
    prefix = bytes([g.order])
    if colors is not None:
        prefix += bytes(sorted(colors))
    return prefix + code.to_bytes((nbits + 7) // 8, "big")


def canonical_form(g: SmallGraph) -> SmallGraph:
    """The graph relabeled by its canonical labeling."""
    lab, _, _ = canonical_labeling(g)
    pos = [0] * g.order
    for i, v in enumerate(lab):
        pos[v] = i
    return g.relabel(pos)


def is_isomorphic(a: SmallGraph, b: SmallGraph) -> bool:
    return a.order == b.order and a.size == b.size and canonical_code(a) == canonical_code(b)


def automorphism_count(g: SmallGraph) -> int:
    """|Aut(g)|, counted as the number of edge-preserving bijections g -> g."""
    return sum(1 for _ in embeddings(g, g))


# -- copies of a target in K_n ---------------------------------------------

@lru_cache(maxsize=None)
def _local_copies(target: SmallGraph) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Distinct edge sets of the copies of ``target`` in K_p on its own p vertices."""
    p = target.order
    found = set()
    tedges = target.edges()
    for perm in permutations(range(p)):
        found.add(tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in tedges)))
    return tuple(sorted(found))


@dataclass(frozen=True, eq=False)
class EmbeddingTable:
    """Every copy of ``target`` in K_n, each as a bitset over edge indices.

    ``edges`` is the same data as an ``(copies, |E(target)|)`` int32 array
    with each row sorted ascending.
    """

    n: int
    target: SmallGraph
    copies: tuple[int, ...]
    edges: np.ndarray

    def __len__(self):
        return len(self.copies)

    def vertices_of(self, copy: int) -> tuple[int, ...]:
        pairs = edge_pairs(self.n)
        vs = set()
        for t in bits(copy):
            vs.update(pairs[t])
        return tuple(sorted(vs))

    def edge_list(self, copy: int) -> list[tuple[int, int]]:
        pairs = edge_pairs(self.n)
        return [pairs[t] for t in bits(copy)]


@lru_cache(maxsize=64)
def enumerate_copies(n: int, target: SmallGraph) -> EmbeddingTable:
    """All copies of ``target`` in K_n, sorted lexicographically by their sorted edge-index tuple.

    Isolated vertices of ``target`` only require ``n >= target.order``; the
    copies themselves are edge sets, so such targets yield fewer distinct copies
    than the automorphism formula predicts.
    """
    p = target.order
    if p > n:
        raise ValueError(f"target has {p} vertices but host K_{n} has only {n}")
    if n > MAX_HOST:
        raise ValueError(f"host order {n} exceeds {MAX_HOST}")
    local = _local_copies(target)
    rows = set()
    for vs in combinations(range(n), p):
        for cp in local:
            rows.add(tuple(sorted(edge_index(vs[a], vs[b]) for a, b in cp)))
    if target.size and any(len(set(r)) != target.size for r in rows):
        raise AssertionError("copy with repeated edges")
    ordered = sorted(rows)
    copies = tuple(sum(1 << t for t in r) for r in ordered)
    arr = np.array(ordered, dtype=np.int32).reshape(len(ordered), target.size)
    arr.setflags(write=False)
    return EmbeddingTable(n, target, copies, arr)


def expected_copy_count(n: int, target: SmallGraph) -> int:
    """``C(n, p) * p! / |Aut(target)|``."""
    from math import factorial

    p = target.order
    return comb(n, p) * factorial(p) // automorphism_count(target)
