"""Explicit lower-bound colorings, each packaged as a verifiable certificate."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .coloring import EdgeColoring, find_rainbow_copy, normalize
from .embeddings import edge_index, edge_pairs, enumerate_copies, num_edges
from .graphs import ForbiddenFamily, SmallGraph, resolve


@dataclass(frozen=True)
class Certificate:
    n: int
    target: SmallGraph
    coloring: EdgeColoring
    claimed_colors: int
    construction_tag: str

    def rainbow_copy(self) -> int | None:
        """A rainbow copy of the target as an edge bitset, or None."""
        return find_rainbow_copy(self.coloring, enumerate_copies(self.n, self.target))

    def verify(self) -> bool:
        return (self.coloring.n == self.n
                and self.claimed_colors == self.coloring.color_count
                and self.rainbow_copy() is None)


def _certificate(n, target, raw, tag):
    coloring = normalize(raw, n)
    return Certificate(n, target, coloring, coloring.color_count, tag)


def _blocks(n, parts):
    if any(s < 1 for s in parts):
        raise ValueError("part sizes must be positive")
    if sum(parts) > n:
        raise ValueError(f"parts {tuple(parts)} need {sum(parts)} vertices, K_{n} has {n}")
    out, start = [], 0
    for s in parts:
        out.append(range(start, start + s))
        start += s
    return out


def disjoint_cliques_plus_one(n: int, parts, target: SmallGraph) -> Certificate:
    """Rainbow cliques on consecutive vertex ranges, one shared color everywhere else."""
    blocks = _blocks(n, parts)
    raw = [-1] * num_edges(n)
    fresh = 0
    for block in blocks:
        for j in block:
            for i in block:
                if i < j:
                    raw[edge_index(i, j)] = fresh
                    fresh += 1
    raw = [fresh if c < 0 else c for c in raw]
    tag = "cliques=" + ",".join(str(s) for s in parts)
    return _certificate(n, target, raw, tag)


def nested_blocks(n: int, parts, target: SmallGraph) -> Certificate:
    """Rainbow cliques on consecutive blocks; all edges from block ``i`` to later
    blocks (or to leftover vertices) share one color per ``i``."""
    blocks = _blocks(n, parts)
    where = [len(blocks)] * n
    for b, block in enumerate(blocks):
        for v in block:
            where[v] = b
    raw = []
    inner = 0
    for i, j in edge_pairs(n):
        a, b = where[i], where[j]
        if a == b and a < len(blocks):
            raw.append(("in", inner))
            inner += 1
        else:
            raw.append(("out", min(a, b)))
    tag = "nested=" + ",".join(str(s) for s in parts)
    return _certificate(n, target, raw, tag)


def bull_cycle_partition(n: int) -> Certificate:
    """Vertex-disjoint triangles and 4-cycles covering K_n, rainbow, plus one color."""
    if n < 6:
        raise ValueError("cycle partition needs n >= 6")
    r = n % 3
    cycles = [3] * (n // 3 - r) + [4] * r
    raw = [-1] * num_edges(n)
    start = fresh = 0
    for length in cycles:
        vs = range(start, start + length)
        for a in range(length):
            raw[edge_index(vs[a], vs[(a + 1) % length])] = fresh
            fresh += 1
        start += length
    raw = [fresh if c < 0 else c for c in raw]
    return _certificate(n, resolve("bull"), raw, "cycle-partition")


def k23_special(n: int) -> Certificate:
    """Hand colorings avoiding a rainbow K_{2,3}: 9 colors on K_6, 11 on K_7."""
    raw = [-1] * num_edges(n)

    def rainbow(vs, first):
        c = first
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                raw[edge_index(vs[a], vs[b])] = c
                c += 1
        return c

    if n == 6:
        rainbow(range(4), 1)
        raw[edge_index(4, 5)] = 7
        for i in range(4):
            raw[edge_index(4, i)] = 8
            raw[edge_index(5, i)] = 9
    elif n == 7:
        rainbow(range(3), 1)
        rainbow(range(3, 7), 4)
        for i in range(3, 7):
            raw[edge_index(0, i)] = 10
            raw[edge_index(1, i)] = 11
            raw[edge_index(2, i)] = 11
    else:
        raise ValueError("k23 special construction exists for n = 6 and n = 7 only")
    return _certificate(n, resolve("K2,3"), raw, "k23-special")


def extremal_plus_one(n: int, fam: ForbiddenFamily, target: SmallGraph,
                      witness: SmallGraph | None = None, cfg=None) -> Certificate:
    """Rainbow copy of an extremal ``fam``-free graph, one extra color elsewhere.

    Runs the Turán search unless an extremal ``witness`` is supplied.
    """
    from .search import SearchTimeout, turan_exact

    if witness is None:
        outcome = turan_exact(n, fam, cfg)
        if not outcome.exact:
            raise SearchTimeout(f"Turán search for n={n} did not finish", outcome.nodes_explored)
        witness = outcome.witness
    if witness.order != n:
        raise ValueError("witness order differs from n")
    raw = [-1] * num_edges(n)
    for c, (i, j) in enumerate(witness.edges()):
        raw[edge_index(i, j)] = c
    raw = [witness.size if c < 0 else c for c in raw]
    return _certificate(n, target, raw, "extremal-plus-one")


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for s in range(min(n, largest), 0, -1):
        for rest in _partitions(n - s, s):
            yield (s,) + rest


def candidate_certificates(n: int, target: SmallGraph):
    """Verified constructions for ``(n, target)``, used to seed exact searches."""
    mono = _certificate(n, target, [0] * num_edges(n), "monochromatic")
    if target.size >= 2:
        yield mono
    seen = set()
    for parts in _partitions(n):
        parts = tuple(s for s in parts if s > 1)
        if not parts or sum(comb(s, 2) for s in parts) + 1 <= 1:
            continue
        for p in (parts, parts[::-1]):
            for build in (disjoint_cliques_plus_one, nested_blocks):
                cert = build(n, p, target)
                key = cert.coloring.colors
                if key in seen:
                    continue
                seen.add(key)
                if cert.verify():
                    yield cert
    specials = []
    if target == resolve("bull") and n >= 6:
        specials.append(lambda: bull_cycle_partition(n))
    if target == resolve("K2,3") and n in (6, 7):
        specials.append(lambda: k23_special(n))
    for make in specials:
        cert = make()
        if cert.verify():
            yield cert
