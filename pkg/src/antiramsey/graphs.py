"""Small undirected simple graphs stored as per-vertex adjacency bitsets.

Every named graph in the catalog carries a fixed 0-based labeling so that
embedding tables and certificates built from it are reproducible:

========== ==========================================================
tag        frozen labeling
========== ==========================================================
bull       triangle 0-1-2, pendant edges 1-3 and 2-4
diamond    K4 on 0..3 minus the edge 2-3
house      square 0-1-2-3-0, roof vertex 4 joined to 0 and 1
K_{s,t}    parts {0..s-1} and {s..s+t-1}
C_k        cycle 0-1-...-(k-1)-0
C_k+       C_k plus pendant edge 0-k
P_k        path 0-1-...-(k-1) on k vertices
K_k        complete graph on 0..k-1
K_{1,k}    centre 0, leaves 1..k
K_{1,3}+e  centre 0, leaves 1,2,3, extra edge 1-2
Z_2        triangle 0-1-2 with path 2-3-4
W_5        rim cycle 0-1-2-3-4-0, hub 5
TC_5       cycle 0-1-2-3-4-0 with chords 0-2 and 0-3
========== ==========================================================
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from itertools import combinations

MAX_ORDER = 16
"""Hard cap on vertex count. Rainbow searches use a stricter host cap of 12."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int):
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class SmallGraph:
    order: int
    adj: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be in 0..{MAX_ORDER}, got {self.order}")
        if len(self.adj) != self.order:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.order - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, order: int, edges, name: str | None = None) -> SmallGraph:
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge {u}-{v} outside 0..{order - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, tuple(adj), name)

    @property
    def size(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j``, in canonical edge-index order (by ``j`` then ``i``)."""
        return [(i, j) for j in range(self.order) for i in range(j) if self.adj[j] >> i & 1]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def components(self) -> list[int]:
        """Vertex bitsets of the connected components."""
        seen = 0
        comps = []
        for v in range(self.order):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, vertices) -> SmallGraph:
        """Induced subgraph on ``vertices``, relabeled 0.. in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return SmallGraph.from_edges(
            len(vs), [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        )

    def without_isolated(self) -> SmallGraph:
        keep = [v for v in range(self.order) if self.adj[v]]
        return self.induced(keep)

    def relabel(self, perm) -> SmallGraph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return SmallGraph.from_edges(self.order, [(perm[u], perm[v]) for u, v in self.edges()], self.name)

    def remove_edge(self, u: int, v: int) -> SmallGraph:
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return SmallGraph(self.order, tuple(adj))

    def add_vertex(self, neighbours: int) -> SmallGraph:
        """Append vertex ``order`` adjacent to the vertex bitset ``neighbours``."""
        v = self.order
        adj = [row | ((neighbours >> u & 1) << v) for u, row in enumerate(self.adj)]
        adj.append(neighbours)
        return SmallGraph(v + 1, tuple(adj))

    def complement(self) -> SmallGraph:
        full = (1 << self.order) - 1
        return SmallGraph(self.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def __repr__(self):
        label = self.name or to_literal(self)
        return f"SmallGraph({label!r})"


def degree_sequence(g: SmallGraph) -> tuple[int, ...]:
    return tuple(sorted(g.degree(v) for v in range(g.order)))


def cyclomatic(g: SmallGraph) -> int:
    """``|E| - |V| + c`` with ``c`` the number of components.

    For a connected graph this is the usual cyclomatic number; for a
    disconnected one it is the sum of the per-component values.
    """
    return g.size - g.order + len(g.components())


def cycle_length(g: SmallGraph) -> int | None:
    """Length of the unique cycle of a connected unicyclic graph, else None."""
    if not g.is_connected() or cyclomatic(g) != 1:
        return None
    alive = (1 << g.order) - 1
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if popcount(g.adj[v] & alive) <= 1:
                alive &= ~(1 << v)
                changed = True
    return popcount(alive)


# -- catalog ---------------------------------------------------------------

def cycle(k: int) -> SmallGraph:
    _check_param("C", k, 3)
    return SmallGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)], f"C{k}")


def cycle_plus(k: int) -> SmallGraph:
    _check_param("C+", k, 3, MAX_ORDER - 1)
    return SmallGraph.from_edges(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(0, k)], f"C{k}+")


def path(k: int) -> SmallGraph:
    _check_param("P", k, 1)
    return SmallGraph.from_edges(k, [(i, i + 1) for i in range(k - 1)], f"P{k}")


def complete(k: int) -> SmallGraph:
    _check_param("K", k, 1)
    return SmallGraph.from_edges(k, combinations(range(k), 2), f"K{k}")


def complete_bipartite(s: int, t: int) -> SmallGraph:
    _check_param("K_{s,t}", s + t, 2)
    if s < 1 or t < 1:
        raise ValueError("complete bipartite parts must be non-empty")
    return SmallGraph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)], f"K{s},{t}")


def _check_param(tag, k, lo, hi=MAX_ORDER):
    if not lo <= k <= hi:
        raise ValueError(f"{tag} parameter {k} outside {lo}..{hi}")


_FIXED = {
    "bull": (5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
    "diamond": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "house": (5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)]),
    "K1,3+e": (4, [(0, 1), (0, 2), (0, 3), (1, 2)]),
    "Z2": (5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]),
    "W5": (6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)]),
    "TC5": (5, [(i, (i + 1) % 5) for i in range(5)] + [(0, 2), (0, 3)]),
}

_ALIASES = {"d": "diamond", "b": "bull", "h": "house", "k4-e": "diamond", "k1,3+e": "K1,3+e",
            "z2": "Z2", "w5": "W5", "tc5": "TC5", "bull": "bull", "diamond": "diamond",
            "house": "house"}


def resolve(name: str) -> SmallGraph:
    """Look up a catalog graph by tag, e.g. ``bull``, ``C5``, ``C_4^+``, ``K_{2,3}``, ``P5``.

    A graph literal such as ``5:0-1,0-2`` is also accepted.
    """
    if ":" in name:
        return parse_literal(name)
    key = re.sub(r"[\s_{}^]", "", name).lower()
    key = key.replace("plus", "+")
    if key in _ALIASES:
        tag = _ALIASES[key]
        order, edges = _FIXED[tag]
        return SmallGraph.from_edges(order, edges, tag)
    if m := re.fullmatch(r"c(\d+)(\+)?", key):
        k = int(m.group(1))
        return cycle_plus(k) if m.group(2) else cycle(k)
    if m := re.fullmatch(r"p(\d+)", key):
        return path(int(m.group(1)))
    if m := re.fullmatch(r"k(\d+)", key):
        return complete(int(m.group(1)))
    if m := re.fullmatch(r"k(\d+),(\d+)", key):
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"unknown graph tag {name!r}")


CATALOG_TAGS = ("bull", "diamond", "house", "K2,3", "K2,4", "C3", "C4", "C5", "C6", "C3+", "C4+",
                "C5+", "P3", "P4", "P5", "K2", "K3", "K4", "K5", "K1,3", "K1,4", "K1,3+e", "Z2",
                "W5", "TC5")


# -- graph literals --------------------------------------------------------

def to_literal(g: SmallGraph) -> str:
    """Serialize as ``p:i-j,i-j,...`` with edges in canonical edge order."""
    return f"{g.order}:" + ",".join(f"{i}-{j}" for i, j in g.edges())


def parse_literal(text: str) -> SmallGraph:
    """Parse ``p:i-j,...``; for ``p <= 10`` the dash may be omitted (``5:01,02``)."""
    head, _, body = text.strip().partition(":")
    try:
        order = int(head)
    except ValueError:
        raise ValueError(f"bad graph literal {text!r}: order {head!r} is not an integer") from None
    edges = []
    for item in filter(None, body.split(",")):
        item = item.strip()
        if "-" in item:
            a, b = item.split("-", 1)
        elif order <= 10 and len(item) == 2:
            a, b = item
        else:
            raise ValueError(f"bad edge {item!r} in graph literal {text!r}")
        edges.append((int(a), int(b)))
    if len(set(frozenset(e) for e in edges)) != len(edges):
        raise ValueError(f"repeated edge in graph literal {text!r}")
    return SmallGraph.from_edges(order, edges)


def graph_label(g: SmallGraph) -> str:
    """Catalog tag if the graph is an unmodified catalog entry, else its literal."""
    if g.name:
        try:
            if resolve(g.name) == g:
                return g.name
        except ValueError:
            pass
    return to_literal(g)


# -- subgraph containment ----------------------------------------------------

def _match_order(pattern: SmallGraph, first: int | None = None) -> list[int]:
    """Pattern vertex order: greedy max connections to already-placed vertices."""
    remaining = set(range(pattern.order))
    order = []
    placed = 0
    if first is not None:
        order.append(first)
        remaining.discard(first)
        placed = 1 << first
    while remaining:
        v = max(remaining, key=lambda x: (popcount(pattern.adj[x] & placed), pattern.degree(x), -x))
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v
    return order


def embeddings(pattern: SmallGraph, host: SmallGraph, through: int | None = None):
    """Yield injective edge-preserving maps ``pattern -> host`` as tuples.

    With ``through`` set, only maps whose image contains host vertex
    ``through`` are produced.
    """
    p = pattern.order
    if p > host.order:
        return
    if p == 0:
        if through is None:
            yield ()
        return
    full = (1 << host.order) - 1
    pdeg = [pattern.degree(v) for v in range(p)]
    hdeg = [host.degree(v) for v in range(host.order)]
    starts = [None] if through is None else list(range(p))
    seen = set()
    for start in starts:
        order = _match_order(pattern, start)
        back = [[u for u in order[:i] if pattern.adj[order[i]] >> u & 1] for i in range(p)]
        image = [-1] * p

        def extend(i, used):
            if i == p:
                yield tuple(image)
                return
            x = order[i]
            if i == 0 and start is not None:
                cand = 1 << through
            else:
                cand = full & ~used
                for u in back[i]:
                    cand &= host.adj[image[u]]
            for v in bits(cand):
                if hdeg[v] < pdeg[x]:
                    continue
                image[x] = v
                yield from extend(i + 1, used | 1 << v)
            image[x] = -1

        for emb in extend(0, 0):
            if through is None:
                yield emb
            elif emb not in seen:
                seen.add(emb)
                yield emb


def contains_subgraph(g: SmallGraph, h: SmallGraph, through: int | None = None) -> bool:
    """Non-induced containment; isolated vertices of ``h`` only require ``g`` to be large enough."""
    if h.order > g.order:
        return False
    core = h.without_isolated()
    if core.size > g.size:
        return False
    return next(embeddings(core, g, through), None) is not None


# -- forbidden families ----------------------------------------------------

@dataclass(frozen=True)
class ForbiddenFamily:
    """A set of graphs, pairwise non-isomorphic, in (order, size, canonical code) order."""

    members: tuple[SmallGraph, ...]

    def __init__(self, members):
        from .embeddings import canonical_code

        unique = {}
        for g in members:
            unique.setdefault(canonical_code(g), g)
        ordered = sorted(unique.items(), key=lambda kv: (kv[1].order, kv[1].size, kv[0]))
        object.__setattr__(self, "members", tuple(g for _, g in ordered))
        for a, b in combinations(self.members, 2):
            small, big = (a, b) if a.size <= b.size else (b, a)
            if contains_subgraph(big, small):
                warnings.warn(f"family member {small!r} is a subgraph of {big!r}", stacklevel=2)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def codes(self) -> tuple[bytes, ...]:
        from .embeddings import canonical_code

        return tuple(canonical_code(g) for g in self.members)

    def is_free(self, g: SmallGraph, through: int | None = None) -> bool:
        return not any(contains_subgraph(g, h, through) for h in self.members)


def minus_edge_family(h: SmallGraph) -> ForbiddenFamily:
    """All graphs ``h - e`` up to isomorphism (isolated vertices kept)."""
    if h.size == 0:
        raise ValueError("graph has no edges")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return ForbiddenFamily(h.remove_edge(u, v) for u, v in h.edges())


def family(*graphs) -> ForbiddenFamily:
    """Build a family from graphs or catalog tags."""
    return ForbiddenFamily(resolve(g) if isinstance(g, str) else g for g in graphs)
