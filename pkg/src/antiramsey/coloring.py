"""Edge-colorings of K_n, color-class bookkeeping, and rainbow-copy detection."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .embeddings import EmbeddingTable, edge_index, edge_pairs, num_edges
from .graphs import bits, popcount


@dataclass(frozen=True)
class EdgeColoring:
    """Coloring of K_n as color ids per edge index, in restricted-growth form.

    Build instances with :func:`normalize`; the constructor only validates.
    """

    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != num_edges(self.n):
            raise ValueError(f"expected {num_edges(self.n)} edge colors for K_{self.n}, got {len(self.colors)}")
        top = -1
        for c in self.colors:
            if c < 0 or c > top + 1:
                raise ValueError("colors are not in restricted-growth form; use normalize()")
            top = max(top, c)

    @property
    def color_count(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def color(self, i: int, j: int) -> int:
        return self.colors[edge_index(i, j)]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.colors, dtype=np.int64)


def normalize(raw, n: int) -> EdgeColoring:
    """Relabel colors by first appearance (restricted-growth form)."""
    raw = list(raw)
    if len(raw) != num_edges(n):
        raise ValueError(f"expected {num_edges(n)} edge colors for K_{n}, got {len(raw)}")
    relabel = {}
    return EdgeColoring(n, tuple(relabel.setdefault(c, len(relabel)) for c in raw))


def merge_colors(c: EdgeColoring, a: int, b: int) -> EdgeColoring:
    """Recolor class ``b`` with ``a`` and renormalize."""
    return normalize([a if x == b else x for x in c.colors], c.n)


@dataclass(frozen=True)
class ColorClassView:
    """Per-color edge sets ``E_i``, per-vertex unique colors ``S(v)``, and the star colors.

    All sets are bitsets: ``classes[i]`` over edge indices, ``unique[v]`` and
    ``star_colors`` over color ids.
    """

    n: int
    classes: tuple[int, ...]
    unique: tuple[int, ...]
    star_colors: int

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(popcount(e) for e in self.classes)

    def unique_at(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.unique[v]))

    @cached_property
    def counts(self) -> tuple[int, int, int]:
        """``(c1, c2, c3)``: star colors with one edge, star colors with more, the rest."""
        sizes = self.class_sizes()
        c1 = sum(1 for i in bits(self.star_colors) if sizes[i] == 1)
        c2 = sum(1 for i in bits(self.star_colors) if sizes[i] >= 2)
        return c1, c2, len(self.classes) - c1 - c2


def color_classes(c: EdgeColoring) -> ColorClassView:
    pairs = edge_pairs(c.n)
    classes = [0] * c.color_count
    touch = [0] * c.color_count  # vertices incident to every edge of the class
    for t, col in enumerate(c.colors):
        classes[col] |= 1 << t
    full = (1 << c.n) - 1
    for col, es in enumerate(classes):
        common = full
        for t in bits(es):
            i, j = pairs[t]
            common &= (1 << i) | (1 << j)
        touch[col] = common
    unique = [0] * c.n
    for col, vs in enumerate(touch):
        for v in bits(vs):
            unique[v] |= 1 << col
    star = 0
    for u in unique:
        star |= u
    return ColorClassView(c.n, tuple(classes), tuple(unique), star)


def unique_colors_at(c: EdgeColoring, vertices, w: int) -> frozenset[int]:
    """Colors on the subgraph of K_n induced by ``vertices`` whose edges there all meet ``w``."""
    vs = sorted(set(vertices))
    if w not in vs:
        raise ValueError(f"vertex {w} is not in the vertex subset")
    touches_w: dict[int, bool] = {}
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            col = c.color(vs[a], vs[b])
            at_w = w in (vs[a], vs[b])
            touches_w[col] = touches_w.get(col, True) and at_w
    return frozenset(col for col, ok in touches_w.items() if ok)


def colors_on(c: EdgeColoring, vertices) -> frozenset[int]:
    """Colors used on the subgraph induced by ``vertices``."""
    vs = sorted(set(vertices))
    return frozenset(c.color(vs[a], vs[b]) for a in range(len(vs)) for b in range(a + 1, len(vs)))


def rainbow_mask(colors: np.ndarray, table: EmbeddingTable) -> np.ndarray:
    """Boolean mask over the table: which copies are rainbow under ``colors``."""
    if len(table) == 0:
        return np.zeros(0, dtype=bool)
    per_copy = np.sort(np.asarray(colors)[table.edges], axis=1)
    return np.all(per_copy[:, 1:] != per_copy[:, :-1], axis=1)


def find_rainbow_copy(c: EdgeColoring, table: EmbeddingTable) -> int | None:
    """First copy in table order whose edges all have distinct colors, as an edge bitset."""
    if table.n != c.n:
        raise ValueError(f"table is for K_{table.n}, coloring is for K_{c.n}")
    hits = np.flatnonzero(rainbow_mask(c.as_array(), table))
    return table.copies[hits[0]] if len(hits) else None
