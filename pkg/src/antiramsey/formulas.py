"""Closed-form rainbow-number bounds, published tables, and target classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, sqrt
from typing import Callable

from .embeddings import is_isomorphic
from .graphs import SmallGraph, cycle, cycle_length, cycle_plus, cyclomatic

SUPERLINEAR = "superlinear"
UNICYCLIC_BOUNDED = "unicyclic-bounded"
CYCLE_EXACT = "cycle-exact"
CYCLE_PLUS_PENDANT_EXACT = "cycle-plus-pendant-exact"
OUT_OF_SCOPE = "out-of-theorem-scope"


def rb_cycle(n: int, k: int) -> int:
    """Rainbow number of the k-cycle in K_n."""
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    q, r = divmod(n, k - 1)
    return q * comb(k - 1, 2) + comb(r, 2) + -(-n // (k - 1))


def unicyclic_bounds(p: int, k: int, n: int) -> tuple[int, int]:
    """Bounds on rb(K_n, H) for unicyclic H on p >= 5 vertices whose cycle has 3 <= k <= p-2 vertices."""
    if p < 5:
        raise ValueError("needs p >= 5")
    if not 3 <= k <= p - 2:
        raise ValueError(f"cycle length {k} outside 3..{p - 2}")
    if n < p:
        raise ValueError(f"needs n >= p, got n={n}, p={p}")
    return rb_cycle(n, k), (p - 2) * n - p * (p - 3) // 2


@dataclass(frozen=True)
class SandwichBounds:
    """rb bounds from Turán numbers; ``consistent`` is False when lower exceeds upper."""

    lower: int
    upper: int

    @property
    def consistent(self) -> bool:
        return self.lower <= self.upper


def sandwich_bounds(n: int, target: SmallGraph, ext_family_value: int, ext_target_value: int) -> SandwichBounds:
    """``ext(n, H-e family) + 2 <= rb(n, H) <= ext(n, H) + 1``."""
    return SandwichBounds(ext_family_value + 2, ext_target_value + 1)


def girth_bound(n: int) -> float:
    """Upper bound ``n * sqrt(n - 1) / 2`` on ext(n, {C3, C4})."""
    return 0.5 * n * sqrt(n - 1)


@dataclass(frozen=True)
class Classification:
    kind: str
    lower: Callable[[int], int] | None = field(default=None, compare=False)
    upper: Callable[[int], int] | None = field(default=None, compare=False)
    notes: str = ""
    min_n: int = 0

    def bounds(self, n: int) -> tuple[int | None, int | None]:
        if n < self.min_n:
            return None, None
        lo = self.lower(n) if self.lower else None
        hi = self.upper(n) if self.upper else None
        return lo, hi


def classify(target: SmallGraph) -> Classification:
    """Place ``target`` in the cyclomatic-number trichotomy.

    Graphs outside every theorem's hypotheses (trees, disconnected graphs,
    unicyclic graphs whose cycle is too long and that are not C_k^+) get
    ``out-of-theorem-scope`` rather than an extrapolated bound.
    """
    p, v = target.order, cyclomatic(target)
    if target.size == 0 or not target.is_connected():
        return Classification(OUT_OF_SCOPE, notes="disconnected or edgeless")
    if v == 1:
        k = cycle_length(target)
        if p == k and is_isomorphic(target, cycle(k)):
            f = lambda n, k=k: rb_cycle(n, k)
            return Classification(CYCLE_EXACT, f, f, f"C_{k}: exact cycle formula", min_n=k)
        if p == k + 1 and is_isomorphic(target, cycle_plus(k)):
            f = lambda n, k=k: rb_cycle(n, k)
            return Classification(CYCLE_PLUS_PENDANT_EXACT, f, f,
                                  f"C_{k}^+: same value as C_{k} for n >= {k + 1}", min_n=k + 1)
        if p >= 5 and 3 <= k <= p - 2:
            return Classification(
                UNICYCLIC_BOUNDED,
                lambda n, k=k: rb_cycle(n, k),
                lambda n, p=p: (p - 2) * n - p * (p - 3) // 2,
                f"unicyclic, p={p}, cycle length {k}: linear bounds", min_n=p)
        return Classification(OUT_OF_SCOPE, notes=f"unicyclic with cycle length {k} of {p} vertices")
    if v >= 2 and p >= 4:
        return Classification(SUPERLINEAR, notes=f"cyclomatic number {v}: no linear upper bound")
    return Classification(OUT_OF_SCOPE, notes="acyclic")


@dataclass(frozen=True)
class PaperTables:
    """Published values; every test and report reads constants from here."""

    ext_c3_c4: dict[int, int]
    rb: dict[str, dict[int, int]]

    def rb_value(self, tag: str, n: int) -> int | None:
        if tag == "bull":
            if n == 5:
                return 6
            return n + 2 if n >= 6 else None
        return self.rb.get(tag, {}).get(n)


def paper_tables() -> PaperTables:
    ext = dict(zip(range(4, 17), (3, 5, 6, 8, 10, 12, 15, 16, 18, 21, 23, 26, 28)))
    rb = {
        "diamond": {4: 5, **dict(zip(range(5, 11), (7, 8, 10, 12, 14, 17)))},
        "house": dict(zip(range(5, 9), (8, 9, 11, 14))),
        "K2,3": dict(zip(range(5, 9), (8, 10, 12, 14))),
    }
    return PaperTables(ext, rb)


# original names of the bound helpers
theorem5_bounds = unicyclic_bounds
eq1_bounds = sandwich_bounds
Eq1Bounds = SandwichBounds
