"""Exact engines: anti-Ramsey numbers by coloring search, Turán numbers by orderly generation."""

from __future__ import annotations

import logging
import multiprocessing
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from . import _kernel as K
from .coloring import EdgeColoring, find_rainbow_copy, merge_colors, normalize
from .embeddings import (MAX_HOST, canonical_code, canonical_labeling, edge_index, edge_pairs,
                         enumerate_copies, num_edges)
from .graphs import MAX_ORDER, ForbiddenFamily, SmallGraph, bits, popcount

log = logging.getLogger(__name__)

EXACT = "exact"
LOWER_BOUND_ONLY = "lower-bound-only"
CHUNK = 200_000


class SearchTimeout(Exception):
    """A decision search ran out of time or nodes before reaching an answer."""

    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes


@dataclass(frozen=True)
class SearchConfig:
    """Budget and parallelism for a search. ``worker_count`` never changes results."""

    timeout: float = 300.0
    worker_count: int = field(default_factory=lambda: os.cpu_count() or 1)
    node_limit: int | None = None
    split_depth: int = 6
    symmetry: str = "auto"

    def __post_init__(self):
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")
        if self.symmetry not in ("auto", "full", "transpositions", "none"):
            raise ValueError(f"unknown symmetry mode {self.symmetry!r}")


@dataclass
class SearchOutcome:
    value: int
    witness: EdgeColoring | SmallGraph | None
    nodes_explored: int
    elapsed: float
    status: str
    kind: str = "f"

    @property
    def rb(self) -> int:
        """Rainbow number ``f + 1``; only meaningful for coloring searches."""
        return self.value + 1

    @property
    def exact(self) -> bool:
        return self.status == EXACT


# -- coloring search ---------------------------------------------------------

@lru_cache(maxsize=16)
def _edge_perms(n: int, mode: str) -> np.ndarray:
    pairs = edge_pairs(n)
    if mode == "none" or n < 2:
        vperms = []
    elif mode == "full" or (mode == "auto" and n <= 6):
        vperms = [p for p in permutations(range(n)) if list(p) != list(range(n))]
    else:
        vperms = []
        for a in range(n):
            for b in range(a + 1, n):
                p = list(range(n))
                p[a], p[b] = b, a
                vperms.append(p)
                for c in range(b + 1, n):
                    p = list(range(n))
                    p[a], p[b], p[c] = b, c, a
                    vperms.append(p)
                    p = list(range(n))
                    p[a], p[b], p[c] = c, a, b
                    vperms.append(p)
    arr = np.array([[edge_index(p[i], p[j]) for i, j in pairs] for p in vperms],
                   dtype=np.int32).reshape(len(vperms), len(pairs))
    return arr


@dataclass(eq=False)
class _Problem:
    n: int
    m: int
    k: int
    copies: np.ndarray
    cp_ptr: np.ndarray
    cp_idx: np.ndarray
    perms: np.ndarray
    sym_depth: int

    @classmethod
    def build(cls, n, target, k, symmetry):
        table = enumerate_copies(n, target)
        m = num_edges(n)
        copies = np.ascontiguousarray(table.edges, dtype=np.int32)
        lists = [[] for _ in range(m)]
        for j, row in enumerate(copies):
            for e in row:
                lists[e].append(j)
        cp_ptr = np.zeros(m + 1, dtype=np.int32)
        cp_ptr[1:] = np.cumsum([len(x) for x in lists])
        cp_idx = np.array([j for x in lists for j in x], dtype=np.int32)
        perms = _edge_perms(n, symmetry)
        return cls(n, m, k, copies, cp_ptr, cp_idx, perms, m)

    def new_state(self):
        m, c = self.m, len(self.copies)
        return dict(
            colors=np.full(m, -1, np.int64), choice=np.full(m + 1, -1, np.int64),
            used_at=np.zeros(m + 1, np.int64), undo_at=np.zeros(m + 1, np.int64),
            unc=np.zeros(c, np.int64), mask=np.zeros(m, np.int64), ffor=np.zeros(m, np.int64),
            undo_e=np.zeros(c + 1, np.int64), undo_m=np.zeros(c + 1, np.int64),
            relabel=np.full(self.k + 1, -1, np.int64), state=np.zeros(K.STATE_LEN, np.int64))

    def init(self, st, prefix):
        return K.init_state(np.asarray(prefix, dtype=np.int64), self.m, self.k, self.copies,
                            self.cp_ptr, self.cp_idx, self.perms, self.sym_depth, st["colors"],
                            st["choice"], st["used_at"], st["undo_at"], st["unc"], st["mask"],
                            st["ffor"], st["undo_e"], st["undo_m"], st["relabel"], st["state"])

    def step(self, st, budget, stop_depth=-1, out=None):
        if out is None:
            out = np.zeros((1, 1), np.int64)
        return K.run(self.m, self.k, stop_depth, budget, self.copies, self.cp_ptr, self.cp_idx,
                     self.perms, self.sym_depth, st["colors"], st["choice"], st["used_at"],
                     st["undo_at"], st["unc"], st["mask"], st["ffor"], st["undo_e"], st["undo_m"],
                     st["relabel"], st["state"], out)


def _run_subtree(problem, prefix, deadline, node_cap):
    """Search below ``prefix``. Returns ``(status, colors or None, nodes)``."""
    st = problem.new_state()
    if problem.init(st, prefix) == K.DEAD:
        return K.EXHAUSTED, None, 0
    while True:
        budget = CHUNK if node_cap is None else max(0, min(CHUNK, node_cap - st["state"][K.NODES]))
        if budget == 0:
            return K.PAUSED, None, int(st["state"][K.NODES])
        status = problem.step(st, budget)
        nodes = int(st["state"][K.NODES])
        if status == K.FOUND:
            return K.FOUND, st["colors"].copy(), nodes
        if status == K.EXHAUSTED:
            return K.EXHAUSTED, None, nodes
        if time.time() > deadline:
            return K.PAUSED, None, nodes


def _collect_prefixes(problem, depth):
    st = problem.new_state()
    out = np.zeros((4096, depth), np.int64)
    prefixes = []
    if problem.init(st, []) == K.DEAD:
        return prefixes, 0
    while True:
        status = problem.step(st, 1 << 62, stop_depth=depth, out=out)
        prefixes.extend(map(tuple, out[: st["state"][K.NOUT]].tolist()))
        st["state"][K.NOUT] = 0
        if status == K.EXHAUSTED:
            return prefixes, int(st["state"][K.NODES])
        if status == K.FOUND:
            # the whole coloring is shorter than the split depth
            prefixes.append(tuple(st["colors"].tolist()))


_WORKER_PROBLEM = None


def _worker_init(problem):
    global _WORKER_PROBLEM
    _WORKER_PROBLEM = problem


def _worker_task(prefix, deadline, node_cap):
    return _run_subtree(_WORKER_PROBLEM, prefix, deadline, node_cap)


def _decide(n, target, k, cfg: SearchConfig):
    """Three-valued decision: returns ``(status, coloring, nodes)`` with status
    ``"feasible"``, ``"infeasible"`` or ``"unknown"``."""
    m = num_edges(n)
    if k < 1:
        raise ValueError("color count must be at least 1")
    if n > MAX_HOST:
        raise ValueError(f"host order {n} exceeds {MAX_HOST}")
    if k > m or target.size == 0:
        return "infeasible", None, 0
    if k > 62:
        raise ValueError("at most 62 colors are supported")
    problem = _Problem.build(n, target, k, cfg.symmetry)
    deadline = time.time() + cfg.timeout
    if cfg.worker_count == 1:
        status, colors, nodes = _run_subtree(problem, [], deadline, cfg.node_limit)
        return _finish(status, colors, nodes, n)

    prefixes, nodes = _collect_prefixes(problem, min(cfg.split_depth, m))
    if not prefixes:
        return "infeasible", None, nodes
    cap = None if cfg.node_limit is None else max(1, cfg.node_limit // len(prefixes))
    ctx = multiprocessing.get_context("fork")
    unknown = False
    with ProcessPoolExecutor(cfg.worker_count, mp_context=ctx, initializer=_worker_init,
                             initargs=(problem,)) as pool:
        futures = [pool.submit(_worker_task, p, deadline, cap) for p in prefixes]
        try:
            # results are consumed in prefix order, so the witness is the
            # lexicographically first one regardless of scheduling
            for fut in futures:
                status, colors, sub = fut.result()
                nodes += sub
                if status == K.FOUND:
                    return _finish(status, colors, nodes, n)
                if status == K.PAUSED:
                    unknown = True
        finally:
            for fut in futures:
                fut.cancel()
    return ("unknown" if unknown else "infeasible"), None, nodes


def _finish(status, colors, nodes, n):
    if status == K.FOUND:
        return "feasible", normalize(colors.tolist(), n), nodes
    if status == K.EXHAUSTED:
        return "infeasible", None, nodes
    return "unknown", None, nodes


def decide_colorable(n: int, target: SmallGraph, k: int, cfg: SearchConfig | None = None) -> EdgeColoring | None:
    """A ``k``-coloring of K_n with no rainbow ``target``, or None if none exists.

    Raises :class:`SearchTimeout` when the budget runs out before an answer.
    """
    status, coloring, nodes = _decide(n, target, k, cfg or SearchConfig())
    if status == "unknown":
        raise SearchTimeout(f"undecided: n={n}, k={k}", nodes)
    return coloring


def seed_certificate(n: int, target: SmallGraph):
    """Best verified construction available for ``(n, target)``: a ``(colors, coloring)`` pair."""
    from .constructions import candidate_certificates

    best = None
    for cert in candidate_certificates(n, target):
        if best is None or cert.claimed_colors > best.claimed_colors:
            best = cert
    return best


def f_exact(n: int, target: SmallGraph, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Maximum number of colors on K_n with no rainbow ``target``.

    Starts from the best construction and climbs one color at a time until
    the decision search proves the next count impossible.
    """
    cfg = cfg or SearchConfig()
    if target.order > n:
        raise ValueError(f"target has {target.order} vertices, host K_{n} only {n}")
    start = time.time()
    if target.size == 0:
        raise ValueError("target has no edges")
    if target.size == 1:
        # convention: one color is always allowed, two always produce a rainbow edge
        return SearchOutcome(1, normalize([0] * num_edges(n), n), 0, time.time() - start, EXACT)
    cert = seed_certificate(n, target)
    best, value = cert.coloring, cert.claimed_colors
    nodes = 0
    while value < num_edges(n):
        remaining = cfg.timeout - (time.time() - start)
        if remaining <= 0:
            return SearchOutcome(value, best, nodes, time.time() - start, LOWER_BOUND_ONLY)
        sub = SearchConfig(remaining, cfg.worker_count, cfg.node_limit, cfg.split_depth, cfg.symmetry)
        t0 = time.time()
        status, coloring, used = _decide(n, target, value + 1, sub)
        nodes += used
        dt = time.time() - t0
        log.info("n=%d k=%d %s nodes=%d (%.0f nodes/s)", n, value + 1, status, used,
                 used / dt if dt > 0 else 0.0)
        if status == "feasible":
            best, value = coloring, value + 1
        elif status == "infeasible":
            break
        else:
            return SearchOutcome(value, best, nodes, time.time() - start, LOWER_BOUND_ONLY)
    assert find_rainbow_copy(best, enumerate_copies(n, target)) is None
    return SearchOutcome(value, best, nodes, time.time() - start, EXACT)


def rb_exact(n: int, target: SmallGraph, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Like :func:`f_exact`; read the rainbow number from ``outcome.rb``."""
    out = f_exact(n, target, cfg)
    out.kind = "rb"
    return out


def reduce_colors(c: EdgeColoring, k: int) -> EdgeColoring:
    """Merge the highest color classes into color 0 until ``k`` remain."""
    while c.color_count > k:
        c = merge_colors(c, 0, c.color_count - 1)
    return c


# -- Turán search ------------------------------------------------------------

def _greedy_free(n, members, seed):
    rng = np.random.default_rng(seed)
    order = list(edge_pairs(n))
    if seed:
        rng.shuffle(order)
    g = SmallGraph(n, (0,) * n)
    for i, j in order:
        adj = list(g.adj)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        h = SmallGraph(n, tuple(adj))
        if all(not _has_member_through_edge(h, f, i, j) for f in members):
            g = h
    return g


def _has_member_through_edge(g, member, i, j):
    from .graphs import embeddings

    core = member
    for emb in embeddings(core, g, through=i):
        img = set(emb)
        if j in img:
            inv = {v: x for x, v in enumerate(emb)}
            if core.has_edge(inv[i], inv[j]):
                return True
    return False


def _min_degree_vertex(g: SmallGraph, lab) -> int:
    """Canonical deletion vertex: the minimum-degree vertex latest in canonical order."""
    degs = [g.degree(v) for v in range(g.order)]
    low = min(degs)
    return max((v for v in range(g.order) if degs[v] == low), key=lambda v: lab.index(v))


def _edge_floor(target_edges, n):
    """``floor[m]``: fewest edges an m-vertex ancestor of a ``target_edges``-edge graph can have.

    Each step deletes a minimum-degree vertex, which removes at most
    ``floor(2e/m)`` edges from an m-vertex graph with e edges.
    """
    floor = [0] * (n + 1)
    floor[n] = target_edges
    for m in range(n, 1, -1):
        e = floor[m]
        floor[m - 1] = max(0, e - (2 * e) // m)
    return floor


def turan_exact(n: int, fam: ForbiddenFamily, cfg: SearchConfig | None = None) -> SearchOutcome:
    """ext(n, fam) by vertex-by-vertex orderly generation.

    A child is kept only if its newest vertex lies in the automorphism orbit
    of its canonical deletion vertex (a minimum-degree vertex chosen via the
    canonical labeling), so each isomorphism class has one parent. Children
    are additionally deduplicated per level by canonical code. Only copies
    of forbidden graphs through the new vertex are checked. Graphs that
    cannot grow to the greedy lower bound are discarded early.
    """
    cfg = cfg or SearchConfig()
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"Turán host order must be in 1..{MAX_ORDER}")
    # members larger than the host can never occur; the rest are matched by
    # their non-isolated part
    members = [f.without_isolated() for f in fam.members if f.order <= n]
    if any(f.order == 0 for f in members):
        raise ValueError("family contains an edgeless graph")
    if not members:
        from .graphs import complete

        g = complete(n)
        return SearchOutcome(g.size, g, 0, 0.0, EXACT, kind="ext")
    start = time.time()
    # a tighter starting bound prunes far more than the extra greedy runs cost
    seeds = [_greedy_free(n, members, s) for s in range(max(4, 4 * (n - 8)))]
    lower = max(seeds, key=lambda g: g.size)
    floor = _edge_floor(lower.size, n)
    level = {canonical_code(SmallGraph(1, (0,))): SmallGraph(1, (0,))}
    nodes = 0
    for m in range(1, n):
        nxt = {}
        for parent in level.values():
            pdeg = [parent.degree(v) for v in range(m)]
            pe = parent.size
            for nb in _neighbourhoods(pdeg, max(0, floor[m + 1] - pe)):
                nodes += 1
                child = parent.add_vertex(nb)
                if not all(not _contains_through(child, f, m) for f in members):
                    continue
                lab, code, _ = canonical_labeling(child)
                u = _min_degree_vertex(child, lab)
                if u != m and not _same_orbit(child, u, m):
                    continue
                key = bytes([m + 1]) + code.to_bytes((num_edges(m + 1) + 7) // 8, "big")
                nxt.setdefault(key, child)
            if time.time() - start > cfg.timeout:
                return SearchOutcome(lower.size, lower, nodes, time.time() - start, LOWER_BOUND_ONLY, "ext")
        level = nxt
        log.info("turan n=%d level %d: %d graphs", n, m + 1, len(level))
    best = max((g.size for g in level.values()), default=-1)
    if best < lower.size:
        raise AssertionError("orderly generation lost the greedy witness")
    winners = sorted((k, g) for k, g in level.items() if g.size == best)
    from .embeddings import canonical_form

    witness = canonical_form(winners[0][1])
    return SearchOutcome(best, witness, nodes, time.time() - start, EXACT, kind="ext")


def _neighbourhoods(pdeg, d_min):
    """Vertex sets of size >= ``d_min`` that leave the new vertex with minimum degree.

    A vertex of parent degree ``d - 1`` must be in the set, and no vertex may
    have parent degree below ``d - 1``.
    """
    m = len(pdeg)
    d_max = min(pdeg) + 1 if m else 0
    for d in range(d_min, min(d_max, m) + 1):
        forced = [u for u in range(m) if pdeg[u] == d - 1]
        if len(forced) > d:
            continue
        base = sum(1 << u for u in forced)
        free = [u for u in range(m) if pdeg[u] >= d]
        for extra in combinations(free, d - len(forced)):
            yield base | sum(1 << u for u in extra)


def _contains_through(g, core, v):
    from .graphs import embeddings

    return next(embeddings(core, g, through=v), None) is not None


def _same_orbit(g, u, v):
    mark_u = [1 if x == u else 0 for x in range(g.order)]
    mark_v = [1 if x == v else 0 for x in range(g.order)]
    return canonical_labeling(g, mark_u)[1] == canonical_labeling(g, mark_v)[1]
