"""Resumable depth-first search over colorings of K_n with no rainbow copy.

The search colors edges in index order with restricted-growth branching.
State lives entirely in caller-owned arrays so a call can stop after a node
budget and be resumed later; the Python side checks the clock between calls.

Propagation: when a copy has exactly one uncolored edge and its colored
edges are pairwise distinct, that edge must reuse one of those colors. The
edge's allowed-color mask is intersected accordingly and it is marked as
unable to take a fresh color. Because colors never change once assigned,
both restrictions stay valid for the rest of the branch.

Bound: colors used so far plus the number of uncolored edges still allowed
a fresh color must reach ``k``.

Symmetry: a node survives only if its colored prefix is not beaten, in the
partial lexicographic order, by the normalized image of the prefix under any
of the supplied edge permutations (induced by vertex permutations of K_n).
"""

import numpy as np
from numba import njit

EXHAUSTED = 0
FOUND = 1
PAUSED = 2
OUT_FULL = 3
DEAD = 4

# slots of the int64 ``state`` vector
T, TOP, NODES, NOUT, RESUME, FLOOR, USED = range(7)
STATE_LEN = 8


@njit(cache=True)
def _assign(t, c, colors, copies, cp_ptr, cp_idx, unc, mask, ffor, undo_e, undo_m, top):
    colors[t] = c
    q = copies.shape[1]
    ok = True
    for a in range(cp_ptr[t], cp_ptr[t + 1]):
        j = cp_idx[a]
        unc[j] -= 1
        if unc[j] == 1 and ok:
            seen = 0
            free = -1
            distinct = True
            for b in range(q):
                e = copies[j, b]
                ce = colors[e]
                if ce < 0:
                    free = e
                else:
                    bit = np.int64(1) << ce
                    if seen & bit:
                        distinct = False
                        break
                    seen |= bit
            if distinct:
                undo_e[top] = free
                undo_m[top] = mask[free]
                top += 1
                mask[free] &= seen
                ffor[free] += 1
                if mask[free] == 0:
                    ok = False
    return ok, top


@njit(cache=True)
def _unassign(t, colors, cp_ptr, cp_idx, unc, mask, ffor, undo_e, undo_m, top, level):
    colors[t] = -1
    for a in range(cp_ptr[t], cp_ptr[t + 1]):
        unc[cp_idx[a]] += 1
    while top > level:
        top -= 1
        e = undo_e[top]
        mask[e] = undo_m[top]
        ffor[e] -= 1
    return top


@njit(cache=True)
def _bound_ok(t, m, k, used, colors, ffor):
    room = 0
    for e in range(t + 1, m):
        if colors[e] < 0 and ffor[e] == 0:
            room += 1
    return used + room >= k


@njit(cache=True)
def _symmetry_ok(t, colors, perms, relabel):
    for p in range(perms.shape[0]):
        nxt = 0
        worse = False
        for s in range(t + 1):
            cs = colors[perms[p, s]]
            if cs < 0:
                break
            v = relabel[cs]
            if v < 0:
                v = nxt
                relabel[cs] = v
                nxt += 1
            if v < colors[s]:
                worse = True
                break
            if v > colors[s]:
                break
        for i in range(relabel.shape[0]):
            relabel[i] = -1
        if worse:
            return False
    return True


@njit(cache=True)
def _candidate(t, k, start, used, mask, ffor):
    c = start
    while c < used:
        if (mask[t] >> c) & 1:
            return c
        c += 1
    if c == used and used < k and ffor[t] == 0:
        return c
    return -1


@njit(cache=True)
def init_state(prefix, m, k, copies, cp_ptr, cp_idx, perms, sym_depth,
               colors, choice, used_at, undo_at, unc, mask, ffor, undo_e, undo_m, relabel, state):
    """Reset all arrays and replay ``prefix``. Returns DEAD if the prefix is pruned."""
    q = copies.shape[1]
    for e in range(m):
        colors[e] = -1
        choice[e] = -1
        mask[e] = -1
        ffor[e] = 0
    for j in range(copies.shape[0]):
        unc[j] = q
    for i in range(relabel.shape[0]):
        relabel[i] = -1
    top = 0
    used = 0
    used_at[0] = 0
    d = prefix.shape[0]
    alive = True
    for t in range(d):
        c = prefix[t]
        if c > used or c >= k or (c < used and not ((mask[t] >> c) & 1)) or (c == used and ffor[t] > 0):
            alive = False
            break
        undo_at[t] = top
        ok, top = _assign(t, c, colors, copies, cp_ptr, cp_idx, unc, mask, ffor, undo_e, undo_m, top)
        choice[t] = c
        if c == used:
            used += 1
        used_at[t + 1] = used
        if not ok or not _bound_ok(t, m, k, used, colors, ffor):
            alive = False
            break
        if t < sym_depth and not _symmetry_ok(t, colors, perms, relabel):
            alive = False
            break
    state[T] = d
    state[TOP] = top
    state[NODES] = 0
    state[NOUT] = 0
    state[RESUME] = 0
    state[FLOOR] = d
    if d < m:
        choice[d] = -1
    if not alive:
        return DEAD
    return PAUSED


@njit(cache=True)
def run(m, k, stop_depth, budget, copies, cp_ptr, cp_idx, perms, sym_depth,
        colors, choice, used_at, undo_at, unc, mask, ffor, undo_e, undo_m, relabel, state, out):
    """Advance the search by at most ``budget`` nodes.

    Returns FOUND (``colors`` holds a full coloring), EXHAUSTED, PAUSED, or
    OUT_FULL (in collect mode, ``out`` filled with depth-``stop_depth`` prefixes).
    """
    t = state[T]
    top = state[TOP]
    floor = state[FLOOR]
    nout = state[NOUT]
    spent = 0
    while True:
        if t == m:
            if state[RESUME] == 0:
                state[RESUME] = 1
                state[T] = t
                state[TOP] = top
                state[NODES] += spent
                return FOUND
            state[RESUME] = 0
            t -= 1
            top = _unassign(t, colors, cp_ptr, cp_idx, unc, mask, ffor, undo_e, undo_m, top, undo_at[t])
            continue
        if spent >= budget:
            state[T] = t
            state[TOP] = top
            state[NODES] += spent
            state[NOUT] = nout
            return PAUSED
        used = used_at[t]
        c = _candidate(t, k, choice[t] + 1, used, mask, ffor)
        if c < 0:
            choice[t] = -1
            if t == floor:
                state[T] = t
                state[TOP] = top
                state[NODES] += spent
                state[NOUT] = nout
                return EXHAUSTED
            t -= 1
            top = _unassign(t, colors, cp_ptr, cp_idx, unc, mask, ffor, undo_e, undo_m, top, undo_at[t])
            continue
        choice[t] = c
        spent += 1
        undo_at[t] = top
        ok, top = _assign(t, c, colors, copies, cp_ptr, cp_idx, unc, mask, ffor, undo_e, undo_m, top)
        nused = used + 1 if c == used else used
        if ok and _bound_ok(t, m, k, nused, colors, ffor) and (
                t >= sym_depth or _symmetry_ok(t, colors, perms, relabel)):
            used_at[t + 1] = nused
            t += 1
            if t < m:
                choice[t] = -1
            if t == stop_depth and t < m:
                for s in range(t):
                    out[nout, s] = colors[s]
                nout += 1
                t -= 1
                top = _unassign(t, colors, cp_ptr, cp_idx, unc, mask, ffor, undo_e, undo_m, top, undo_at[t])
                if nout == out.shape[0]:
                    state[T] = t
                    state[TOP] = top
                    state[NODES] += spent
                    state[NOUT] = nout
                    return OUT_FULL
        else:
            top = _unassign(t, colors, cp_ptr, cp_idx, unc, mask, ffor, undo_e, undo_m, top, undo_at[t])
