"""Backtracking kernel for the solution census, with optional JIT.

The census enumerates g-tuples (one permutation per generator) whose
derived f-tuple yields a non-degenerate involutive braided solution.
Permutations are interned as indices into the lexicographic list of all n!
of them, so composition becomes a table lookup and the forcing rule below
is a handful of integer reads:

    once rows i, j and k = g_i(j) are assigned, the braid identity
    g_i g_j = g_k g_l with l = g_k^{-1}(i) forces g_l = g_k^{-1} g_i g_j.

Assigning one free row therefore cascades; conflicts prune the tree far
above the leaves.  Leaves are confirmed by the full definitional check of
the involutivity and braid identities.

The search loop is compiled with numba when available.  Set
YBE_GARSIDE_BACKEND=python to force the interpreted fallback (the same
functions running on the same numpy tables) or =numba to require the JIT;
benchmarks/bench_census.py compares the two.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

_BACKEND_ENV = "YBE_GARSIDE_BACKEND"


def _pick_backend() -> str:
    choice = os.environ.get(_BACKEND_ENV, "").strip().lower()
    if choice in ("python", "numpy"):
        return "python"
    if choice == "numba":
        import numba  # noqa: F401  -- fail loudly if forced but missing

        return "numba"
    if choice:
        raise ValueError("%s must be 'numba' or 'python', got %r" % (_BACKEND_ENV, choice))
    try:
        import numba  # noqa: F401
    except ImportError:
        return "python"
    return "numba"


BACKEND = _pick_backend()


def _maybe_jit(fn):
    if BACKEND == "numba":
        from numba import njit

        return njit(cache=True)(fn)
    return fn


_TABLES: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def permutation_tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(P, comp, inv) for S_n: P lists all n! permutations in lex order,
    comp[a, b] is the index of P[a] o P[b] (apply b first) and inv[a] the
    index of the inverse of P[a]."""
    cached = _TABLES.get(n)
    if cached is not None:
        return cached
    if not 1 <= n <= 7:
        # the composition table is (n!)^2 entries; n=8 would need 6.5 GB
        raise ValueError("permutation tables support 1 <= n <= 7")
    P = np.array(list(itertools.permutations(range(n))), dtype=np.int32)
    nf = len(P)
    radix = np.array([n ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    keys = P @ radix  # strictly increasing because P is lex sorted
    inv_rows = np.argsort(P, axis=1)
    inv = np.searchsorted(keys, inv_rows @ radix).astype(np.int32)
    comp = np.empty((nf, nf), dtype=np.int32)
    for a in range(nf):
        comp[a] = np.searchsorted(keys, P[a][P] @ radix)
    _TABLES[n] = (P, comp, inv)
    return P, comp, inv


def _propagate(n, P, comp, inv, assigned, trail, tlen, qstart):
    """Close the assignment under row forcing.  Newly forced rows are
    pushed on the trail; returns (ok, new trail length)."""
    qi = qstart
    while qi < tlen:
        r = trail[qi]
        qi += 1
        for i in range(n):
            ai = assigned[i]
            if ai < 0:
                continue
            for j in range(n):
                aj = assigned[j]
                if aj < 0:
                    continue
                k = P[ai, j]
                ak = assigned[k]
                if ak < 0:
                    continue
                if i != r and j != r and k != r:
                    continue
                l = P[inv[ak], i]
                forced = comp[inv[ak], comp[ai, aj]]
                al = assigned[l]
                if al < 0:
                    assigned[l] = forced
                    trail[tlen] = l
                    tlen += 1
                elif al != forced:
                    return False, tlen
    return True, tlen


def _partial_check(n, P, inv, assigned, F):
    """Necessary conditions on a partial assignment: every determined value
    of a derived f-column is distinct, and every determined instance of
    f_{f_j(i)}(g_i(j)) = j holds."""
    for j in range(n):
        for i in range(n):
            F[j, i] = -1
    for i in range(n):
        ai = assigned[i]
        if ai < 0:
            continue
        for j in range(n):
            k = P[ai, j]
            ak = assigned[k]
            if ak >= 0:
                F[j, i] = P[inv[ak], i]
    for j in range(n):
        for i in range(n):
            v = F[j, i]
            if v < 0:
                continue
            for i2 in range(i + 1, n):
                if F[j, i2] == v:
                    return False
    for i in range(n):
        ai = assigned[i]
        if ai < 0:
            continue
        for j in range(n):
            l = F[j, i]
            if l < 0:
                continue
            v = F[l, P[ai, j]]
            if v >= 0 and v != j:
                return False
    return True


def _leaf_check(n, P, comp, inv, assigned, F):
    """Full definitional check of a complete g-tuple: derived f bijective,
    both involutivity identities, and all three braid identity families."""
    for i in range(n):
        ai = assigned[i]
        for j in range(n):
            F[j, i] = P[inv[assigned[P[ai, j]]], i]
    for j in range(n):
        for i in range(n):
            hit = False
            for i2 in range(n):
                if F[j, i2] == i:
                    hit = True
                    break
            if not hit:
                return False
    for i in range(n):
        ai = assigned[i]
        for j in range(n):
            if F[F[j, i], P[ai, j]] != j:
                return False
    for i in range(n):
        ai = assigned[i]
        for j in range(n):
            k = P[ai, j]
            l = F[j, i]
            if comp[ai, assigned[j]] != comp[assigned[k], assigned[l]]:
                return False
            for m in range(n):
                if F[j, F[i, m]] != F[l, F[k, m]]:
                    return False
    for i in range(n):
        ai = assigned[i]
        for j in range(n):
            a = F[j, i]
            gij = P[ai, j]
            for k in range(n):
                lhs = F[P[assigned[a], k], gij]
                c = P[assigned[j], k]
                rhs = P[assigned[F[c, i]], F[k, j]]
                if lhs != rhs:
                    return False
    return True


def _search_loop(n, nf, P, comp, inv, lo, hi, out, cap):
    """Depth-first search over g-tuples with forcing; found tuples land in
    out[:count] as rows of permutation indices.  Returns the count, or -1
    if more than cap solutions were found (caller retries, larger)."""
    assigned = np.full(n, -1, np.int32)
    trail = np.empty(n, np.int32)
    tgt = np.empty(n, np.int32)
    nxt = np.empty(n, np.int32)
    base = np.empty(n, np.int32)
    F = np.empty((n, n), np.int32)
    count = 0
    tlen = 0
    depth = 0
    tgt[0] = 0
    nxt[0] = lo
    while True:
        limit = hi if depth == 0 else nf
        descended = False
        while nxt[depth] < limit:
            c = nxt[depth]
            nxt[depth] += 1
            t = tgt[depth]
            base[depth] = tlen
            assigned[t] = c
            trail[tlen] = t
            tlen += 1
            ok, tlen = _propagate(n, P, comp, inv, assigned, trail, tlen, tlen - 1)
            if ok:
                ok = _partial_check(n, P, inv, assigned, F)
            if ok:
                t2 = -1
                for r in range(n):
                    if assigned[r] < 0:
                        t2 = r
                        break
                if t2 < 0:
                    if _leaf_check(n, P, comp, inv, assigned, F):
                        if count >= cap:
                            return -1
                        for r in range(n):
                            out[count, r] = assigned[r]
                        count += 1
                else:
                    depth += 1
                    tgt[depth] = t2
                    nxt[depth] = 0
                    descended = True
                    break
            while tlen > base[depth]:
                tlen -= 1
                assigned[trail[tlen]] = -1
        if descended:
            continue
        depth -= 1
        if depth < 0:
            return count
        while tlen > base[depth]:
            tlen -= 1
            assigned[trail[tlen]] = -1
    return count


_propagate = _maybe_jit(_propagate)
_partial_check = _maybe_jit(_partial_check)
_leaf_check = _maybe_jit(_leaf_check)
_search_loop = _maybe_jit(_search_loop)


def search_gtuples(n: int, lo: int = 0, hi: int | None = None) -> np.ndarray:
    """All g-tuples of valid solutions whose first row index lies in
    [lo, hi), as an array of permutation indices, in DFS order."""
    P, comp, inv = permutation_tables(n)
    nf = len(P)
    if hi is None:
        hi = nf
    lo = max(lo, 0)
    hi = min(hi, nf)
    if lo >= hi:
        return np.empty((0, n), dtype=np.int32)
    cap = 1 << 14
    while True:
        out = np.empty((cap, n), dtype=np.int32)
        count = _search_loop(n, nf, P, comp, inv, lo, hi, out, cap)
        if count >= 0:
            return out[:count].copy()
        cap *= 4


def gtuple_to_solution_arrays(n: int, gtuple) -> tuple[np.ndarray, np.ndarray]:
    """(G, F) image tables of the solution encoded by a row of permutation
    indices: G[i, j] = g_i(j) and F[j, i] = f_j(i)."""
    P, _, inv = permutation_tables(n)
    gt = np.asarray(gtuple, dtype=np.int32)
    G = P[gt]
    F = np.empty((n, n), dtype=np.int32)
    for j in range(n):
        for i in range(n):
            F[j, i] = P[inv[gt[G[i, j]]], i]
    return G, F


def s_table_bytes_from_gtuple(n: int, gtuple) -> bytes:
    """Row-major S-table serialization of the solution a g-tuple encodes."""
    G, F = gtuple_to_solution_arrays(n, gtuple)
    cells = np.empty((n, n, 2), dtype=np.uint8)
    cells[:, :, 0] = G
    cells[:, :, 1] = F.T
    return cells.tobytes()


def relabel_orbit(n: int, gtuple) -> np.ndarray:
    """All relabelings of a g-tuple, one per permutation phi, as rows of
    permutation indices: row phi holds phi . g_{phi^-1(i)} . phi^-1."""
    P, comp, inv = permutation_tables(n)
    nf = len(P)
    gt = np.asarray(gtuple, dtype=np.int32)
    phis = np.arange(nf)
    reordered = gt[P[inv]]  # row phi: g-tuple read through phi^-1
    t1 = comp[phis[:, None], reordered]
    return comp[t1, inv[phis][:, None]]


def s_table_bytes_bulk(n: int, gtuples: np.ndarray) -> np.ndarray:
    """Row-major S-table serializations of many g-tuples at once, as a
    (len(gtuples), 2*n*n) uint8 array."""
    P, _, inv = permutation_tables(n)
    gts = np.asarray(gtuples, dtype=np.int32)
    m = len(gts)
    G = P[gts]  # (m, n, n): G[r, i, j] = g_i(j)
    rows = np.take_along_axis(gts[:, None, :].repeat(n, axis=1), G, axis=2)
    # F[r, i, j] = f_j(i) = g_{G[i, j]}^{-1}(i)
    F = np.take_along_axis(
        P[inv[rows]], np.broadcast_to(np.arange(n)[None, :, None, None], (m, n, n, 1)), axis=3
    )[..., 0]
    cells = np.empty((m, n, n, 2), dtype=np.uint8)
    cells[..., 0] = G
    cells[..., 1] = F
    return cells.reshape(m, -1)
