"""Shared oracles for the test suite.

Everything here recomputes results along an independent route: the direct
S-table census scans bijections of X^2 and checks the axioms from their
definitions, the braid oracle applies S literally on triples, and the
involutive scan walks raw g-tuples.  Package internals are used only to
construct Solution values, never to decide the properties under test.
"""

from __future__ import annotations

import itertools

from ybe_garside.perms import inverse
from ybe_garside.solution import Solution, derive_f_from_g, eval_S, is_involutive


def braided_by_definition(sol: Solution) -> bool:
    """Literal check of S12 S23 S12 = S23 S12 S23 on all triples."""
    n = sol.n

    def s12(t):
        a, b = eval_S(sol, t[0], t[1])
        return (a, b, t[2])

    def s23(t):
        a, b = eval_S(sol, t[1], t[2])
        return (t[0], a, b)

    return all(
        s12(s23(s12(t))) == s23(s12(s23(t)))
        for t in itertools.product(range(n), repeat=3)
    )


def involutive_by_definition(sol: Solution) -> bool:
    """Literal check of S(S(i, j)) = (i, j) on all pairs."""
    return all(
        eval_S(sol, *eval_S(sol, i, j)) == (i, j)
        for i in range(sol.n)
        for j in range(sol.n)
    )


def census_by_s_tables(n: int) -> tuple[int, int]:
    """(labeled, classes) counts by scanning every bijection of X^2.

    Axioms are checked straight from their definitions: S an involution of
    the cell set, both non-degeneracy families bijective, and the braid
    relation on X^3 applied literally.  Classes are counted by expanding
    relabeling orbits.  Feasible for n <= 3 only ((n^2)! tables).
    """
    cells = [(i, j) for i in range(n) for j in range(n)]
    idx = {c: t for t, c in enumerate(cells)}
    m = len(cells)
    tables = []
    for perm in itertools.permutations(range(m)):
        if any(perm[perm[t]] != t for t in range(m)):
            continue
        S = {cells[t]: cells[perm[t]] for t in range(m)}
        ok = all(
            len({S[(x, y)][1] for x in range(n)}) == n for y in range(n)
        ) and all(len({S[(z, x)][0] for x in range(n)}) == n for z in range(n))
        if not ok:
            continue

        def s12(t, S=S):
            a, b = S[(t[0], t[1])]
            return (a, b, t[2])

        def s23(t, S=S):
            a, b = S[(t[1], t[2])]
            return (t[0], a, b)

        if any(
            s12(s23(s12(t))) != s23(s12(s23(t)))
            for t in itertools.product(range(n), repeat=3)
        ):
            continue
        tables.append(tuple(S[c] for c in cells))
    seen: set = set()
    classes = 0
    for tab in tables:
        if tab in seen:
            continue
        classes += 1
        for phi in itertools.permutations(range(n)):
            phi_inv = inverse(phi)
            relab = tuple(
                (phi[tab[idx[(phi_inv[i], phi_inv[j])]][0]], phi[tab[idx[(phi_inv[i], phi_inv[j])]][1]])
                for i in range(n)
                for j in range(n)
            )
            seen.add(relab)
    return len(tables), classes


def all_involutive_solutions(n: int) -> list[Solution]:
    """Every non-degenerate involutive solution at size n, braided or not,
    by scanning all raw g-tuples and deriving f."""
    out = []
    perms = list(itertools.permutations(range(n)))
    for g in itertools.product(perms, repeat=n):
        f = derive_f_from_g(g)
        if f is None:
            continue
        sol = Solution(n, g, f)
        if is_involutive(sol):
            out.append(sol)
    return out


def restrict_solution(sol: Solution, block) -> Solution:
    """The induced solution on an invariant block, relabeled to 0..k-1."""
    elems = sorted(block)
    pos = {x: t for t, x in enumerate(elems)}
    k = len(elems)
    g = tuple(tuple(pos[sol.g[x][y]] for y in elems) for x in elems)
    f = tuple(tuple(pos[sol.f[x][y]] for y in elems) for x in elems)
    return Solution(k, g, f)


def disjoint_union(a: Solution, b: Solution) -> Solution:
    """Solution on the disjoint union: each block keeps its own maps and
    the two blocks braid past each other by the flip."""
    n = a.n + b.n

    def widen_a(p):
        return tuple(p) + tuple(range(a.n, n))

    def widen_b(p):
        return tuple(range(a.n)) + tuple(x + a.n for x in p)

    g = tuple(widen_a(a.g[x]) for x in range(a.n)) + tuple(
        widen_b(b.g[x - a.n]) for x in range(a.n, n)
    )
    f = tuple(widen_a(a.f[x]) for x in range(a.n)) + tuple(
        widen_b(b.f[x - a.n]) for x in range(a.n, n)
    )
    return Solution(n, g, f)
