"""Finite set-theoretic solutions of the quantum Yang-Baxter equation.

A solution on X = {0..n-1} is stored as two n-tuples of permutations
(g_0..g_{n-1}) and (f_0..f_{n-1}); the bijection of X^2 it encodes is

    S(i, j) = (g_i(j), f_j(i)).

The axioms (non-degenerate, involutive, braided, square-free) are decided
through identities on the f/g families, never by materialising S as a
table, except inside :func:`canonical_form` where the full table is the
object being minimised over relabelings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .perms import check_permutation, identity, inverse, is_permutation


class AxiomError(ValueError):
    """A well-formed input fails a required solution axiom."""


@dataclass(frozen=True)
class Solution:
    """Solution S(i, j) = (g[i](j), f[j](i)) on {0..n-1}."""

    n: int
    g: tuple[tuple[int, ...], ...]
    f: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        for name, fam in (("g", self.g), ("f", self.f)):
            if len(fam) != self.n:
                raise ValueError(
                    "expected %d %s-permutations, got %d" % (self.n, name, len(fam))
                )
            for i, p in enumerate(fam):
                if len(p) != self.n or not is_permutation(p):
                    raise ValueError(
                        "%s_%d is not a permutation of {1..%d}" % (name, i + 1, self.n)
                    )

    @classmethod
    def from_g(cls, g) -> "Solution":
        """Build a solution from its g-tuple alone, deriving the unique
        f-tuple compatible with involutivity."""
        g = tuple(check_permutation(p) for p in g)
        f = derive_f_from_g(g)
        if f is None:
            raise AxiomError("no involutive solution extends this g-tuple")
        return cls(len(g), g, f)


@dataclass(frozen=True)
class SolutionReport:
    nondegenerate: bool
    involutive: bool
    braided: bool
    square_free: bool
    first_violation: tuple[str, tuple[int, ...]] | None

    def __post_init__(self):
        flags_ok = self.nondegenerate and self.involutive and self.braided and self.square_free
        if flags_ok != (self.first_violation is None):
            raise ValueError("first_violation must be present iff some flag is false")


def eval_S(sol: Solution, i: int, j: int) -> tuple[int, int]:
    """S(i, j) = (g_i(j), f_j(i))."""
    if not (0 <= i < sol.n and 0 <= j < sol.n):
        raise IndexError("indices must lie in 1..%d" % sol.n)
    return sol.g[i][j], sol.f[j][i]


def is_nondegenerate(g, f=None) -> bool:
    """Re-validate that every g_i and f_i is a bijection.

    Accepts a Solution or raw (g, f) image-tuple families, so the check can
    run on untrusted input before a Solution is constructed.
    """
    if isinstance(g, Solution):
        g, f = g.g, g.f
    fams = list(g) + list(f or ())
    return all(is_permutation(p) for p in fams)


def involutive_violation(sol: Solution) -> tuple[str, tuple[int, ...]] | None:
    """First (i, j) failing one of the two involutivity identities, or None.

    The identities are g_{g_i(j)}(f_j(i)) = i and f_{f_j(i)}(g_i(j)) = j;
    together they say S(S(i, j)) = (i, j).
    """
    g, f = sol.g, sol.f
    for i in range(sol.n):
        for j in range(sol.n):
            a, b = g[i][j], f[j][i]
            if g[a][b] != i:
                return ("g_{g_i(j)}(f_j(i)) = i", (i, j))
            if f[b][a] != j:
                return ("f_{f_j(i)}(g_i(j)) = j", (i, j))
    return None


def is_involutive(sol: Solution) -> bool:
    return involutive_violation(sol) is None


def braided_violation(sol: Solution) -> tuple[str, tuple[int, ...]] | None:
    """First witness (i, j) or (i, j, k) failing a braid identity, or None.

    The three identity families are equivalent to the braid relation
    S12.S23.S12 = S23.S12.S23 on X^3:

      g_i g_j = g_{g_i(j)} g_{f_j(i)}
      f_j f_i = f_{f_j(i)} f_{g_i(j)}
      f_{g_{f_j(i)}(k)}(g_i(j)) = g_{f_{g_j(k)}(i)}(f_k(j))
    """
    g, f = sol.g, sol.f
    n = sol.n
    for i in range(n):
        for j in range(n):
            a, b = g[i][j], f[j][i]
            for k in range(n):
                if g[i][g[j][k]] != g[a][g[b][k]]:
                    return ("g_i g_j = g_{g_i(j)} g_{f_j(i)}", (i, j, k))
                if f[j][f[i][k]] != f[b][f[a][k]]:
                    return ("f_j f_i = f_{f_j(i)} f_{g_i(j)}", (i, j, k))
                if f[g[b][k]][a] != g[f[g[j][k]][i]][f[k][j]]:
                    return (
                        "f_{g_{f_j(i)}(k)}(g_i(j)) = g_{f_{g_j(k)}(i)}(f_k(j))",
                        (i, j, k),
                    )
    return None


def is_braided(sol: Solution) -> bool:
    return braided_violation(sol) is None


def is_square_free(sol: Solution) -> bool:
    """True iff S fixes every diagonal pair (i, i)."""
    return all(eval_S(sol, i, i) == (i, i) for i in range(sol.n))


def solution_report(sol: Solution) -> SolutionReport:
    nondeg = is_nondegenerate(sol)
    inv = involutive_violation(sol)
    brd = braided_violation(sol)
    sqf = is_square_free(sol)
    first = inv or brd
    if first is None and not sqf:
        for i in range(sol.n):
            if eval_S(sol, i, i) != (i, i):
                first = ("S(i,i) = (i,i)", (i,))
                break
    return SolutionReport(
        nondegenerate=nondeg,
        involutive=inv is None,
        braided=brd is None,
        square_free=sqf,
        first_violation=first,
    )


def derive_f_from_g(g) -> tuple[tuple[int, ...], ...] | None:
    """The unique f-tuple with g_{g_i(j)}(f_j(i)) = i, if it is one.

    Rearranging the first involutivity identity gives
    f_j(i) = g_{g_i(j)}^{-1}(i).  Returns None when some derived f_j fails
    to be a bijection, i.e. no involutive solution extends this g-tuple.
    """
    n = len(g)
    ginv = [inverse(p) for p in g]
    f = []
    for j in range(n):
        fj = tuple(ginv[g[i][j]][i] for i in range(n))
        if not is_permutation(fj):
            return None
        f.append(fj)
    return tuple(f)


def relabel(sol: Solution, phi) -> Solution:
    """Transport sol along the bijection phi: S'(phi x, phi y) = phi^2 S(x, y).

    In terms of the defining families: g'_i = phi g_{phi^-1 i} phi^-1 and
    likewise for f.
    """
    phi = check_permutation(phi)
    inv_phi = inverse(phi)
    n = sol.n
    g = tuple(
        tuple(phi[sol.g[inv_phi[i]][inv_phi[j]]] for j in range(n)) for i in range(n)
    )
    f = tuple(
        tuple(phi[sol.f[inv_phi[i]][inv_phi[j]]] for j in range(n)) for i in range(n)
    )
    return Solution(n, g, f)


def are_isomorphic(a: Solution, b: Solution) -> tuple[int, ...] | None:
    """A relabeling phi carrying S_a to S_b, or None.

    Returns the lexicographically least witness, so the result is
    deterministic; the identity is returned when a == b.
    """
    if a.n != b.n:
        return None
    n = a.n
    for phi in itertools.permutations(range(n)):
        ok = True
        for i in range(n):
            for j in range(n):
                s1, s2 = eval_S(a, i, j)
                if eval_S(b, phi[i], phi[j]) != (phi[s1], phi[s2]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return phi
    return None


def s_table_bytes(sol: Solution) -> bytes:
    """Row-major serialization of the full S-table, two bytes per cell."""
    out = bytearray()
    for i in range(sol.n):
        for j in range(sol.n):
            s1, s2 = eval_S(sol, i, j)
            out.append(s1)
            out.append(s2)
    return bytes(out)


def canonical_form(sol: Solution) -> bytes:
    """Lexicographically least S-table serialization over all relabelings.

    Two solutions are isomorphic iff their canonical forms coincide.  The
    scan over the n! relabelings aborts a candidate as soon as its lazily
    produced serialization exceeds the best one seen.
    """
    n = sol.n
    if n > 9:
        raise ValueError("canonical_form supports n <= 9")
    best: bytes | None = None
    cells = [(i, j) for i in range(n) for j in range(n)]
    for phi in itertools.permutations(range(n)):
        inv_phi = inverse(phi)
        cur = bytearray()
        verdict = 0  # vs best: -1 smaller, 0 tied so far, +1 larger
        for i, j in cells:
            s1, s2 = eval_S(sol, inv_phi[i], inv_phi[j])
            cur.append(phi[s1])
            cur.append(phi[s2])
            if best is not None and verdict == 0:
                pos = len(cur) - 2
                if cur[pos] != best[pos] or cur[pos + 1] != best[pos + 1]:
                    verdict = 1 if bytes(cur[pos:]) > best[pos : pos + 2] else -1
                    if verdict > 0:
                        break
        if best is None or verdict < 0:
            best = bytes(cur)
    assert best is not None
    return best


def flip_solution(n: int) -> Solution:
    """The solution S(i, j) = (j, i): all g_i and f_i the identity."""
    e = identity(n)
    return Solution(n, (e,) * n, (e,) * n)
