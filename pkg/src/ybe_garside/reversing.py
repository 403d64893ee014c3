"""Letter-level complement calculus, grid word reversing, and word equality.

Words over the generator alphabet are tuples of 0-based indices; the empty
tuple is the empty word.  The right complement of distinct generators is a
single generator, read off the defining families as

    x_i \\ x_j = g_i^{-1}(j),        x_j ~\\ x_i = f_i^{-1}(j),

with complements of equal letters empty.  Reversing the pair (u, v) fills a
|u| x |v| grid of such letter cells and returns (u\\v, v\\u), two words with
u.(u\\v) = v.(v\\u) in the structure monoid.

Word equality itself is decided by breadth-first closure under the defining
relations: relations preserve length, so every equality class is finite.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .perms import inverse
from .solution import AxiomError, Solution, involutive_violation
from .presentation import TableauPresentation

Word = tuple[int, ...]

DEFAULT_BFS_CAP = 10**6
_BFS_CAP_ENV = "YBE_GARSIDE_BFS_CAP"


class ClassSizeExceeded(RuntimeError):
    """A word-equality class grew past the configured safety cap."""


def bfs_cap() -> int:
    raw = os.environ.get(_BFS_CAP_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError("%s must be an integer, got %r" % (_BFS_CAP_ENV, raw))
    return DEFAULT_BFS_CAP


@dataclass(frozen=True)
class ComplementTable:
    """Letter complements of a non-degenerate involutive solution.

    right[i][j] = x_i \\ x_j and left[a][b] = x_a ~\\ x_b for distinct
    letters; diagonal entries hold -1, the empty complement.
    """

    n: int
    right: tuple[tuple[int, ...], ...]
    left: tuple[tuple[int, ...], ...]


def build_complement_table(sol: Solution) -> ComplementTable:
    viol = involutive_violation(sol)
    if viol is not None:
        raise AxiomError(
            "complements need an involutive solution: %s fails at (%d, %d)"
            % (viol[0], viol[1][0] + 1, viol[1][1] + 1)
        )
    n = sol.n
    ginv = [inverse(p) for p in sol.g]
    finv = [inverse(p) for p in sol.f]
    right = tuple(
        tuple(-1 if i == j else ginv[i][j] for j in range(n)) for i in range(n)
    )
    left = tuple(
        tuple(-1 if a == b else finv[b][a] for b in range(n)) for a in range(n)
    )
    return ComplementTable(n, right, left)


def letter_complement(table: ComplementTable, a: int | None, b: int | None) -> int | None:
    """Right complement a \\ b on letters-or-empty (None is the empty word)."""
    if a is None:
        return b
    if b is None or a == b:
        return None
    return table.right[a][b]


def left_letter_complement(table: ComplementTable, a: int | None, b: int | None) -> int | None:
    """Left complement a ~\\ b on letters-or-empty (None is the empty word)."""
    if b is None:
        return a
    if a is None or a == b:
        return None
    return table.left[a][b]


def reverse_words(table: ComplementTable, u: Word, v: Word) -> tuple[Word, Word]:
    """Grid reversing of (u, v): returns (u\\v, v\\u).

    u runs down the west side of the grid and v along the north side.  A
    cell with west edge a and north edge b emits south edge a\\b and east
    edge b\\a; equal letters annihilate and an empty edge lets the other
    letter pass through.  Since letter complements are letters or empty,
    the grid is exactly |u| x |v| and no iteration bound is needed.
    """
    horiz: list[int | None] = list(v)  # sweeps from the north edge to the south
    east: list[int | None] = []
    for west in u:
        cur: int | None = west
        for c in range(len(horiz)):
            a, b = cur, horiz[c]
            horiz[c] = letter_complement(table, a, b)
            cur = letter_complement(table, b, a)
        east.append(cur)
    u_over_v = tuple(x for x in horiz if x is not None)
    v_over_u = tuple(x for x in east if x is not None)
    return u_over_v, v_over_u


def right_lcm(table: ComplementTable, u: Word, v: Word) -> Word:
    """A word for the right lcm of u and v, namely u.(u\\v)."""
    return tuple(u) + reverse_words(table, u, v)[0]


def multi_lcm(table: ComplementTable, letters) -> Word:
    """Right lcm of a set of generators, folded in increasing index order.

    The result does not depend on the fold order up to word equality; for
    k distinct generators of a braided solution it has length exactly k.
    """
    idx = sorted(set(letters))
    if not idx:
        raise ValueError("multi_lcm needs a non-empty set of generators")
    if any(not 0 <= x < table.n for x in idx):
        raise ValueError("generator out of range 1..%d" % table.n)
    acc: Word = (idx[0],)
    for x in idx[1:]:
        acc = right_lcm(table, acc, (x,))
    return acc


def check_coherence(table: ComplementTable) -> tuple[bool, tuple[int, int, int] | None]:
    """Cube condition on generator triples for the right complement.

    Checks (a\\b)\\(a\\c) = (b\\a)\\(b\\c) as letters-or-empty for every
    triple; triples with a repeated letter hold automatically.  For an
    atomic monoid this letter-level check certifies left cancellativity
    and conditional right lcms.
    """
    n = table.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = letter_complement(
                    table,
                    letter_complement(table, a, b),
                    letter_complement(table, a, c),
                )
                rhs = letter_complement(
                    table,
                    letter_complement(table, b, a),
                    letter_complement(table, b, c),
                )
                if lhs != rhs:
                    return False, (a, b, c)
    return True, None


def check_left_coherence(table: ComplementTable) -> tuple[bool, tuple[int, int, int] | None]:
    """Left-complement analogue of the cube condition on generator triples:
    (a~\\b)~\\(c~\\b) = (a~\\c)~\\(b~\\c) as letters-or-empty."""
    n = table.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = left_letter_complement(
                    table,
                    left_letter_complement(table, a, b),
                    left_letter_complement(table, c, b),
                )
                rhs = left_letter_complement(
                    table,
                    left_letter_complement(table, a, c),
                    left_letter_complement(table, b, c),
                )
                if lhs != rhs:
                    return False, (a, b, c)
    return True, None


def rewrite_map(pres: TableauPresentation) -> dict[tuple[int, int], tuple[tuple[int, int], ...]]:
    """Length-2 factor rewrites induced by the relations, in both directions.

    A word maps to every side it is related to; for a presentation in which
    each word occurs at most once that is a single destination.
    """
    moves: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for rel in pres.relations:
        lhs, rhs = rel.sides()
        moves.setdefault(lhs, []).append(rhs)
        moves.setdefault(rhs, []).append(lhs)
    return {src: tuple(dsts) for src, dsts in moves.items()}


def word_class(pres: TableauPresentation, w: Word, cap: int | None = None) -> frozenset[Word]:
    """All words equal to w in the monoid, by closure under single rewrites.

    Relations are length-preserving, so the class is finite; cap (default
    from the environment, else 10^6) guards against runaway growth on
    malformed presentations.
    """
    if cap is None:
        cap = bfs_cap()
    moves = rewrite_map(pres)
    w = tuple(w)
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for pos in range(len(cur) - 1):
            pair = (cur[pos], cur[pos + 1])
            for dst in moves.get(pair, ()):
                nxt = cur[:pos] + dst + cur[pos + 2 :]
                if nxt not in seen:
                    if len(seen) >= cap:
                        raise ClassSizeExceeded(
                            "equality class of a length-%d word exceeded %d words; "
                            "raise %s to override" % (len(w), cap, _BFS_CAP_ENV)
                        )
                    seen.add(nxt)
                    queue.append(nxt)
    return frozenset(seen)


def words_equal_in_M(pres: TableauPresentation, u: Word, v: Word) -> bool:
    """Whether u and v represent the same element of the structure monoid."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        return False
    if u == v:
        return True
    return v in word_class(pres, u)


def canonical_word(pres: TableauPresentation, w: Word, cap: int | None = None) -> Word:
    """Lexicographically least word in the equality class of w: a
    deterministic identifier for the monoid element w represents."""
    return min(word_class(pres, w, cap=cap))
