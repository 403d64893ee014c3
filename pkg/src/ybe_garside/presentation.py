"""Tableau presentations of structure monoids, and conversion to solutions.

A tableau presentation has generators x_1..x_n and relations whose two
sides are words of length exactly 2.  A solution gives relations
x_i x_j = x_k x_l for every cell S(i, j) = (k, l) with (i, j) != (k, l);
conversely a presentation in which every length-2 word occurs at most once
defines S cell-wise, with unmatched words fixed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .perms import is_permutation
from .solution import AxiomError, Solution, eval_S, involutive_violation


@dataclass(frozen=True, order=True)
class Relation:
    """One defining relation lhs = rhs between length-2 words, stored with
    the lexicographically smaller side first."""

    lhs: tuple[int, int]
    rhs: tuple[int, int]

    def __post_init__(self):
        if self.lhs == self.rhs:
            raise ValueError("trivial relation %s = %s" % (self.lhs, self.rhs))
        if self.lhs > self.rhs:
            raise ValueError("relation sides must be stored smaller first")

    @classmethod
    def make(cls, a: int, b: int, c: int, d: int) -> "Relation":
        lhs, rhs = (a, b), (c, d)
        if rhs < lhs:
            lhs, rhs = rhs, lhs
        return cls(lhs, rhs)

    def sides(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return self.lhs, self.rhs


@dataclass(frozen=True)
class TableauPresentation:
    n: int
    relations: frozenset[Relation]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        for rel in self.relations:
            for side in rel.sides():
                if any(not 0 <= x < self.n for x in side):
                    raise ValueError(
                        "relation %s uses a generator outside 1..%d"
                        % (_format_relation(rel), self.n)
                    )

    def sorted_relations(self) -> list[Relation]:
        return sorted(self.relations)


@dataclass(frozen=True)
class TableauReport:
    """Which of the three tableau conditions hold, with counterexamples.

    (i)   there are exactly n(n-1)/2 relations;
    (ii)  no length-2 word occurs in two distinct relations;
    (iii) no side is a square x_i^2.
    """

    relation_count: int
    expected_count: int
    count_ok: bool
    duplicate_words: tuple[tuple[int, int], ...]
    squares: tuple[tuple[int, int], ...]

    @property
    def unique_ok(self) -> bool:
        return not self.duplicate_words

    @property
    def square_free_ok(self) -> bool:
        return not self.squares


def _format_relation(rel: Relation) -> str:
    (a, b), (c, d) = rel.sides()
    return "x%d x%d = x%d x%d" % (a + 1, b + 1, c + 1, d + 1)


def solution_to_presentation(sol: Solution) -> TableauPresentation:
    """Defining relations x_i x_j = x_k x_l for the cells S(i, j) = (k, l).

    Fixed cells contribute nothing and the pair of cells (i, j) / (k, l)
    related by involutivity collapses to one stored relation, so a
    non-degenerate involutive solution yields exactly n(n-1)/2 relations.
    """
    viol = involutive_violation(sol)
    if viol is not None:
        raise AxiomError(
            "solution is not involutive: %s fails at (%d, %d)"
            % (viol[0], viol[1][0] + 1, viol[1][1] + 1)
        )
    rels = set()
    for i in range(sol.n):
        for j in range(sol.n):
            k, l = eval_S(sol, i, j)
            if (k, l) != (i, j):
                rels.add(Relation.make(i, j, k, l))
    return TableauPresentation(sol.n, frozenset(rels))


def validate_tableau_conditions(pres: TableauPresentation) -> TableauReport:
    expected = pres.n * (pres.n - 1) // 2
    words: dict[tuple[int, int], int] = {}
    for rel in pres.relations:
        for side in rel.sides():
            words[side] = words.get(side, 0) + 1
    duplicates = tuple(sorted(w for w, c in words.items() if c > 1))
    squares = tuple(sorted(w for w in words if w[0] == w[1]))
    return TableauReport(
        relation_count=len(pres.relations),
        expected_count=expected,
        count_ok=len(pres.relations) == expected,
        duplicate_words=duplicates,
        squares=squares,
    )


def presentation_to_solution(pres: TableauPresentation) -> Solution:
    """Read S off the relations: S(i, j) = (k, l) and S(k, l) = (i, j) for a
    relation x_i x_j = x_k x_l, all unmatched words fixed.

    Raises AxiomError when a word occurs in two relations or when some
    derived g_i or f_i fails to be a bijection; either defect means the
    presentation is not the tableau presentation of a Garside monoid of
    this kind.
    """
    n = pres.n
    table: dict[tuple[int, int], tuple[int, int]] = {}
    for rel in pres.relations:
        lhs, rhs = rel.sides()
        for src, dst in ((lhs, rhs), (rhs, lhs)):
            if src in table:
                raise AxiomError(
                    "word x%d x%d occurs in two relations" % (src[0] + 1, src[1] + 1)
                )
            table[src] = dst
    g = [[-1] * n for _ in range(n)]
    f = [[-1] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            k, l = table.get((i, j), (i, j))
            g[i][j] = k
            f[j][i] = l
    for i in range(n):
        if not is_permutation(g[i]):
            raise AxiomError("derived g_%d is not a bijection" % (i + 1))
        if not is_permutation(f[i]):
            raise AxiomError("derived f_%d is not a bijection" % (i + 1))
    return Solution(n, tuple(tuple(r) for r in g), tuple(tuple(r) for r in f))


def relabel_presentation(pres: TableauPresentation, s) -> TableauPresentation:
    rels = frozenset(
        Relation.make(s[a], s[b], s[c], s[d])
        for (a, b), (c, d) in (rel.sides() for rel in pres.relations)
    )
    return TableauPresentation(pres.n, rels)


def are_t_isomorphic(
    p: TableauPresentation, q: TableauPresentation
) -> tuple[int, ...] | None:
    """A generator bijection s with s(R_p) = R_q as relation sets, or None.

    Returns the lexicographically least witness.
    """
    if p.n != q.n:
        return None
    target = q.relations
    for s in itertools.permutations(range(p.n)):
        if relabel_presentation(p, s).relations == target:
            return s
    return None
