"""Garside element, simple elements, exponent, purity and decomposability.

For a non-degenerate involutive braided solution the right lcm of the
generators is a Garside element of length n, and the simple elements are
exactly the right lcms of generator subsets together with the empty word.
The closure set of a generator x collects everything of the form w \\ x
for w in the monoid; comparing these sets across generators decides purity,
which in turn characterises indecomposability of the solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .presentation import TableauPresentation, solution_to_presentation
from .reversing import (
    ComplementTable,
    Word,
    build_complement_table,
    canonical_word,
    multi_lcm,
    reverse_words,
)
from .solution import (
    AxiomError,
    Solution,
    braided_violation,
    eval_S,
    involutive_violation,
)


def _require_braided_involutive(sol: Solution):
    viol = involutive_violation(sol) or braided_violation(sol)
    if viol is not None:
        raise AxiomError(
            "requires an involutive braided solution: %s fails at %s"
            % (viol[0], tuple(x + 1 for x in viol[1]))
        )


@dataclass(frozen=True)
class SimpleSet:
    """The simple elements as canonical words, with one generating subset
    (a set of generators whose right lcm the element is) for each; the
    empty word carries the empty subset."""

    elements: tuple[Word, ...]
    generating_subsets: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def index(self) -> dict[Word, frozenset[int]]:
        return dict(zip(self.elements, self.generating_subsets))


@dataclass(frozen=True)
class PurityReport:
    """Closure sets Y_x = (M \\ x) minus the empty word, one per generator.

    The distinct closure sets are pairwise equal or disjoint and cover the
    generators; the solution's monoid is pure exactly when they all agree.
    """

    closure_sets: tuple[frozenset[int], ...]
    delta_pure: bool
    partition: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = self.partition
        covered: set[int] = set()
        for t, block in enumerate(blocks):
            for other in blocks[t + 1 :]:
                if block & other:
                    raise RuntimeError(
                        "closure sets are neither equal nor disjoint: %s vs %s"
                        % (sorted(block), sorted(other))
                    )
            covered |= block
        if covered != set(range(len(self.closure_sets))):
            raise RuntimeError("closure sets do not cover the generators")


class _Monoid:
    """Shared per-solution machinery: presentation, complements and a
    memoised canonical form for monoid elements."""

    def __init__(self, sol: Solution):
        _require_braided_involutive(sol)
        self.sol = sol
        self.pres: TableauPresentation = solution_to_presentation(sol)
        self.table: ComplementTable = build_complement_table(sol)
        self._canon: dict[Word, Word] = {}

    def canon(self, w: Word) -> Word:
        w = tuple(w)
        hit = self._canon.get(w)
        if hit is None:
            hit = canonical_word(self.pres, w)
            for member in (w, hit):
                self._canon[member] = hit
        return hit


def garside_element(sol: Solution) -> Word:
    """A word for the right lcm of all generators, folded in index order."""
    m = _Monoid(sol)
    return multi_lcm(m.table, range(sol.n))


def simples(sol: Solution) -> SimpleSet:
    """Right lcms of the non-empty generator subsets, deduplicated up to
    word equality, plus the empty word.

    The result is closed under right complement; a defect would mean the
    input is not a braided solution and raises RuntimeError.
    """
    m = _Monoid(sol)
    n = sol.n
    by_canon: dict[Word, frozenset[int]] = {(): frozenset()}
    for mask in range(1, 1 << n):
        subset = frozenset(i for i in range(n) if mask >> i & 1)
        w = m.canon(multi_lcm(m.table, subset))
        by_canon.setdefault(w, subset)
    elements = tuple(sorted(by_canon, key=lambda w: (len(w), w)))
    subsets = tuple(by_canon[w] for w in elements)
    chi = set(elements)
    for u in elements:
        for v in elements:
            c = m.canon(reverse_words(m.table, u, v)[0])
            if c not in chi:
                raise RuntimeError(
                    "simples not closed under right complement at (%s, %s)" % (u, v)
                )
    return SimpleSet(elements, subsets)


def exponent(sol: Solution) -> int:
    """Order of the map u -> (u \\ D) \\ D on the simple elements, D being
    the Garside element.  The map must permute the simples and fix both
    the empty word and D; anything else signals an upstream defect."""
    m = _Monoid(sol)
    delta = multi_lcm(m.table, range(sol.n))
    chi = simples(sol).elements
    image: dict[Word, Word] = {}
    for u in chi:
        step = reverse_words(m.table, u, delta)[0]
        image[u] = m.canon(reverse_words(m.table, step, delta)[0])
    if sorted(image.values()) != sorted(chi):
        raise RuntimeError("conjugation by the Garside element does not permute the simples")
    orders = []
    seen: set[Word] = set()
    for start in chi:
        if start in seen:
            continue
        length = 0
        cur = start
        while True:
            seen.add(cur)
            cur = image[cur]
            length += 1
            if cur == start:
                break
        orders.append(length)
    return lcm(*orders)


def complement_closure_set(sol: Solution, x: int) -> frozenset[int]:
    """Least set of generators containing x and closed under y -> b \\ y
    for every generator b != y.

    Complements against a fixed generator only ever produce generators, so
    this is exactly the set of all w \\ x over the monoid, without its
    empty word.
    """
    m = _Monoid(sol)
    if not 0 <= x < sol.n:
        raise ValueError("generator index out of range 1..%d" % sol.n)
    closure = {x}
    frontier = [x]
    while frontier:
        y = frontier.pop()
        for b in range(sol.n):
            if b == y:
                continue
            z = m.table.right[b][y]
            if z not in closure:
                closure.add(z)
                frontier.append(z)
    return frozenset(closure)


def purity_report(sol: Solution) -> PurityReport:
    """Closure sets of all generators, the purity verdict, and the block
    partition the sets induce.

    Purity is decided set-wise; the element-wise formulation (all right
    lcms of the closure sets equal in the monoid) is computed as well and
    must agree.
    """
    m = _Monoid(sol)
    sets = tuple(complement_closure_set(sol, x) for x in range(sol.n))
    distinct: list[frozenset[int]] = []
    for s in sets:
        if s not in distinct:
            distinct.append(s)
    pure = len(distinct) == 1
    deltas = {m.canon(multi_lcm(m.table, s)) for s in distinct}
    if (len(deltas) == 1) != pure:
        raise RuntimeError(
            "set-wise and element-wise purity disagree: %d closure sets, %d lcm classes"
            % (len(distinct), len(deltas))
        )
    return PurityReport(
        closure_sets=sets,
        delta_pure=pure,
        partition=tuple(sorted(distinct, key=sorted)),
    )


def is_delta_pure(sol: Solution) -> bool:
    return purity_report(sol).delta_pure


def invariant_subset_check(sol: Solution, Y) -> bool:
    """Whether S maps Y x Y into Y x Y."""
    ys = set(Y)
    if any(not 0 <= y < sol.n for y in ys):
        raise ValueError("subset contains a generator outside 1..%d" % sol.n)
    for i in ys:
        for j in ys:
            a, b = eval_S(sol, i, j)
            if a not in ys or b not in ys:
                return False
    return True


def decomposition(sol: Solution) -> tuple[frozenset[int], frozenset[int]] | None:
    """A split of the generators into two non-empty invariant blocks, or
    None.  Exhausts all proper bipartitions, so this is ground truth; the
    first witness in mask order is returned."""
    n = sol.n
    full = (1 << n) - 1
    for mask in range(1, full):
        if not mask & 1:  # fix 0 in Y to skip complements
            continue
        Y = frozenset(i for i in range(n) if mask >> i & 1)
        Z = frozenset(i for i in range(n) if not mask >> i & 1)
        if not Z:
            continue
        if invariant_subset_check(sol, Y) and invariant_subset_check(sol, Z):
            return Y, Z
    return None


def is_indecomposable(sol: Solution) -> bool:
    _require_braided_involutive(sol)
    return decomposition(sol) is None
