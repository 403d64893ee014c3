"""Exhaustive census of solutions up to isomorphism, with verification.

The search enumerates g-tuples (f is forced by involutivity), so the raw
space is (n!)^n rather than all bijections of X^2; forcing and partial
checks in the kernel keep the tree small.  Labeled solutions are grouped
into isomorphism classes by expanding relabeling orbits, each class keyed
by the least S-table serialization in its orbit, which makes counts and
output order independent of sharding and worker count.
"""

from __future__ import annotations

import hashlib
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .garside import decomposition, exponent, garside_element, is_delta_pure
from .solution import Solution, SolutionReport, canonical_form, solution_report

MAX_CENSUS_N = 6
LONG_RUNNING_N = 5  # this size and above is opt-in


@dataclass(frozen=True)
class CensusFlags:
    report: SolutionReport
    square_free: bool
    delta_pure: bool
    indecomposable: bool
    exponent: int
    delta_length: int


@dataclass(frozen=True)
class CensusEntry:
    solution: Solution
    canonical: bytes
    flags: CensusFlags

    @property
    def canonical_hash(self) -> str:
        return hashlib.sha256(self.canonical).hexdigest()[:16]


@dataclass(frozen=True)
class CensusReport:
    entries_checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _solution_from_gtuple(n: int, gtuple) -> Solution:
    G, F = _kernels.gtuple_to_solution_arrays(n, gtuple)
    g = tuple(tuple(int(x) for x in row) for row in G)
    f = tuple(tuple(int(F[j, i]) for i in range(n)) for j in range(n))
    return Solution(n, g, f)


def _search_shard(args) -> np.ndarray:
    n, lo, hi = args
    return _kernels.search_gtuples(n, lo, hi)


def search_labeled(n: int, jobs: int = 1) -> list[tuple[int, ...]]:
    """All labeled solutions at size n as g-tuples of permutation indices,
    in deterministic order regardless of the worker count."""
    nf = math.factorial(n)
    if jobs <= 1 or nf < 2:
        rows = _kernels.search_gtuples(n)
        return [tuple(int(x) for x in r) for r in rows]
    # one shard per first-row candidate keeps the merge order obvious;
    # the identity-heavy early shards dominate, so fine sharding balances
    # better than a handful of wide ranges.
    shards = [(n, lo, lo + 1) for lo in range(nf)]
    out: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=min(jobs, nf)) as pool:
        for rows in pool.map(_search_shard, shards, chunksize=max(1, nf // (8 * jobs))):
            out.extend(tuple(int(x) for x in r) for r in rows)
    return out


def _group_classes(n: int, labeled: list[tuple[int, ...]]) -> list[tuple[bytes, tuple[int, ...]]]:
    """Group labeled solutions into isomorphism classes.

    Returns one (canonical S-table bytes, witnessing g-tuple) pair per
    class, sorted by the canonical bytes.  Every relabeling of a labeled
    solution must itself have been found; a gap would mean the search
    missed solutions and raises."""
    labeled_set = set(labeled)
    claimed: set[tuple[int, ...]] = set()
    classes: list[tuple[bytes, tuple[int, ...]]] = []
    for gt in labeled:
        if gt in claimed:
            continue
        orbit = _kernels.relabel_orbit(n, gt)
        serialized = _kernels.s_table_bytes_bulk(n, orbit)
        best: bytes | None = None
        best_gt = gt
        for row, ser_row in zip(orbit, serialized):
            member = tuple(int(x) for x in row)
            if member not in labeled_set:
                raise RuntimeError(
                    "census search missed a relabeling of a found solution"
                )
            claimed.add(member)
            ser = ser_row.tobytes()
            if best is None or ser < best:
                best, best_gt = ser, member
        classes.append((best, best_gt))
    classes.sort()
    return classes


def _entry_flags(sol: Solution) -> CensusFlags:
    report = solution_report(sol)
    return CensusFlags(
        report=report,
        square_free=report.square_free,
        delta_pure=is_delta_pure(sol),
        indecomposable=decomposition(sol) is None,
        exponent=exponent(sol),
        delta_length=len(garside_element(sol)),
    )


def enumerate_solutions(n: int, jobs: int = 1, long_running: bool = False) -> list[CensusEntry]:
    """The census at size n: one entry per isomorphism class, sorted by
    canonical form.  Sizes 5 and 6 must be requested with long_running."""
    if not 1 <= n <= MAX_CENSUS_N:
        raise ValueError("census supports 1 <= n <= %d" % MAX_CENSUS_N)
    if n >= LONG_RUNNING_N and not long_running:
        raise ValueError(
            "census at n=%d is long-running; pass long_running=True (--long-running)" % n
        )
    labeled = search_labeled(n, jobs=jobs)
    entries = []
    for canon, gt in _group_classes(n, labeled):
        sol = _solution_from_gtuple(n, gt)
        entries.append(CensusEntry(solution=sol, canonical=canon, flags=_entry_flags(sol)))
    canons = [e.canonical for e in entries]
    if len(set(canons)) != len(canons):
        raise RuntimeError("duplicate canonical forms in census")
    return entries


def verify_census(entries) -> CensusReport:
    """Certificate suite over census entries.

    Per entry: coherence and left coherence of the letter complements,
    complements of simples by generators stay letters-or-empty, the
    Garside element has length n, purity agrees with the exhaustive
    decomposability scan, and the simples are closed under right
    complement.  Violations are reported, not raised, so corrupted entries
    surface as report lines."""
    from .garside import is_indecomposable, simples
    from .reversing import build_complement_table, check_coherence, check_left_coherence, reverse_words

    violations: list[str] = []
    checked = 0
    for entry in entries:
        checked += 1
        sol = entry.solution
        tag = entry.canonical_hash

        def bad(msg: str, tag=tag):
            violations.append("%s: %s" % (tag, msg))

        try:
            table = build_complement_table(sol)
            ok, wit = check_coherence(table)
            if not ok:
                bad("coherence fails at triple %s" % (tuple(x + 1 for x in wit),))
            ok, wit = check_left_coherence(table)
            if not ok:
                bad("left coherence fails at triple %s" % (tuple(x + 1 for x in wit),))
            delta = garside_element(sol)
            if len(delta) != sol.n:
                bad("Garside element has length %d, expected %d" % (len(delta), sol.n))
            chi = simples(sol)  # raises if not closed under complement
            for w in chi.elements:
                for x in range(sol.n):
                    comp_w = reverse_words(table, w, (x,))[0]
                    if len(comp_w) > 1:
                        bad("complement of a generator by a simple has length %d" % len(comp_w))
            if is_delta_pure(sol) != is_indecomposable(sol):
                bad("purity and indecomposability disagree")
        except (ValueError, RuntimeError) as exc:
            bad(str(exc))
    return CensusReport(entries_checked=checked, violations=tuple(violations))


def write_census(entries, outdir: str) -> str:
    """One solution file per entry plus summary.tsv; returns the tsv path."""
    from .textio import format_solution

    os.makedirs(outdir, exist_ok=True)
    rows = ["canonical-hash\tsquare_free\tdecomposable\tdelta_pure\texponent\tdelta_length"]
    for idx, entry in enumerate(entries):
        name = "sol_n%d_%03d_%s.txt" % (entry.solution.n, idx, entry.canonical_hash[:8])
        with open(os.path.join(outdir, name), "w") as fh:
            fh.write(format_solution(entry.solution))
        fl = entry.flags
        rows.append(
            "%s\t%s\t%s\t%s\t%d\t%d"
            % (
                entry.canonical_hash,
                str(fl.square_free).lower(),
                str(not fl.indecomposable).lower(),
                str(fl.delta_pure).lower(),
                fl.exponent,
                fl.delta_length,
            )
        )
    tsv = os.path.join(outdir, "summary.tsv")
    with open(tsv, "w") as fh:
        fh.write("\n".join(rows) + "\n")
    return tsv


def census_canonical_forms(entries) -> list[bytes]:
    return [e.canonical for e in entries]


def cross_check_canonical(entries) -> bool:
    """The kernel's orbit-minimum serialization must equal canonical_form
    of the entry solution (they minimise the same table two ways)."""
    return all(canonical_form(e.solution) == e.canonical for e in entries)
