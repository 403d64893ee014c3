"""Command-line interface.

Exit codes follow a shell-friendly convention: 0 for success or a true
mathematical verdict, 1 for a false or negative verdict (not involutive,
not isomorphic, indecomposable input to `decompose`, ...), 2 for malformed
or out-of-contract input.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import census as census_mod
from . import garside as garside_mod
from . import permsol as permsol_mod
from .perms import format_cycles, parse_permutation
from .presentation import (
    are_t_isomorphic,
    presentation_to_solution,
    solution_to_presentation,
    validate_tableau_conditions,
)
from .reversing import build_complement_table, reverse_words, right_lcm
from .solution import AxiomError, Solution, are_isomorphic, solution_report
from .textio import (
    FormatError,
    format_presentation,
    format_solution,
    format_word,
    parse_presentation,
    parse_solution,
    parse_word,
)

OK, FALSE, BAD_INPUT = 0, 1, 2
_MARK = {True: "✓", False: "✗"}


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(0, "cannot read %s: %s" % (path, exc.strerror)) from None


def _load_solution(path: str) -> Solution:
    return parse_solution(_read(path))


def _kv(pairs) -> str:
    return "\n".join("%s=%s" % (k, v) for k, v in pairs)


def _bool_kv(value: bool) -> str:
    return "true" if value else "false"


def cmd_check(args) -> int:
    sol = _load_solution(args.solution)
    rep = solution_report(sol)
    if args.format == "kv":
        print(
            _kv(
                [
                    ("nondegenerate", _bool_kv(rep.nondegenerate)),
                    ("involutive", _bool_kv(rep.involutive)),
                    ("braided", _bool_kv(rep.braided)),
                    ("square_free", _bool_kv(rep.square_free)),
                ]
            )
        )
    else:
        print(
            "nondegenerate %s involutive %s braided %s square_free %s"
            % (
                _MARK[rep.nondegenerate],
                _MARK[rep.involutive],
                _MARK[rep.braided],
                _MARK[rep.square_free],
            )
        )
        if rep.first_violation is not None:
            name, idx = rep.first_violation
            print("first violation: %s at %s" % (name, tuple(i + 1 for i in idx)))
    return OK if rep.nondegenerate and rep.involutive and rep.braided else FALSE


def cmd_present(args) -> int:
    sol = _load_solution(args.solution)
    print(format_presentation(solution_to_presentation(sol)), end="")
    return OK


def cmd_to_solution(args) -> int:
    pres = parse_presentation(_read(args.presentation))
    report = validate_tableau_conditions(pres)
    if not report.count_ok:
        print(
            "relation count %d differs from n(n-1)/2 = %d"
            % (report.relation_count, report.expected_count),
            file=sys.stderr,
        )
        return FALSE
    sol = presentation_to_solution(pres)
    rep = solution_report(sol)
    if not (rep.involutive and rep.braided):
        print("derived map is not an involutive braided solution", file=sys.stderr)
        return FALSE
    print(format_solution(sol), end="")
    return OK


def cmd_reverse(args) -> int:
    sol = _load_solution(args.solution)
    table = build_complement_table(sol)
    u = parse_word(args.u, sol.n)
    v = parse_word(args.v, sol.n)
    uv, vu = reverse_words(table, u, v)
    if args.format == "kv":
        print(_kv([("u_over_v", format_word(uv)), ("v_over_u", format_word(vu))]))
    else:
        print("u\\v = %s, v\\u = %s" % (format_word(uv), format_word(vu)))
    return OK


def cmd_lcm(args) -> int:
    sol = _load_solution(args.solution)
    table = build_complement_table(sol)
    u = parse_word(args.u, sol.n)
    v = parse_word(args.v, sol.n)
    w = right_lcm(table, u, v)
    print(_kv([("lcm", format_word(w))]) if args.format == "kv" else format_word(w))
    return OK


def cmd_delta(args) -> int:
    sol = _load_solution(args.solution)
    w = garside_mod.garside_element(sol)
    if args.format == "kv":
        print(_kv([("delta", format_word(w)), ("delta_length", len(w))]))
    else:
        print(format_word(w))
    return OK


def cmd_simples(args) -> int:
    sol = _load_solution(args.solution)
    chi = garside_mod.simples(sol)
    if args.format == "kv":
        print(_kv([("simples_count", len(chi))]))
        for w in chi.elements:
            print("simple=%s" % format_word(w))
    else:
        print("%d simple elements" % len(chi))
        for w in chi.elements:
            print("  %s" % format_word(w))
    return OK


def cmd_exponent(args) -> int:
    sol = _load_solution(args.solution)
    e = garside_mod.exponent(sol)
    print(_kv([("exponent", e)]) if args.format == "kv" else str(e))
    return OK


def cmd_purity(args) -> int:
    sol = _load_solution(args.solution)
    rep = garside_mod.purity_report(sol)
    partition = ";".join(
        ",".join(str(x + 1) for x in sorted(block)) for block in rep.partition
    )
    if args.format == "kv":
        print(
            _kv(
                [
                    ("delta_pure", _bool_kv(rep.delta_pure)),
                    ("partition", partition),
                ]
            )
        )
    else:
        print("delta-pure: %s" % _MARK[rep.delta_pure])
        for x, block in enumerate(rep.closure_sets):
            print(
                "  closure of x%d: {%s}"
                % (x + 1, ", ".join("x%d" % (y + 1) for y in sorted(block)))
            )
    return OK if rep.delta_pure else FALSE


def cmd_decompose(args) -> int:
    sol = _load_solution(args.solution)
    split = garside_mod.decomposition(sol)
    if args.format == "kv":
        print(_kv([("indecomposable", _bool_kv(split is None))]))
        if split is not None:
            print(
                "partition=%s"
                % ";".join(",".join(str(x + 1) for x in sorted(b)) for b in split)
            )
    elif split is None:
        print("indecomposable")
    else:
        y, z = split
        print(
            "decomposable: {%s} | {%s}"
            % (
                ", ".join("x%d" % (x + 1) for x in sorted(y)),
                ", ".join("x%d" % (x + 1) for x in sorted(z)),
            )
        )
    return OK if split is not None else FALSE


def cmd_iso(args) -> int:
    a = _load_solution(args.solution_a)
    b = _load_solution(args.solution_b)
    phi = are_isomorphic(a, b)
    if phi is None:
        print("not isomorphic")
        return FALSE
    print("isomorphic via %s" % format_cycles(phi))
    return OK


def cmd_t_iso(args) -> int:
    p = parse_presentation(_read(args.presentation_a))
    q = parse_presentation(_read(args.presentation_b))
    s = are_t_isomorphic(p, q)
    if s is None:
        print("not t-isomorphic")
        return FALSE
    print("t-isomorphic via %s" % format_cycles(s))
    return OK


def _parse_perm_arg(text: str, n: int, name: str):
    try:
        return parse_permutation(text, n)
    except ValueError as exc:
        raise FormatError(0, "bad %s: %s" % (name, exc)) from None


def cmd_quotient(args) -> int:
    f = _parse_perm_arg(args.f, args.n, "f")
    g = _parse_perm_arg(args.g, args.n, "g")
    ps = permsol_mod.PermutationSolution(args.n, f, g)
    if not ps.braided:
        print("fg != gf: permutation solution is not braided", file=sys.stderr)
        return FALSE
    qm, qsol = permsol_mod.quotient_solution(ps)
    for t, cls in enumerate(qm.classes):
        print(
            "# class %d: {%s}" % (t + 1, ", ".join("x%d" % (x + 1) for x in cls))
        )
    print(format_presentation(solution_to_presentation(qsol)), end="")
    return OK


def cmd_perm_delta(args) -> int:
    f = _parse_perm_arg(args.f, args.n, "f")
    w = permsol_mod.delta_from_cycles(f)
    print(_kv([("delta", format_word(w))]) if args.format == "kv" else format_word(w))
    return OK


def cmd_census(args) -> int:
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    entries = census_mod.enumerate_solutions(
        args.n, jobs=jobs, long_running=args.long_running
    )
    if args.out:
        census_mod.write_census(entries, args.out)
    if args.format == "kv":
        print(_kv([("n", args.n), ("solutions", len(entries))]))
    else:
        print("%d solutions" % len(entries))
    return OK


def cmd_verify_census(args) -> int:
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    entries = census_mod.enumerate_solutions(
        args.n, jobs=jobs, long_running=args.long_running
    )
    report = census_mod.verify_census(entries)
    if args.format == "kv":
        print(
            _kv(
                [
                    ("entries", report.entries_checked),
                    ("violations", len(report.violations)),
                ]
            )
        )
    else:
        print(
            "%d entries checked, %d violations"
            % (report.entries_checked, len(report.violations))
        )
    for line in report.violations:
        print("violation: %s" % line)
    return OK if report.ok else FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybe-garside",
        description="Garside structure of finite set-theoretic Yang-Baxter solutions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("text", "kv"), default="text")
        return p

    p = add("check", cmd_check, "verify the solution axioms of a solution file")
    p.add_argument("solution")
    p = add("present", cmd_present, "print the structure monoid presentation")
    p.add_argument("solution")
    p = add("to-solution", cmd_to_solution, "convert a tableau presentation to a solution")
    p.add_argument("presentation")
    for name, fn in (("reverse", cmd_reverse), ("lcm", cmd_lcm)):
        p = add(name, fn, "%s of two words" % ("reversing" if name == "reverse" else "right lcm"))
        p.add_argument("solution")
        p.add_argument("u")
        p.add_argument("v")
    p = add("delta", cmd_delta, "Garside element (right lcm of the generators)")
    p.add_argument("solution")
    p = add("simples", cmd_simples, "simple elements")
    p.add_argument("solution")
    p = add("exponent", cmd_exponent, "order of conjugation by the Garside element")
    p.add_argument("solution")
    p = add("purity", cmd_purity, "closure sets and purity verdict")
    p.add_argument("solution")
    p = add("decompose", cmd_decompose, "find an invariant bipartition")
    p.add_argument("solution")
    p = add("iso", cmd_iso, "solution isomorphism")
    p.add_argument("solution_a")
    p.add_argument("solution_b")
    p = add("t-iso", cmd_t_iso, "presentation t-isomorphism")
    p.add_argument("presentation_a")
    p.add_argument("presentation_b")
    p = add("quotient", cmd_quotient, "quotient presentation of a permutation solution")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-f", required=True, help="permutation, cycles or image list, 1-based")
    p.add_argument("-g", required=True, help="permutation, cycles or image list, 1-based")
    p = add("perm-delta", cmd_perm_delta, "Garside element from the cycles of a permutation")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-f", required=True, help="permutation, cycles or image list, 1-based")
    for name, fn in (("census", cmd_census), ("verify-census", cmd_verify_census)):
        p = add(name, fn, "%s solutions up to isomorphism" % ("enumerate" if name == "census" else "enumerate and certify"))
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--jobs", type=int, default=0, help="worker count; 0 = all cores")
        if name == "census":
            p.add_argument("--out", default=None)
        p.add_argument("--long-running", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return BAD_INPUT
    except AxiomError as exc:
        print("rejected: %s" % exc, file=sys.stderr)
        return FALSE
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
