"""Text formats: solution files, presentation files, and words.

All indices are 1-based on disk and on the command line.  Lines starting
with '#' are comments.  A solution file is

    n 5
    g 1 2 3 4 1 5
    ...
    f 1 2 3 4 1 5

with one g-line and one f-line per generator giving the image list; the
whole f-block may be replaced by the single line "f derived", which asks
for the unique f-tuple an involutive solution would have.  A presentation
file is "n <int>" followed by one relation "i j = k l" per line.  Words
are whitespace-separated generator tokens like "x4 4"; "e" is the empty
word.
"""

from __future__ import annotations

from .presentation import Relation, TableauPresentation
from .reversing import Word
from .solution import AxiomError, Solution, derive_f_from_g
from .perms import is_permutation


class FormatError(ValueError):
    """Malformed input file; carries a 1-based line number (0 when the
    defect is not tied to one line, e.g. a missing block)."""

    def __init__(self, line: int, message: str):
        super().__init__("line %d: %s" % (line, message) if line else message)
        self.line = line


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _parse_header(lines) -> tuple[int, int]:
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError(1, "empty file; expected 'n <int>'") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n":
        raise FormatError(lineno, "expected 'n <int>', got %r" % line)
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError(lineno, "bad generator count %r" % parts[1]) from None
    if n < 1:
        raise FormatError(lineno, "generator count must be at least 1")
    return lineno, n


def parse_solution(text: str) -> Solution:
    """Parse a solution file; rows must be bijections and a 'f derived'
    block must admit an involutive partner tuple (AxiomError otherwise)."""
    lines = _content_lines(text)
    _, n = _parse_header(lines)
    g: list[tuple[int, ...] | None] = [None] * n
    f: list[tuple[int, ...] | None] = [None] * n
    f_derived = False
    for lineno, line in lines:
        parts = line.split()
        if parts[0] == "f" and len(parts) == 2 and parts[1] == "derived":
            f_derived = True
            continue
        if parts[0] not in ("g", "f"):
            raise FormatError(lineno, "expected a 'g' or 'f' line, got %r" % line)
        if len(parts) != n + 2:
            raise FormatError(
                lineno, "expected '%s <i> <%d images>', got %d fields" % (parts[0], n, len(parts))
            )
        try:
            idx = int(parts[1])
            images = tuple(int(tok) - 1 for tok in parts[2:])
        except ValueError:
            raise FormatError(lineno, "non-integer entry in %r" % line) from None
        if not 1 <= idx <= n:
            raise FormatError(lineno, "index %d out of range 1..%d" % (idx, n))
        if any(not 0 <= v < n for v in images):
            raise FormatError(lineno, "image out of range 1..%d" % n)
        fam = g if parts[0] == "g" else f
        if fam[idx - 1] is not None:
            raise FormatError(lineno, "%s %d given twice" % (parts[0], idx))
        fam[idx - 1] = images
    missing = [i + 1 for i, row in enumerate(g) if row is None]
    if missing:
        raise FormatError(0, "missing g-lines for indices %s" % missing)
    for i, row in enumerate(g):
        if not is_permutation(row):
            raise AxiomError("g_%d is not a bijection: solution is degenerate" % (i + 1))
    if f_derived:
        if any(row is not None for row in f):
            raise FormatError(0, "'f derived' cannot be mixed with explicit f-lines")
        derived = derive_f_from_g(tuple(g))
        if derived is None:
            raise AxiomError("no involutive solution extends the given g-tuple")
        return Solution(n, tuple(g), derived)
    missing = [i + 1 for i, row in enumerate(f) if row is None]
    if missing:
        raise FormatError(0, "missing f-lines for indices %s (or use 'f derived')" % missing)
    for i, row in enumerate(f):
        if not is_permutation(row):
            raise AxiomError("f_%d is not a bijection: solution is degenerate" % (i + 1))
    return Solution(n, tuple(g), tuple(f))


def format_solution(sol: Solution) -> str:
    out = ["n %d" % sol.n]
    for i, row in enumerate(sol.g):
        out.append("g %d %s" % (i + 1, " ".join(str(v + 1) for v in row)))
    for i, row in enumerate(sol.f):
        out.append("f %d %s" % (i + 1, " ".join(str(v + 1) for v in row)))
    return "\n".join(out) + "\n"


def parse_presentation(text: str) -> TableauPresentation:
    lines = _content_lines(text)
    _, n = _parse_header(lines)
    rels = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 5 or parts[2] != "=":
            raise FormatError(lineno, "expected 'i j = k l', got %r" % line)
        try:
            a, b, c, d = (int(parts[p]) - 1 for p in (0, 1, 3, 4))
        except ValueError:
            raise FormatError(lineno, "non-integer generator in %r" % line) from None
        for v in (a, b, c, d):
            if not 0 <= v < n:
                raise FormatError(lineno, "generator out of range 1..%d" % n)
        if (a, b) == (c, d):
            raise FormatError(lineno, "trivial relation %r" % line)
        rels.add(Relation.make(a, b, c, d))
    return TableauPresentation(n, frozenset(rels))


def format_presentation(pres: TableauPresentation) -> str:
    out = ["n %d" % pres.n]
    for rel in pres.sorted_relations():
        (a, b), (c, d) = rel.sides()
        out.append("%d %d = %d %d" % (a + 1, b + 1, c + 1, d + 1))
    return "\n".join(out) + "\n"


def parse_word(text: str, n: int) -> Word:
    """Parse "x4 x4", "4 4" or "e" (the empty word)."""
    toks = text.split()
    if toks == ["e"]:
        return ()
    letters = []
    for tok in toks:
        body = tok[1:] if tok.startswith("x") else tok
        if not body.isdigit():
            raise ValueError("bad generator token %r" % tok)
        v = int(body) - 1
        if not 0 <= v < n:
            raise ValueError("generator %s out of range 1..%d" % (tok, n))
        letters.append(v)
    return tuple(letters)


def format_word(w: Word) -> str:
    if not w:
        return "e"
    return " ".join("x%d" % (x + 1) for x in w)
