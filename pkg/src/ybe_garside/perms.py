"""Permutations of {0, .., n-1} stored as tuples of images.

A permutation p maps i to p[i].  All indices are 0-based internally;
parsing and formatting use the 1-based convention of the text formats.
"""

from __future__ import annotations

import itertools
import math
import re


def is_permutation(images) -> bool:
    n = len(images)
    return sorted(images) == list(range(n))


def check_permutation(images) -> tuple[int, ...]:
    """Validate and freeze a permutation given as any iterable of images."""
    p = tuple(images)
    if not is_permutation(p):
        raise ValueError(
            "not a permutation of {1..%d}: %s" % (len(p), [i + 1 for i in p])
        )
    return p


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def inverse(p) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def compose(p, q) -> tuple[int, ...]:
    """Composition p.q: apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(q)))


def power(p, k: int) -> tuple[int, ...]:
    """k-th power of p, k may be negative."""
    n = len(p)
    if k < 0:
        return power(inverse(p), -k)
    r = identity(n)
    b = tuple(p)
    while k:
        if k & 1:
            r = compose(b, r)
        b = compose(b, b)
        k >>= 1
    return r


def cycles(p) -> list[tuple[int, ...]]:
    """Disjoint cycles of p (fixed points included as 1-cycles), each cycle
    starting at its least element, cycles sorted by least element."""
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def order(p) -> int:
    return math.lcm(*(len(c) for c in cycles(p))) if p else 1


def all_permutations(n: int):
    """All permutations of {0..n-1} in lexicographic order."""
    return itertools.permutations(range(n))


def format_cycles(p) -> str:
    """Cycle notation with 1-based entries, fixed points shown, e.g. (1,2,3)(5)."""
    return "".join(
        "(" + ",".join(str(i + 1) for i in c) + ")" for c in cycles(p)
    )


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int) -> tuple[int, ...]:
    """Parse 1-based cycle notation "(1,2,3)(5)" or image notation "2 3 1".

    In cycle notation, indices absent from every cycle are fixed points.
    """
    text = text.strip()
    if text.startswith("("):
        tail = _CYCLE_RE.sub("", text).strip()
        if tail:
            raise ValueError("malformed cycle notation: %r" % text)
        images = list(range(n))
        seen: set[int] = set()
        for body in _CYCLE_RE.findall(text):
            entries = [tok for tok in re.split(r"[,\s]+", body.strip()) if tok]
            cyc = []
            for tok in entries:
                if not tok.isdigit():
                    raise ValueError("bad cycle entry %r in %r" % (tok, text))
                v = int(tok) - 1
                if not 0 <= v < n:
                    raise ValueError(
                        "cycle entry %s out of range 1..%d" % (tok, n)
                    )
                if v in seen:
                    raise ValueError("index %s occurs twice in %r" % (tok, text))
                seen.add(v)
                cyc.append(v)
            for pos, v in enumerate(cyc):
                images[v] = cyc[(pos + 1) % len(cyc)]
        return tuple(images)
    toks = [tok for tok in re.split(r"[,\s]+", text) if tok]
    if len(toks) != n:
        raise ValueError("expected %d images, got %d" % (n, len(toks)))
    try:
        images = [int(tok) - 1 for tok in toks]
    except ValueError:
        raise ValueError("bad image list %r" % text) from None
    if any(not 0 <= v < n for v in images):
        raise ValueError("image out of range 1..%d in %r" % (n, text))
    return check_permutation(images)
