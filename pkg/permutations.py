"""Permutations on points 1..n and the cycle-notation text format.

Conventions (used everywhere in this repo):
  - points are 1-based externally; ``images[i - 1]`` is the image of point i
  - the degree is explicit, so (1,2) in S2 and (1,2) in S5 are different values
  - ``compose(p, q)`` applies q first: compose(p, q)(i) == p(q(i))

Cycle grammar: ``(a,b,c)(d,e)``; whitespace between tokens is ignored,
``""`` and ``"()"`` both mean the identity. This is the only text format for
permutations (CLI, JSON export, test fixtures).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Sequence, Tuple


class PermutationError(ValueError):
    """Base for every invalid-permutation condition."""


class DuplicatePointError(PermutationError):
    pass


class PointOutOfRangeError(PermutationError):
    pass


class MalformedCycleError(PermutationError):
    pass


class DegreeMismatchError(PermutationError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n < 1:
            raise PermutationError("degree must be >= 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise PermutationError(f"images {self.images!r} are not a bijection on 1..{n}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return format_permutation(self)


def identity(degree: int) -> Permutation:
    return Permutation(tuple(range(1, int(degree) + 1)))


def from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
    """Build from already-split cycles; same validation as the parser."""
    images = list(range(1, degree + 1))
    seen: set = set()
    for cyc in cycles:
        for pt in cyc:
            if pt < 1 or pt > degree:
                raise PointOutOfRangeError(f"point {pt} outside 1..{degree}")
            if pt in seen:
                raise DuplicatePointError(f"point {pt} appears more than once")
            seen.add(pt)
        for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
            images[a - 1] = b
    return Permutation(tuple(images))


# ---------------------------------------------------------------------------
# Parsing / formatting
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(,)|(\d+)|(\S))")


def _tokenize(text: str) -> List[Tuple[str, str]]:
    out: List[Tuple[str, str]] = []
    pos = 0
    text = text or ""
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        lp, rp, comma, num, junk = m.groups()
        if lp:
            out.append(("(", lp))
        elif rp:
            out.append((")", rp))
        elif comma:
            out.append((",", comma))
        elif num:
            out.append(("num", num))
        elif junk:
            raise MalformedCycleError(f"unexpected character {junk!r} at offset {m.start(5)}")
        pos = m.end()
    return out


def parse_cycles(text: str) -> List[List[int]]:
    """Split cycle notation into point lists without checking any degree."""
    tokens = _tokenize(text)
    cycles: List[List[int]] = []
    i = 0
    while i < len(tokens):
        kind, _ = tokens[i]
        if kind != "(":
            raise MalformedCycleError(f"expected '(' but found {tokens[i][1]!r}")
        i += 1
        cyc: List[int] = []
        expect_point = True
        while True:
            if i >= len(tokens):
                raise MalformedCycleError("unclosed '('")
            kind, val = tokens[i]
            if kind == ")":
                if cyc and expect_point:
                    raise MalformedCycleError("trailing ',' before ')'")
                i += 1
                break
            if expect_point and kind == "num":
                cyc.append(int(val))
                expect_point = False
            elif not expect_point and kind == ",":
                expect_point = True
            else:
                raise MalformedCycleError(f"unexpected {val!r} inside cycle")
            i += 1
        cycles.append(cyc)
    return cycles


def parse_permutation(text: str, degree: int) -> Permutation:
    if int(degree) < 1:
        raise PointOutOfRangeError("degree must be >= 1")
    cycles = parse_cycles(text)
    for cyc in cycles:
        if len(set(cyc)) != len(cyc):
            raise DuplicatePointError(f"point repeated inside cycle {tuple(cyc)}")
    return from_cycles(cycles, int(degree))


def parse_generator_list(text: str, degree: int) -> List[Permutation]:
    """``"(1,2);(1,2,3)"`` -> two permutations. Empty parts are skipped."""
    parts = [p for p in (text or "").split(";") if p.strip()]
    return [parse_permutation(p, degree) for p in parts]


def cycles(p: Permutation) -> List[Tuple[int, ...]]:
    """Non-trivial cycles, each starting at its smallest point, ordered by it."""
    seen = [False] * (p.degree + 1)
    out: List[Tuple[int, ...]] = []
    for start in range(1, p.degree + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        nxt = p(start)
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p(nxt)
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def format_permutation(p: Permutation) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(x) for x in cyc) + ")" for cyc in cs)


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: the result maps i to p(q(i))."""
    if p.degree != q.degree:
        raise DegreeMismatchError(f"cannot compose degree {p.degree} with degree {q.degree}")
    pi = p.images
    return Permutation(tuple(pi[j - 1] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for i, img in enumerate(p.images, start=1):
        out[img - 1] = i
    return Permutation(tuple(out))


def order_of(p: Permutation) -> int:
    return reduce(math.lcm, (len(cyc) for cyc in cycles(p)), 1)


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result
