"""Complete sparse rulers: verification, difference representations,
Wichmann-family constructions, and length-covering construction.

A ruler of length n is a set of integer marks containing 0 and n; it is
complete when every distance in 0..n occurs as a difference of two
marks. Minimizing marks for a given length is the central optimization
problem; the Wichmann family gives near-optimal explicit rulers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


class IncompleteRuler(ValueError):
    """A complete ruler was required."""


class DuplicateMark(ValueError):
    """A difference representation produced a repeated mark."""


class InvalidParams(ValueError):
    """Construction parameters outside their admissible range."""


@dataclass(frozen=True)
class Ruler:
    """Strictly increasing marks; marks[0] == 0; length is the last mark."""

    marks: tuple

    def __post_init__(self):
        if not self.marks:
            raise ValueError("a ruler has at least the mark 0")
        if self.marks[0] != 0:
            raise ValueError(f"smallest mark must be 0, got {self.marks[0]}")
        for a, b in zip(self.marks, self.marks[1:]):
            if b <= a:
                raise ValueError(f"marks must strictly increase, got {a} then {b}")

    @property
    def length(self) -> int:
        return self.marks[-1]

    def __len__(self) -> int:
        return len(self.marks)

    @classmethod
    def from_marks(cls, marks: Iterable[int]) -> "Ruler":
        return cls(tuple(sorted(set(marks))))

    def reflected(self) -> "Ruler":
        n = self.length
        return Ruler(tuple(n - m for m in reversed(self.marks)))

    def text(self) -> str:
        return ",".join(str(m) for m in self.marks)

    @classmethod
    def parse(cls, text: str) -> "Ruler":
        try:
            marks = [int(part) for part in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"bad ruler text {text!r}: {exc}") from None
        return cls.from_marks(marks)


@dataclass(frozen=True)
class DifferenceRepresentation:
    """Consecutive mark differences; entries are nonzero, negatives allowed."""

    diffs: tuple

    def __post_init__(self):
        if any(d == 0 for d in self.diffs):
            raise ValueError("difference entries must be nonzero")

    def text(self) -> str:
        return "d:" + ",".join(str(d) for d in self.diffs)

    @classmethod
    def parse(cls, text: str) -> "DifferenceRepresentation":
        body = text[2:] if text.startswith("d:") else text
        return cls(tuple(int(part) for part in body.split(",")))


def _distance_mask(marks: Sequence[int]) -> int:
    acc = 1  # distance 0
    for i, a in enumerate(marks):
        for b in marks[i + 1:]:
            acc |= 1 << (b - a)
    return acc


def is_complete(ruler: Ruler) -> bool:
    """True iff every distance 0..length is measured by some mark pair."""
    n = ruler.length
    return _distance_mask(ruler.marks) == (1 << (n + 1)) - 1


def missing_distances(ruler: Ruler) -> frozenset:
    """Distances in 0..length measured by no mark pair; empty iff complete."""
    n = ruler.length
    mask = _distance_mask(ruler.marks)
    return frozenset(d for d in range(n + 1) if not (mask >> d) & 1)


def ruler_from_differences(rep: DifferenceRepresentation) -> Ruler:
    """The unique ruler whose consecutive differences are `rep`.

    Partial sums are translated so the minimum mark is 0; a collision
    among the sums raises DuplicateMark.
    """
    sums = [0]
    for d in rep.diffs:
        sums.append(sums[-1] + d)
    low = min(sums)
    marks = sorted(s - low for s in sums)
    for a, b in zip(marks, marks[1:]):
        if a == b:
            raise DuplicateMark(f"difference representation revisits mark {a}")
    return Ruler(tuple(marks))


@dataclass(frozen=True)
class WichmannParams:
    """Parameters (r, s, i, j) of the extended Wichmann family.

    (i, j) = (0, 0) selects the plain ruler; an extension needs
    1 <= j <= r + 1.
    """

    r: int
    s: int
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.r < 0 or self.s < 0 or self.i < 0:
            raise InvalidParams(f"negative parameter in {self}")
        if self.j == 0:
            if self.i != 0:
                raise InvalidParams("j = 0 means no extension and requires i = 0")
        elif not 1 <= self.j <= self.r + 1:
            raise InvalidParams(f"j must be in 1..r+1, got j={self.j} with r={self.r}")

    @property
    def expected_length(self) -> int:
        base = 4 * self.r * (self.r + self.s + 2) + 3 * self.s + 3
        return base + self.i * (self.r + 1) + self.j

    @property
    def expected_marks(self) -> int:
        base = 4 * self.r + self.s + 3
        return base + self.i + (1 if self.j > 0 else 0)


def wichmann_differences(r: int, s: int, i: int = 0, j: int = 0) -> DifferenceRepresentation:
    """Difference blocks (1^r, r+1, (2r+1)^r, (4r+3)^s, (2r+2)^(r+1), 1^r)
    with the optional tail ((r+1)^i, j)."""
    WichmannParams(r, s, i, j)  # validates the ranges
    diffs = (
        [1] * r
        + [r + 1]
        + [2 * r + 1] * r
        + [4 * r + 3] * s
        + [2 * r + 2] * (r + 1)
        + [1] * r
        + [r + 1] * i
        + ([j] if j > 0 else [])
    )
    return DifferenceRepresentation(tuple(diffs))


def wichmann(r: int, s: int) -> Ruler:
    """Plain Wichmann ruler; length 4r(r+s+2)+3s+3 with 4r+s+3 marks."""
    return extended_wichmann(r, s, 0, 0)


def extended_wichmann(r: int, s: int, i: int, j: int) -> Ruler:
    """Extended Wichmann ruler; complete for every admissible parameter tuple.

    The closed-form length and mark count are asserted against the
    constructed ruler on every call.
    """
    params = WichmannParams(r, s, i, j)
    ruler = ruler_from_differences(wichmann_differences(r, s, i, j))
    if ruler.length != params.expected_length or len(ruler) != params.expected_marks:
        raise AssertionError(
            f"wichmann({r},{s},{i},{j}): got length {ruler.length} with {len(ruler)} marks, "
            f"expected {params.expected_length} / {params.expected_marks}"
        )
    return ruler


# Covering construction: for n >= _WICHMANN_COVER_MIN the family
# w(r, 2r+e), e in -2..4, tiles all lengths (the e = 4 ruler of one r
# coincides with the e = -2 ruler of r + 1), and one s-step adds length
# 4r + 3 < 4(r + 1), so at most 4 extension marks are ever needed.
_WICHMANN_COVER_MIN = 15  # length of w(1, 0), the smallest tile


def _plain_length(r: int, s: int) -> int:
    return 4 * r * (r + s + 2) + 3 * s + 3


def cover_params(n: int) -> WichmannParams:
    """Extended-Wichmann parameters of length exactly n (n >= 15)."""
    if n < _WICHMANN_COVER_MIN:
        raise InvalidParams(f"no Wichmann cover below length {_WICHMANN_COVER_MIN}")
    r = 1
    while True:
        s_low = max(2 * r - 2, 0)
        if _plain_length(r, s_low) > n:
            raise AssertionError(f"cover tiling skipped length {n}")
        for e in range(-2, 4):
            s = 2 * r + e
            if s < 0:
                continue
            low = _plain_length(r, s)
            high = _plain_length(r, s + 1)
            if low <= n < high:
                d = n - low
                if d == 0:
                    return WichmannParams(r, s, 0, 0)
                i = -(-d // (r + 1)) - 1
                j = d - i * (r + 1)
                return WichmannParams(r, s, i, j)
        r += 1


def _block_ruler(n: int) -> Ruler:
    """{0..q-1} plus multiples of q plus n, q = floor(sqrt(n)) + 1."""
    q = math.isqrt(n) + 1
    marks = set(range(q)) | set(range(0, n + 1, q)) | {n}
    return Ruler(tuple(sorted(marks)))


def cover_length(n: int) -> Ruler:
    """A complete ruler of length exactly n with at most sqrt(3n) + 4 marks.

    Lengths below 15 use a block ruler; from 15 on, the Wichmann tiling
    applies (the block ruler's ~2*sqrt(n) marks would overshoot the
    bound for n near 200). Completeness is verified before returning.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n < _WICHMANN_COVER_MIN:
        ruler = _block_ruler(n)
    else:
        p = cover_params(n)
        ruler = extended_wichmann(p.r, p.s, p.i, p.j)
    if ruler.length != n:
        raise AssertionError(f"cover_length({n}) built length {ruler.length}")
    if not is_complete(ruler):
        raise IncompleteRuler(f"cover_length({n}) produced an incomplete ruler")
    return ruler
