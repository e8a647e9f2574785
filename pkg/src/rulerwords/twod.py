"""Two-dimensional rulers and partial words on a W x H grid.

A grid ruler is complete when every vector (dx, dy) with |dx| <= W-1,
|dy| <= H-1 is a difference of two marks. A 2D partial word is
unbordered when its domain is complete and every nonzero such vector is
realized by a pair of marks holding different letters.

The main construction mirrors the 1D block ruler: two solid l x k
blocks in the bottom corners, an (l, k)-spaced lattice, plus the right
column, top row and far corner at lattice spacing. It is verified by
the completeness checker on every call; the checker, not the
transcription, is the source of truth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .rulers import IncompleteRuler, Ruler, is_complete
from .words import Alphabet, WordFormatError, _letter_index


class EmptyRuler(ValueError):
    """A 2D ruler needs at least one mark."""


class IncompleteConstruction(ValueError):
    """The transcribed construction failed the completeness check."""


class RepairFailed(ValueError):
    """No added mark (or hole pair) could fix a missing vector."""


@dataclass(frozen=True)
class Ruler2D:
    """Marks inside [0, width) x [0, height)."""

    width: int
    height: int
    marks: frozenset

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"degenerate grid {self.width}x{self.height}")
        for (x, y) in self.marks:
            if not (0 <= x < self.width and 0 <= y < self.height):
                raise ValueError(f"mark {(x, y)} outside {self.width}x{self.height} grid")

    def __len__(self) -> int:
        return len(self.marks)

    def text(self) -> str:
        rows = []
        for y in range(self.height):
            rows.append("".join("#" if (x, y) in self.marks else "."
                                for x in range(self.width)))
        return "\n".join(rows)

    @classmethod
    def parse(cls, text: str) -> "Ruler2D":
        lines = [ln for ln in text.splitlines() if ln]
        if not lines or len({len(ln) for ln in lines}) != 1:
            raise ValueError("2D ruler text needs equal-length nonempty lines")
        marks = {(x, y) for y, ln in enumerate(lines) for x, ch in enumerate(ln) if ch == "#"}
        return cls(len(lines[0]), len(lines), frozenset(marks))


@dataclass(frozen=True)
class PartialWord2D:
    """Grid of letters and holes; grid[y][x] is None or a letter index."""

    grid: tuple
    alphabet: Alphabet

    def __post_init__(self):
        if not self.grid or not self.grid[0]:
            raise ValueError("degenerate grid")
        if len({len(row) for row in self.grid}) != 1:
            raise ValueError("ragged grid")
        for row in self.grid:
            for s in row:
                if s is not None and not (0 <= s < self.alphabet.size):
                    raise ValueError(f"symbol {s} outside alphabet")

    @property
    def width(self) -> int:
        return len(self.grid[0])

    @property
    def height(self) -> int:
        return len(self.grid)

    def domain(self) -> frozenset:
        return frozenset((x, y) for y, row in enumerate(self.grid)
                         for x, s in enumerate(row) if s is not None)

    def hole_count(self) -> int:
        return self.width * self.height - len(self.domain())

    def text(self) -> str:
        return "\n".join(
            "".join("." if s is None else self.alphabet.letter_text(s) for s in row)
            for row in self.grid)

    @classmethod
    def parse(cls, text: str, alphabet: Optional[Alphabet] = None) -> "PartialWord2D":
        lines = [ln for ln in text.splitlines() if ln]
        if not lines or len({len(ln) for ln in lines}) != 1:
            raise WordFormatError("2D word text needs equal-length nonempty lines")
        grid = tuple(tuple(None if ch == "." else _letter_index(ch) for ch in ln)
                     for ln in lines)
        if alphabet is None:
            used = [s for row in grid for s in row if s is not None]
            alphabet = Alphabet(max(used) + 1 if used else 1)
        return cls(grid, alphabet)


def _vid(dx: int, dy: int, h: int) -> int:
    """Index of a vector normalized into the half-plane
    dx > 0 or (dx == 0 and dy >= 0)."""
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx * (2 * h - 1) + dy + h - 1


def _target_mask(w: int, h: int) -> int:
    mask = 0
    for dy in range(0, h):
        mask |= 1 << _vid(0, dy, h)
    for dx in range(1, w):
        for dy in range(-(h - 1), h):
            mask |= 1 << _vid(dx, dy, h)
    return mask


def _coverage_mask(marks: Iterable[Tuple[int, int]], h: int) -> int:
    pts = list(marks)
    acc = 1 << _vid(0, 0, h)
    for i, (ax, ay) in enumerate(pts):
        for bx, by in pts[i + 1:]:
            acc |= 1 << _vid(bx - ax, by - ay, h)
    return acc


def is_complete_2d(ruler: Ruler2D) -> bool:
    """True iff every vector within the grid span is a mark difference."""
    if not ruler.marks:
        raise EmptyRuler("no marks")
    target = _target_mask(ruler.width, ruler.height)
    return _coverage_mask(ruler.marks, ruler.height) & target == target


def missing_vectors_2d(ruler: Ruler2D) -> list:
    """Unmeasured half-plane vectors, in lexicographic (dx, dy) order."""
    if not ruler.marks:
        raise EmptyRuler("no marks")
    cov = _coverage_mask(ruler.marks, ruler.height)
    h = ruler.height
    out = []
    for dx in range(0, ruler.width):
        for dy in range(-(h - 1), h):
            if dx == 0 and dy < 0:
                continue
            if not (cov >> _vid(dx, dy, h)) & 1:
                out.append((dx, dy))
    return out


def default_block_side(extent: int) -> int:
    """floor(sqrt(extent) / 2**0.25), clamped to [1, extent - 1]."""
    side = int(math.sqrt(extent) / 2 ** 0.25)
    return max(1, min(side, extent - 1))


def _construction_parts(w: int, h: int, l: int, k: int) -> tuple:
    """(blocks, gridwork) cell sets of the 2D block construction."""
    nx, ny = w - 1, h - 1
    block1 = {(x, y) for x in range(l) for y in range(k)}
    block2 = {(nx - l + 1 + x, y) for x in range(l) for y in range(k)}
    lattice = {(x, y) for x in range(0, w, l) for y in range(0, h, k)}
    right_col = {(nx, y) for y in range(0, h, k)}
    top_row = {(x, ny) for x in range(0, w, l)}
    blocks = block1 | block2
    gridwork = (lattice | right_col | top_row | {(nx, ny)}) - blocks
    return blocks, gridwork


def construct_2d(w: int, h: int, l: Optional[int] = None, k: Optional[int] = None) -> Ruler2D:
    """Complete W x H grid ruler with ~2*sqrt(2)*sqrt(WH) marks.

    Block sides default to floor(sqrt(extent)/2**0.25). The result is
    checked; if the transcription ever failed on some size, the error
    lists the unmeasured vectors rather than returning a bad ruler.
    """
    if w < 2 or h < 2:
        raise ValueError(f"need a grid of at least 2x2, got {w}x{h}")
    l = default_block_side(w) if l is None else l
    k = default_block_side(h) if k is None else k
    if not (1 <= l <= w - 1 and 1 <= k <= h - 1):
        raise ValueError(f"block sides ({l}, {k}) outside 1..{w - 1} x 1..{h - 1}")
    blocks, gridwork = _construction_parts(w, h, l, k)
    ruler = Ruler2D(w, h, frozenset(blocks | gridwork))
    missing = missing_vectors_2d(ruler)
    if missing:
        raise IncompleteConstruction(
            f"{w}x{h} construction with blocks ({l}, {k}) misses {missing[:8]}"
            + ("..." if len(missing) > 8 else ""))
    return ruler


def cartesian_2d(ra: Ruler, rb: Ruler) -> Ruler2D:
    """Product of two complete 1D rulers: a complete (baseline) 2D ruler."""
    for r in (ra, rb):
        if not is_complete(r):
            raise IncompleteRuler(f"ruler {r.marks} is not complete")
    marks = frozenset((x, y) for x in ra.marks for y in rb.marks)
    ruler = Ruler2D(ra.length + 1, rb.length + 1, marks)
    if not is_complete_2d(ruler):
        raise AssertionError("product of complete rulers must be complete")
    return ruler


def _diff_coverage(letter_cells: dict, h: int) -> int:
    """Vectors realized by some pair of differently-lettered cells."""
    acc = 0
    letters = sorted(letter_cells)
    for i, a in enumerate(letters):
        for b in letters[i + 1:]:
            for ax, ay in letter_cells[a]:
                for bx, by in letter_cells[b]:
                    acc |= 1 << _vid(bx - ax, by - ay, h)
    return acc


def _letter_cells(word: PartialWord2D) -> dict:
    cells: dict = {}
    for y, row in enumerate(word.grid):
        for x, s in enumerate(row):
            if s is not None:
                cells.setdefault(s, []).append((x, y))
    return cells


def is_unbordered_2d(word: PartialWord2D) -> bool:
    """Domain complete and every nonzero vector measured by a pair of
    differing letters."""
    domain = word.domain()
    if not domain:
        return False
    w, h = word.width, word.height
    target = _target_mask(w, h)
    if _coverage_mask(domain, h) & target != target:
        return False
    nonzero = target & ~(1 << _vid(0, 0, h))
    return _diff_coverage(_letter_cells(word), h) & nonzero == nonzero


@dataclass(frozen=True)
class BinaryWord2D:
    """Result of the 2-letter conversion: the word plus repair statistics."""

    word: PartialWord2D
    base_marks: int
    repair_marks: int

    @property
    def letters(self) -> int:
        return self.base_marks + self.repair_marks

    @property
    def holes(self) -> int:
        return self.word.width * self.word.height - self.letters


def binary_word_2d(w: int, h: int, l: Optional[int] = None, k: Optional[int] = None) -> BinaryWord2D:
    """Unbordered 2-letter word on the block construction.

    Blocks get letter a, the lattice/edge marks letter b (block cells
    win on overlap so the blocks stay monochromatic). Same-letter areas
    leave some vectors unmeasured by differing pairs, so a repair loop
    adds marks: the lexicographically smallest missing vector is fixed
    by the first (row-major) hole position and letter that realize it,
    falling back to seeding a differing pair of holes when no lettered
    partner exists for the vector at all.
    """
    if w < 2 or h < 2:
        raise ValueError(f"need a grid of at least 2x2, got {w}x{h}")
    # block side 1 would make the lattice the whole grid: no holes left
    # to repair with, so the word defaults bump the side to 2 when room
    if l is None:
        l = min(max(2, default_block_side(w)), w - 1)
    if k is None:
        k = min(max(2, default_block_side(h)), h - 1)
    blocks, gridwork = _construction_parts(w, h, l, k)
    ruler = Ruler2D(w, h, frozenset(blocks | gridwork))
    missing_domain = missing_vectors_2d(ruler)
    if missing_domain:
        raise IncompleteConstruction(f"{w}x{h} base ruler misses {missing_domain[:8]}")

    grid = [[None] * w for _ in range(h)]
    for (x, y) in blocks:
        grid[y][x] = 0
    for (x, y) in gridwork:
        grid[y][x] = 1
    base_marks = len(blocks) + len(gridwork)

    target_nonzero = _target_mask(w, h) & ~(1 << _vid(0, 0, h))
    cells_by_letter = {0: sorted(blocks), 1: sorted(gridwork)}
    diff = _diff_coverage(cells_by_letter, h)
    all_marks = sorted(blocks | gridwork)
    repairs = 0
    while diff & target_nonzero != target_nonzero:
        missing = target_nonzero & ~diff
        v = missing & -missing
        bit = v.bit_length() - 1
        dx, dy = divmod(bit, 2 * h - 1)
        dy -= h - 1
        candidates = set()
        for (qx, qy) in all_marks:
            for px, py in ((qx + dx, qy + dy), (qx - dx, qy - dy)):
                if 0 <= px < w and 0 <= py < h and grid[py][px] is None:
                    candidates.add((px, py))
        placed = None
        for (px, py) in sorted(candidates, key=lambda p: (p[1], p[0])):
            for c in (0, 1):
                ok = False
                for (qx, qy) in ((px - dx, py - dy), (px + dx, py + dy)):
                    if 0 <= qx < w and 0 <= qy < h and grid[qy][qx] is not None \
                            and grid[qy][qx] != c:
                        ok = True
                        break
                if ok:
                    placed = [(px, py, c)]
                    break
            if placed:
                break
        if placed is None:
            # no lettered partner anywhere: seed both ends of the vector
            # (extreme-span vectors can land on two holes, e.g. full-width
            # horizontal ones when both corner blocks carry the same letter)
            for py in range(h):
                for px in range(w):
                    qx, qy = px + dx, py + dy
                    if qx < w and 0 <= qy < h and grid[py][px] is None \
                            and grid[qy][qx] is None:
                        placed = [(px, py, 0), (qx, qy, 1)]
                        break
                if placed:
                    break
        if placed is None:
            raise RepairFailed(f"{w}x{h}: cannot measure vector {(dx, dy)}")
        for px, py, c in placed:
            grid[py][px] = c
            for (qx, qy) in all_marks:
                if grid[qy][qx] != c:
                    diff |= 1 << _vid(px - qx, py - qy, h)
            all_marks.append((px, py))
            repairs += 1

    word = PartialWord2D(tuple(tuple(row) for row in grid), Alphabet(2))
    if not is_unbordered_2d(word):
        raise AssertionError(f"{w}x{h} binary word failed the final check")
    return BinaryWord2D(word, base_marks, repairs)
