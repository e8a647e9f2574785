"""Hole-filling languages and cross-bifix-free codes.

Filling every hole of an unbordered partial word with alphabet letters
yields a set of full words in which no nonempty proper prefix of any
word is a suffix of any word (itself included): a cross-bifix-free
code of size |alphabet| ** holes. The 2D analogue uses overlap vectors
in place of prefix lengths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .twod import PartialWord2D, is_unbordered_2d
from .words import Alphabet, PartialWord, borders

DEFAULT_MATERIALIZE_CAP = 1 << 20


class AlphabetMismatch(ValueError):
    """The word uses letters outside the filling alphabet."""


class MixedLengths(ValueError):
    """Cross-bifix-freeness is checked on fixed-length codes."""


class BorderedSeed(ValueError):
    """Code generation requires an unbordered seed word."""


class TooLarge(ValueError):
    """The code is too large to materialize; raise the cap or sample."""


@dataclass(frozen=True)
class Code:
    """A fixed-shape set of full words: the fillings of one seed."""

    seed: PartialWord
    alphabet: Alphabet

    @property
    def size(self) -> int:
        return self.alphabet.size ** self.seed.hole_count

    def __iter__(self) -> Iterator[PartialWord]:
        return fillings_iter(self.seed, self.alphabet)

    def words(self, cap: int = DEFAULT_MATERIALIZE_CAP) -> list:
        if self.size > cap:
            raise TooLarge(f"{self.size} fillings exceed the cap of {cap}")
        return list(self)


def fillings_iter(word: PartialWord, alphabet: Alphabet) -> Iterator[PartialWord]:
    """All hole fillings, holes varied left-to-right, letters in order."""
    used = word.letters_used()
    if used and max(used) >= alphabet.size:
        raise AlphabetMismatch(
            f"word uses letter {max(used)} outside alphabet of size {alphabet.size}")
    holes = [i for i, s in enumerate(word.symbols) if s is None]
    base = list(word.symbols)
    for combo in itertools.product(alphabet.letters, repeat=len(holes)):
        for pos, letter in zip(holes, combo):
            base[pos] = letter
        yield PartialWord(tuple(base), alphabet)


def fillings(word: PartialWord, alphabet: Alphabet) -> Code:
    """The code of all |alphabet|**holes hole fillings of `word`."""
    used = word.letters_used()
    if used and max(used) >= alphabet.size:
        raise AlphabetMismatch(
            f"word uses letter {max(used)} outside alphabet of size {alphabet.size}")
    return Code(word, alphabet)


def is_cross_bifix_free(words: list) -> bool:
    """No nonempty proper prefix of any word equals a suffix of any word.

    Fixed-length codes only. Checked per overlap length with prefix and
    suffix sets, so the cost is O(|code| * n^2) hashing.
    """
    if not words:
        return True
    texts = [w.text() if isinstance(w, PartialWord) else str(w) for w in words]
    n = len(texts[0])
    if any(len(t) != n for t in texts):
        raise MixedLengths("all code words must have the same length")
    if any("." in t for t in texts):
        raise ValueError("code words must be hole-free")
    for ell in range(1, n):
        prefixes = {t[:ell] for t in texts}
        if any(t[n - ell:] in prefixes for t in texts):
            return False
    return True


def code_from_word(word: PartialWord, alphabet: Alphabet) -> Code:
    """Cross-bifix-free code from an unbordered seed (checked)."""
    if not borders(word).is_unbordered:
        raise BorderedSeed(f"seed {word.text()!r} is bordered")
    return fillings(word, alphabet)


def fillings_2d_iter(word: PartialWord2D, alphabet: Alphabet) -> Iterator[PartialWord2D]:
    """All hole fillings of a 2D seed, holes in row-major order."""
    used = {s for row in word.grid for s in row if s is not None}
    if used and max(used) >= alphabet.size:
        raise AlphabetMismatch(
            f"word uses letter {max(used)} outside alphabet of size {alphabet.size}")
    holes = [(x, y) for y, row in enumerate(word.grid)
             for x, s in enumerate(row) if s is None]
    base = [list(row) for row in word.grid]
    for combo in itertools.product(alphabet.letters, repeat=len(holes)):
        for (x, y), letter in zip(holes, combo):
            base[y][x] = letter
        yield PartialWord2D(tuple(tuple(row) for row in base), alphabet)


def _overlap_differs(u: PartialWord2D, v: PartialWord2D, dx: int, dy: int) -> bool:
    """Some cell of u differs from v translated by (dx, dy) on the overlap."""
    w, h = u.width, u.height
    for y in range(max(0, dy), min(h, h + dy)):
        for x in range(max(0, dx), min(w, w + dx)):
            if u.grid[y][x] != v.grid[y - dy][x - dx]:
                return True
    return False


def is_cross_bifix_free_2d(grids: list) -> bool:
    """No two code grids (same one included) agree on any proper overlap.

    The overlap of c1 with c2 translated by a nonzero vector plays the
    role of the prefix/suffix pair; tiny codes only.
    """
    if not grids:
        return True
    w, h = grids[0].width, grids[0].height
    if any(g.width != w or g.height != h for g in grids):
        raise MixedLengths("all code grids must have the same shape")
    vectors = [(dx, dy) for dx in range(0, w) for dy in range(-(h - 1), h)
               if (dx > 0 or dy > 0)]
    for i, u in enumerate(grids):
        for v in grids[i:]:
            for dx, dy in vectors:
                if not _overlap_differs(u, v, dx, dy):
                    return False
                if not _overlap_differs(v, u, dx, dy):
                    return False
    return True


def code_from_word_2d(word: PartialWord2D, alphabet: Alphabet,
                      cap: int = DEFAULT_MATERIALIZE_CAP) -> list:
    """All fillings of an unbordered 2D seed; verified cross-bifix-free.

    Materializes the full code, so the seed's filling count must stay
    under `cap`.
    """
    if not is_unbordered_2d(word):
        raise BorderedSeed("2D seed is bordered (or its domain is incomplete)")
    holes = word.hole_count()
    size = alphabet.size ** holes
    if size > cap:
        raise TooLarge(f"{size} fillings exceed the cap of {cap}")
    grids = list(fillings_2d_iter(word, alphabet))
    if not is_cross_bifix_free_2d(grids):
        raise AssertionError("fillings of an unbordered 2D seed must be cross-bifix-free")
    return grids
