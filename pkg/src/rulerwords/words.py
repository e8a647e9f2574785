"""One-dimensional partial words: compatibility, borders, domains.

A partial word is a fixed-length sequence whose positions hold either a
letter or a hole ("do not know" symbol). Two equal-length words are
compatible when they agree at every position where both hold a letter.
A border is a proper nonempty prefix compatible with the suffix of the
same length; a word with no border is unbordered.

Letters are small integers internally. Text I/O maps letter i to
chr(ord('a') + i) and the hole to '.'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

HOLE: Optional[int] = None

_MAX_TEXT_LETTERS = 26


class LengthMismatch(ValueError):
    """Compatibility is only defined between words of equal length."""


class WordFormatError(ValueError):
    """Rejected text for a partial word."""


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of `size` letters (0..size-1) plus the hole symbol."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"alphabet needs at least one letter, got size {self.size}")

    @property
    def letters(self) -> range:
        return range(self.size)

    def letter_text(self, letter: int) -> str:
        if not 0 <= letter < self.size:
            raise ValueError(f"letter {letter} outside alphabet of size {self.size}")
        if letter >= _MAX_TEXT_LETTERS:
            raise WordFormatError(f"letter {letter} has no text form (max {_MAX_TEXT_LETTERS})")
        return chr(ord("a") + letter)

    @classmethod
    def from_text(cls, text: str) -> "Alphabet":
        """Alphabet holding exactly the letters named in `text`, e.g. 'abc'."""
        if not text:
            raise WordFormatError("empty alphabet")
        indices = sorted({_letter_index(ch) for ch in text})
        if indices != list(range(len(indices))):
            raise WordFormatError(f"alphabet letters must be an initial run a,b,c,...: {text!r}")
        return cls(len(indices))


def _letter_index(ch: str) -> int:
    if len(ch) == 1 and "a" <= ch <= "z":
        return ord(ch) - ord("a")
    raise WordFormatError(f"invalid letter {ch!r} (expected a-z or '.')")


@dataclass(frozen=True)
class PartialWord:
    """Immutable partial word: `symbols` holds letters (ints) and holes (None)."""

    symbols: tuple
    alphabet: Alphabet

    def __post_init__(self):
        for s in self.symbols:
            if s is not None and not (0 <= s < self.alphabet.size):
                raise ValueError(f"symbol {s} outside alphabet of size {self.alphabet.size}")

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def hole_count(self) -> int:
        return sum(1 for s in self.symbols if s is None)

    def domain(self) -> frozenset:
        """Positions holding letters."""
        return frozenset(i for i, s in enumerate(self.symbols) if s is not None)

    def letters_used(self) -> frozenset:
        return frozenset(s for s in self.symbols if s is not None)

    def text(self) -> str:
        return "".join("." if s is None else self.alphabet.letter_text(s) for s in self.symbols)

    @classmethod
    def parse(cls, text: str, alphabet: Optional[Alphabet] = None) -> "PartialWord":
        """Parse 'ab..c' style text; '.' is the hole, letters are a-z.

        Without an explicit alphabet, the alphabet size is the largest
        letter index present plus one (at least 1).
        """
        symbols = tuple(None if ch == "." else _letter_index(ch) for ch in text)
        if alphabet is None:
            used = [s for s in symbols if s is not None]
            alphabet = Alphabet(max(used) + 1 if used else 1)
        return cls(symbols, alphabet)

    @classmethod
    def from_symbols(cls, symbols: Iterable[Optional[int]], alphabet_size: Optional[int] = None) -> "PartialWord":
        symbols = tuple(symbols)
        if alphabet_size is None:
            used = [s for s in symbols if s is not None]
            alphabet_size = max(used) + 1 if used else 1
        return cls(symbols, Alphabet(alphabet_size))


@dataclass(frozen=True)
class BorderReport:
    """Border lengths of a word; empty set means unbordered."""

    border_lengths: frozenset

    @property
    def is_unbordered(self) -> bool:
        return not self.border_lengths


def compatible(u: PartialWord, v: PartialWord) -> bool:
    """True iff u and v agree at every position where both hold a letter.

    Only defined for equal lengths; unequal lengths raise LengthMismatch
    rather than returning False.
    """
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} vs {len(v)}")
    for a, b in zip(u.symbols, v.symbols):
        if a is not None and b is not None and a != b:
            return False
    return True


def _letter_masks(symbols: tuple) -> dict:
    """Bitmask of positions per letter (position i -> bit i)."""
    masks: dict = {}
    for i, s in enumerate(symbols):
        if s is not None:
            masks[s] = masks.get(s, 0) | (1 << i)
    return masks


def borders(w: PartialWord) -> BorderReport:
    """All border lengths of w (subset of 1..len(w)-1).

    A border of length l exists iff no position pair (i, i + n - l) with
    i < l holds two differing letters. Checked per shift with per-letter
    position bitmasks, so a length-n word costs O(k * n^2 / wordsize).
    """
    n = len(w)
    if n <= 1:
        return BorderReport(frozenset())
    masks = _letter_masks(w.symbols)
    all_mask = 0
    for m in masks.values():
        all_mask |= m
    found = []
    for ell in range(1, n):
        # bit i of (others >> shift) implies i < ell, so no window mask needed
        shift = n - ell
        conflict = False
        for mask in masks.values():
            if mask & ((all_mask & ~mask) >> shift):
                conflict = True
                break
        if not conflict:
            found.append(ell)
    return BorderReport(frozenset(found))


def is_unbordered(w: PartialWord) -> bool:
    return borders(w).is_unbordered


def word_from_ruler(ruler) -> PartialWord:
    """Unbordered word of length n+1 whose domain is the given complete ruler.

    Mark positions get pairwise distinct letters (the i-th mark gets
    letter i); every other position is a hole. Raises IncompleteRuler on
    a ruler that does not measure all of 0..n.
    """
    from .rulers import IncompleteRuler, is_complete

    if not is_complete(ruler):
        raise IncompleteRuler(f"ruler {ruler.marks} is not complete")
    n = ruler.length
    symbols: list = [None] * (n + 1)
    for i, mark in enumerate(ruler.marks):
        symbols[mark] = i
    return PartialWord(tuple(symbols), Alphabet(len(ruler.marks)))
