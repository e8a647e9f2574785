"""Explicit unbordered partial words with many holes.

The Wichmann words realize the Wichmann rulers as 4-letter unbordered
words (the word's domain is exactly the ruler); the square-root word is
a simpler 3-letter fallback for short lengths; the two counterexample
words witness that adding 3 to the length can gain 4 holes.

Every constructed word is validated (hole count and unborderedness) at
build time, so a transcription error in a block pattern fails loudly
instead of producing a silently bad witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rulers import WichmannParams, cover_params, extended_wichmann
from .words import Alphabet, PartialWord, borders

_A, _B, _C, _D = 0, 1, 2, 3
_H = None


class TooShort(ValueError):
    """Construction undefined below its minimum length."""


@dataclass(frozen=True)
class WitnessWord:
    """A validated unbordered word together with its claimed hole count."""

    word: PartialWord
    claimed_holes: int
    source: str

    def __post_init__(self):
        actual = self.word.hole_count
        if actual != self.claimed_holes:
            raise AssertionError(
                f"{self.source} witness: built {actual} holes, claimed {self.claimed_holes}"
            )
        if not borders(self.word).is_unbordered:
            raise AssertionError(f"{self.source} witness of length {len(self.word)} is bordered")


def _word(symbols: list, alphabet_size: int) -> PartialWord:
    return PartialWord(tuple(symbols), Alphabet(alphabet_size))


def _wichmann_symbols(r: int, s: int, i: int, j: int) -> list:
    sym = (
        [_A]
        + [_B] * r
        + [_H] * r
        + ([_A] + [_H] * (2 * r)) * r
        + [_B]
        + ([_H] * (4 * r + 2) + [_C]) * s
        + ([_H] * (2 * r + 1) + [_D]) * (r + 1)
        + [_B] * r
    )
    if j > 0:
        sym += ([_H] * r + [_C]) * i + [_H] * (j - 1) + [_C]
    return sym


def wichmann_word(r: int, s: int) -> WitnessWord:
    """4-letter unbordered word whose domain is the plain Wichmann ruler."""
    return wichmann_word_ext(r, s, 0, 0)


def wichmann_word_ext(r: int, s: int, i: int, j: int) -> WitnessWord:
    """4-letter unbordered word whose domain is the extended Wichmann ruler.

    Parameter domain matches the ruler's: (i, j) = (0, 0) for the plain
    word, otherwise 1 <= j <= r + 1.
    """
    params = WichmannParams(r, s, i, j)
    ruler = extended_wichmann(r, s, i, j)
    word = _word(_wichmann_symbols(r, s, i, j), 4)
    if len(word) != ruler.length + 1:
        raise AssertionError(f"wichmann word ({r},{s},{i},{j}): length {len(word)} vs ruler {ruler.length}")
    if word.domain() != frozenset(ruler.marks):
        raise AssertionError(f"wichmann word ({r},{s},{i},{j}): domain differs from ruler")
    holes = len(word) - params.expected_marks
    return WitnessWord(word, holes, "wichmann")


def sqrt_word(n: int) -> WitnessWord:
    """3-letter unbordered word of length n: a^(q-1) b, then c's spaced q
    apart, with the last gap shortened to land exactly on length n.

    q = floor(sqrt(n)); the gap split is the unique (t1, t2) with
    t2 <= q - 1, namely t1 + 1 = (n-1) // q and t2 = (n-1) % q.
    """
    if n < 4:
        raise TooShort(f"square-root word needs n >= 4, got {n}")
    q = math.isqrt(n)
    t1 = (n - 1) // q - 1
    t2 = (n - 1) % q
    sym = [_A] * (q - 1) + [_B] + ([_H] * (q - 1) + [_C]) * t1 + [_H] * t2 + [_C]
    word = _word(sym, 3)
    if len(word) != n:
        raise AssertionError(f"sqrt word: built length {len(word)} for n={n}")
    return WitnessWord(word, n - (q + t1 + 1), "sqrt")


def hb4_witness(n: int) -> WitnessWord:
    """Unbordered word of length n over at most 4 letters with at least
    n - sqrt(3n-3) - 4 holes.

    From n = 214 the Wichmann word on the covering parameters for length
    n - 1 achieves this; below, the square-root word suffices because
    2*sqrt(n) <= sqrt(3n-3) + 4 up to that point.
    """
    if n < 4:
        raise TooShort(f"witness needs n >= 4, got {n}")
    if n >= 214:
        p = cover_params(n - 1)
        return wichmann_word_ext(p.r, p.s, p.i, p.j)
    return sqrt_word(n)


def counterexample_words() -> tuple:
    """The two literal witnesses of lengths 136 and 139 (115 and 119 holes).

    Together they show a length gain of 3 with a hole gain of 4, so the
    hole maximum over 4 letters is not 1-Lipschitz in the length.
    """
    first = (
        [_A] * 4
        + [_B] * 3
        + [_H] * 58
        + [_A]
        + ([_H] * 2 + [_C]) * 3
        + ([_H] * 6 + [_D]) * 7
        + ([_H] * 3 + [_B]) * 3
    )
    second = (
        [_A]
        + [_B] * 3
        + [_H] * 3
        + ([_A] + [_H] * 6) * 3
        + [_B]
        + ([_H] * 14 + [_C]) * 5
        + ([_H] * 7 + [_D]) * 4
        + [_B] * 3
    )
    w136 = WitnessWord(_word(first, 4), 115, "counterexample")
    w139 = WitnessWord(_word(second, 4), 119, "counterexample")
    if (len(w136.word), len(w139.word)) != (136, 139):
        raise AssertionError("counterexample word lengths drifted")
    return w136, w139
