import itertools

import pytest

from rulerwords.rulers import IncompleteRuler, Ruler
from rulerwords.words import (
    Alphabet,
    LengthMismatch,
    PartialWord,
    WordFormatError,
    borders,
    compatible,
    is_unbordered,
    word_from_ruler,
)

from oracles import naive_borders, naive_complete, naive_is_unbordered


def w(text):
    return PartialWord.parse(text)


def test_compatibility_examples():
    assert compatible(w("abc"), w("a.c"))
    assert compatible(w(".cc"), w("a.c"))
    assert not compatible(w(".cc"), w("abc"))


def test_compatibility_empty_words():
    assert compatible(PartialWord((), Alphabet(1)), PartialWord((), Alphabet(1)))


def test_compatibility_length_mismatch_is_an_error():
    with pytest.raises(LengthMismatch):
        compatible(w("ab"), w("abc"))


def test_compatibility_reflexive_symmetric_not_transitive():
    words = [PartialWord(s, Alphabet(2))
             for s in itertools.product((None, 0, 1), repeat=3)]
    for u in words:
        assert compatible(u, u)
    for u in words:
        for v in words:
            assert compatible(u, v) == compatible(v, u)
    # the classic failure of transitivity
    assert compatible(w("abc"), w("a.c")) and compatible(w("a.c"), w(".cc"))
    assert not compatible(w("abc"), w(".cc"))


def test_domain():
    assert w("a.c").domain() == {0, 2}
    assert w("..").domain() == frozenset()
    assert w("abc").domain() == {0, 1, 2}


def test_borders_examples():
    assert borders(w("ab.c")).is_unbordered
    assert borders(w("a.b")).border_lengths == {2}
    # hole at position 0 borders at length 1
    for text in (".a", ".ab", ".bba"):
        assert 1 in borders(w(text)).border_lengths


def test_borders_trivial_lengths():
    assert borders(w("a")).is_unbordered
    assert borders(PartialWord((None,), Alphabet(1))).is_unbordered
    assert borders(PartialWord((), Alphabet(1))).is_unbordered


def test_borders_match_naive_oracle_exhaustively():
    for n in range(0, 7):
        for symbols in itertools.product((None, 0, 1), repeat=n):
            word = PartialWord(symbols, Alphabet(2))
            assert borders(word).border_lengths == naive_borders(symbols), symbols


def test_unbordered_words_have_letter_endpoints():
    for n in range(2, 7):
        for symbols in itertools.product((None, 0, 1, 2), repeat=n):
            if naive_is_unbordered(symbols):
                assert symbols[0] is not None and symbols[-1] is not None


def test_unbordered_domain_is_complete_ruler():
    # forward direction of the correspondence, exhaustively on small words
    for n in range(2, 9):
        for k in (1, 2, 3):
            for symbols in itertools.product((None,) + tuple(range(k)), repeat=n):
                word = PartialWord(symbols, Alphabet(k))
                if is_unbordered(word):
                    assert naive_complete(sorted(word.domain()), n - 1), symbols


def test_word_from_ruler_small():
    word = word_from_ruler(Ruler((0, 1, 4, 6)))
    assert len(word) == 7
    assert word.domain() == {0, 1, 4, 6}
    assert len(word.letters_used()) == 4
    assert borders(word).is_unbordered


def test_word_from_ruler_singleton():
    word = word_from_ruler(Ruler((0,)))
    assert word.text() == "a"


def test_word_from_ruler_length_30():
    word = word_from_ruler(Ruler((0, 1, 3, 6, 13, 20, 24, 28, 29)))
    assert len(word) == 30
    assert word.hole_count == 21
    assert borders(word).is_unbordered


def test_word_from_ruler_rejects_incomplete():
    with pytest.raises(IncompleteRuler):
        word_from_ruler(Ruler((0, 1, 4)))


def test_word_from_ruler_unbordered_for_all_complete_rulers_up_to_12():
    for n in range(0, 13):
        universe = list(range(1, n))
        for m in range(1, n + 2):
            if n > 0 and m < 2:
                continue
            for interior in itertools.combinations(universe, max(0, m - 2)):
                marks = ((0,) + interior + (n,)) if n else (0,)
                if len(set(marks)) != len(marks):
                    continue
                if naive_complete(marks, n):
                    assert borders(word_from_ruler(Ruler(marks))).is_unbordered


def test_parse_and_render_round_trip():
    for text in ("ab..c", "a", ".", "abz", ""):
        assert PartialWord.parse(text).text() == text


def test_parse_rejects_bad_characters():
    for bad in ("ab#c", "A", "a b", "a*"):
        with pytest.raises(WordFormatError):
            PartialWord.parse(bad)


def test_alphabet_basics():
    assert list(Alphabet(3).letters) == [0, 1, 2]
    assert Alphabet.from_text("cab").size == 3
    with pytest.raises(ValueError):
        Alphabet(0)
    with pytest.raises(WordFormatError):
        Alphabet.from_text("ac")  # gap: 'b' missing


def test_letters_beyond_text_range_refuse_to_render():
    word = PartialWord(tuple(range(30)), Alphabet(30))
    with pytest.raises(WordFormatError):
        word.text()


def test_symbols_must_fit_alphabet():
    with pytest.raises(ValueError):
        PartialWord((0, 3), Alphabet(2))
