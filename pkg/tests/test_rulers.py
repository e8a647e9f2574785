import itertools
import math

import pytest

from rulerwords.rulers import (
    DifferenceRepresentation,
    DuplicateMark,
    InvalidParams,
    Ruler,
    WichmannParams,
    cover_length,
    cover_params,
    extended_wichmann,
    is_complete,
    missing_distances,
    ruler_from_differences,
    wichmann,
    wichmann_differences,
)

from oracles import naive_complete


def test_is_complete_examples():
    assert is_complete(Ruler((0, 1, 4, 6)))
    assert not is_complete(Ruler((0, 1, 4)))
    assert is_complete(Ruler((0,)))


def test_missing_distances_examples():
    assert missing_distances(Ruler((0, 1, 4))) == {2}
    assert missing_distances(Ruler((0, 1, 4, 6))) == frozenset()
    for n in (2, 5, 9):
        assert missing_distances(Ruler((0, n))) == set(range(1, n))


def test_is_complete_matches_naive_oracle():
    for n in range(0, 11):
        for interior in itertools.chain.from_iterable(
                itertools.combinations(range(1, n), m) for m in range(0, n)):
            marks = (0,) + interior + ((n,) if n else ())
            ruler = Ruler(tuple(sorted(set(marks))))
            assert is_complete(ruler) == naive_complete(ruler.marks, ruler.length)


def test_completeness_invariant_under_reflection():
    for marks in [(0, 1, 4, 6), (0, 2, 5, 6), (0, 1, 3, 7), (0, 3, 5, 8)]:
        ruler = Ruler(marks)
        assert is_complete(ruler) == is_complete(ruler.reflected())


def test_ruler_validation():
    with pytest.raises(ValueError):
        Ruler(())
    with pytest.raises(ValueError):
        Ruler((1, 2))
    with pytest.raises(ValueError):
        Ruler((0, 2, 2))


def test_difference_representation_round_trips():
    rep = DifferenceRepresentation((1, 2, 3, 7, 4, 4, 1))
    assert ruler_from_differences(rep).marks == (0, 1, 3, 6, 13, 17, 21, 22)
    negatives = DifferenceRepresentation((-1, 3, 3, 7, 4, 4, 1))
    assert ruler_from_differences(negatives).marks == (0, 1, 3, 6, 13, 17, 21, 22)
    assert ruler_from_differences(DifferenceRepresentation((5,))).marks == (0, 5)


def test_difference_representation_errors():
    with pytest.raises(ValueError):
        DifferenceRepresentation((1, 0, 2))
    with pytest.raises(DuplicateMark):
        ruler_from_differences(DifferenceRepresentation((2, -2)))


def test_difference_text_format():
    rep = DifferenceRepresentation.parse("d:1,2,-3")
    assert rep.diffs == (1, 2, -3)
    assert rep.text() == "d:1,2,-3"


def test_wichmann_known_instance():
    assert wichmann(1, 1).marks == (0, 1, 3, 6, 13, 17, 21, 22)


def test_wichmann_degenerate():
    ruler = wichmann(0, 0)
    assert ruler.length == 3 and len(ruler) == 3
    assert is_complete(ruler)


def test_wichmann_138():
    ruler = wichmann(3, 5)
    assert ruler.length == 138
    assert len(ruler) == 20
    assert is_complete(ruler)


def test_symmetric_representation_agrees_on_sweep():
    for r in range(0, 5):
        for s in range(0, 7):
            base = wichmann(r, s)
            diffs = ([-1] * r + [2 * r + 1] * (r + 1) + [4 * r + 3] * s
                     + [2 * r + 2] * (r + 1) + [1] * r)
            alt = ruler_from_differences(DifferenceRepresentation(tuple(diffs)))
            assert alt.marks == base.marks, (r, s)


def test_extended_wichmann_sweep_small():
    for r in range(0, 4):
        for s in range(0, 7):
            for i in range(0, 3):
                for j in range(1, r + 2):
                    params = WichmannParams(r, s, i, j)
                    ruler = extended_wichmann(r, s, i, j)
                    assert ruler.length == params.expected_length
                    assert len(ruler) == params.expected_marks
                    assert is_complete(ruler), (r, s, i, j)


def test_extended_wichmann_plain_case():
    assert extended_wichmann(2, 3, 0, 0).marks == wichmann(2, 3).marks
    assert extended_wichmann(4, 6, 0, 0).length == 213


def test_extended_wichmann_example():
    ruler = extended_wichmann(1, 1, 1, 2)
    assert ruler.length == 26
    assert is_complete(ruler)


def test_wichmann_parameter_validation():
    with pytest.raises(InvalidParams):
        extended_wichmann(1, 1, 1, 3)  # j > r + 1
    with pytest.raises(InvalidParams):
        extended_wichmann(1, 1, 2, 0)  # trailing zero difference
    with pytest.raises(InvalidParams):
        WichmannParams(-1, 0, 0, 0)


def test_wichmann_differences_block_structure():
    assert wichmann_differences(1, 1).diffs == (1, 2, 3, 7, 4, 4, 1)
    assert wichmann_differences(0, 0).diffs == (1, 2)


def test_cover_params_tiling():
    assert cover_params(213) == WichmannParams(4, 6, 0, 0)
    for n in range(15, 400):
        p = cover_params(n)
        assert p.expected_length == n
    with pytest.raises(InvalidParams):
        cover_params(14)


def test_cover_length_examples():
    assert cover_length(1).marks == (0, 1)
    ruler213 = cover_length(213)
    assert ruler213.marks == wichmann(4, 6).marks
    assert len(ruler213) == 25
    ruler500 = cover_length(500)
    assert ruler500.length == 500
    assert len(ruler500) <= math.isqrt(1500) + 4


def test_cover_length_mark_bound():
    for n in range(1, 5001):
        ruler = cover_length(n)
        assert ruler.length == n
        assert len(ruler) <= math.isqrt(3 * n) + 4, n


def test_cover_length_rejects_nonpositive():
    with pytest.raises(ValueError):
        cover_length(0)


def test_ruler_text_round_trip():
    ruler = Ruler((0, 1, 4, 6))
    assert ruler.text() == "0,1,4,6"
    assert Ruler.parse("0,1,4,6").marks == ruler.marks
