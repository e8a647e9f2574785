import pytest

from rulerwords.rulers import IncompleteRuler, Ruler, is_complete, wichmann
from rulerwords.search import (
    Budget,
    Infeasible,
    hb3_monotonicity_experiment,
    letter_assignment,
    max_holes,
    max_holes_inf,
    min_marks,
    min_marks_2d,
)
from rulerwords.twod import is_complete_2d
from rulerwords.words import borders

from oracles import brute_max_holes, brute_min_marks, brute_min_marks_2d

# verified against brute_min_marks up to 18 and frozen
M1_KNOWN = [1, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7, 8, 8,
            8, 8, 8, 8, 9]


def test_min_marks_known_values():
    for n, expected in enumerate(M1_KNOWN):
        record = min_marks(n)
        assert record.optimal
        assert record.value == expected, n
        assert is_complete(record.witness)
        assert len(record.witness) == expected


def test_min_marks_against_brute_oracle():
    for n in range(0, 13):
        assert min_marks(n).value == brute_min_marks(n), n


def test_min_marks_example_witness():
    record = min_marks(6)
    assert record.value == 4
    assert record.witness.marks == (0, 1, 4, 6)


def test_min_marks_22_is_wichmann_optimal():
    # 7 marks give only 21 pairs, short of 22 distances
    record = min_marks(22)
    assert record.value == 8 == len(wichmann(1, 1))


def test_min_marks_witness_is_lex_smallest():
    for n in (6, 9, 13):
        record = min_marks(n)
        again = min_marks(n)
        assert record.witness.marks == again.witness.marks
        assert record.witness.marks <= record.witness.reflected().marks


def test_min_marks_budget_flagging():
    record = min_marks(30, Budget(max_nodes=50))
    assert not record.optimal
    assert is_complete(record.witness)  # still a valid upper-bound witness
    assert record.value >= 10


def test_min_marks_wall_clock_budget():
    record = min_marks(40, Budget(max_seconds=0.02))
    assert not record.optimal
    assert is_complete(record.witness)


def test_min_marks_within_construction_count():
    from rulerwords.rulers import cover_length

    for n in range(1, 31):
        assert min_marks(n).value <= len(cover_length(n)), n


def test_letter_assignment_examples():
    assert letter_assignment(Ruler((0, 1, 4, 6)), 4) is not None
    assert letter_assignment(Ruler((0, 1)), 1) is None
    coloring = letter_assignment(wichmann(2, 2), 4)
    assert coloring is not None
    assert max(coloring) <= 3


def test_letter_assignment_requires_completeness():
    with pytest.raises(IncompleteRuler):
        letter_assignment(Ruler((0, 2)), 2)


def test_letter_assignment_respects_distances():
    ruler = Ruler((0, 1, 4, 6))
    coloring = letter_assignment(ruler, 4)
    marks = ruler.marks
    for d in range(1, 7):
        pairs = [(i, j) for i in range(4) for j in range(4)
                 if marks[j] - marks[i] == d]
        assert any(coloring[i] != coloring[j] for i, j in pairs), d


def test_max_holes_small_values():
    assert max_holes(2, 2).value == 0
    assert max_holes(7, 7).value == 3
    assert max_holes(1, 5).value == 0


def test_max_holes_witness_validates():
    for n, k in [(7, 4), (10, 3), (12, 2)]:
        record = max_holes(n, k)
        word = record.witness
        assert borders(word).is_unbordered
        assert word.hole_count == record.value
        assert len(word.letters_used()) <= k


def test_max_holes_matches_brute_oracle():
    for n in range(2, 11):
        for k in (2, 3):
            assert max_holes(n, k).value == brute_max_holes(n, k), (n, k)


def test_max_holes_equals_unrestricted_once_alphabet_is_large():
    for n in range(2, 12):
        m1 = min_marks(n - 1).value
        unrestricted = n - m1
        for k in range(m1, n + 1):
            assert max_holes(n, k).value == unrestricted, (n, k)


def test_max_holes_one_letter_infeasible():
    with pytest.raises(Infeasible):
        max_holes(2, 1)


def test_max_holes_inf():
    assert max_holes_inf(1).value == 0
    assert max_holes_inf(7).value == 3
    record = max_holes_inf(30)
    assert record.value == 21
    assert borders(record.witness).is_unbordered
    assert record.witness.hole_count == 21


def test_hole_word_divergence_at_length_one():
    # the all-hole single-symbol word is vacuously unbordered, which the
    # mark-based formulation cannot see; the search pins length 1 to 0
    assert brute_max_holes(1, 3) == 1
    assert max_holes(1, 3).value == 0


def test_monotonicity_experiment():
    report = hb3_monotonicity_experiment(12)
    assert len(report.rows) == 12
    assert not report.violations
    assert all(row.value is not None for row in report.rows)
    tiny = hb3_monotonicity_experiment(1)
    assert not tiny.violations


def test_monotonicity_experiment_budget_rows():
    report = hb3_monotonicity_experiment(10, budget_nodes_per_row=5)
    assert any(row.value is None for row in report.rows)


def test_min_marks_2d_small():
    assert min_marks_2d(2, 2).value == 4
    assert min_marks_2d(1, 1).value == 1
    record = min_marks_2d(3, 2)
    assert record.value == brute_min_marks_2d(3, 2)
    assert is_complete_2d(record.witness)


def test_min_marks_2d_matches_brute():
    for w, h in [(1, 2), (2, 2), (2, 3), (3, 3), (4, 2)]:
        assert min_marks_2d(w, h).value == brute_min_marks_2d(w, h), (w, h)


def test_min_marks_2d_guard():
    with pytest.raises(ValueError):
        min_marks_2d(10, 10)


def test_workers_do_not_change_results():
    for n in (9, 14, 20):
        solo = min_marks(n, workers=1)
        multi = min_marks(n, workers=3)
        assert solo.to_json_dict() == multi.to_json_dict(), n


def test_record_json_shape():
    record = min_marks(6)
    payload = record.to_json_dict()
    assert payload == {
        "problem": "m1", "params": [6], "value": 4,
        "witness": "0,1,4,6", "witness_kind": "ruler", "optimal": True,
    }
