"""Unbordered partial words, complete sparse rulers, and everything the
correspondence between them buys: explicit constructions, exact
searches, bounds, 2D analogues, and cross-bifix-free codes.

The domain of an unbordered partial word is a complete sparse ruler one
shorter than the word, and every complete ruler arises this way; so
maximizing holes in unbordered words and minimizing marks on complete
rulers are the same problem.
"""

__version__ = "0.1.0"

from .words import (
    Alphabet,
    BorderReport,
    PartialWord,
    borders,
    compatible,
    is_unbordered,
    word_from_ruler,
)
from .rulers import (
    DifferenceRepresentation,
    Ruler,
    WichmannParams,
    cover_length,
    cover_params,
    extended_wichmann,
    is_complete,
    missing_distances,
    ruler_from_differences,
    wichmann,
)
from .constructions import (
    WitnessWord,
    counterexample_words,
    hb4_witness,
    sqrt_word,
    wichmann_word,
    wichmann_word_ext,
)
from .search import (
    Budget,
    SearchRecord,
    hb3_monotonicity_experiment,
    letter_assignment,
    max_holes,
    max_holes_inf,
    min_marks,
    min_marks_2d,
)
from .twod import (
    BinaryWord2D,
    PartialWord2D,
    Ruler2D,
    binary_word_2d,
    cartesian_2d,
    construct_2d,
    is_complete_2d,
    is_unbordered_2d,
)
from .crossbifix import (
    Code,
    code_from_word,
    code_from_word_2d,
    fillings,
    is_cross_bifix_free,
    is_cross_bifix_free_2d,
)
from . import bounds

__all__ = [
    "Alphabet", "BorderReport", "PartialWord", "borders", "compatible",
    "is_unbordered", "word_from_ruler",
    "DifferenceRepresentation", "Ruler", "WichmannParams", "cover_length",
    "cover_params", "extended_wichmann", "is_complete", "missing_distances",
    "ruler_from_differences", "wichmann",
    "WitnessWord", "counterexample_words", "hb4_witness", "sqrt_word",
    "wichmann_word", "wichmann_word_ext",
    "Budget", "SearchRecord", "hb3_monotonicity_experiment",
    "letter_assignment", "max_holes", "max_holes_inf", "min_marks",
    "min_marks_2d",
    "BinaryWord2D", "PartialWord2D", "Ruler2D", "binary_word_2d",
    "cartesian_2d", "construct_2d", "is_complete_2d", "is_unbordered_2d",
    "Code", "code_from_word", "code_from_word_2d", "fillings",
    "is_cross_bifix_free", "is_cross_bifix_free_2d",
    "bounds",
]
