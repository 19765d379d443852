"""Frozen expected values shared across the test modules.

Everything here was derived independently before the library existed, by
applying the defining formulas by hand at desk scale: the inversion-set
formula for diagrams, per-index inversion counting for codes, the greedy
dot placements, and the labeling procedures.  Tests treat these values as
ground truth; the library must reproduce them, never the other way round.
"""

from __future__ import annotations

# w = 152869347 and its diagram: the running example used throughout.
RUNNING_WORD = (1, 5, 2, 8, 6, 9, 3, 4, 7)
RUNNING_TEXT = "152869347"
RUNNING_CELLS = frozenset(
    {
        (2, 2), (2, 3), (2, 4),
        (4, 3), (4, 4), (4, 6), (4, 7),
        (5, 3), (5, 4),
        (6, 3), (6, 4), (6, 7),
    }
)
RUNNING_CODE = (0, 3, 0, 4, 2, 3)

# Greedy row dots of the running diagram, rows 1 through 9.  Because the
# diagram is a Rothe diagram these sit exactly at (i, w_i).
RUNNING_ROW_DOTS = (
    (1, 1), (2, 5), (3, 2), (4, 8), (5, 6),
    (6, 9), (7, 3), (8, 4), (9, 7),
)

# Rightmost bubble of each row 1..6, column 0 standing in for empty rows.
RUNNING_FINALS = frozenset({(1, 0), (2, 4), (3, 0), (4, 7), (5, 4), (6, 7)})

# Horizontal labels of row 4 and vertical labels of column 3.
RUNNING_ROW4_LABELS = {(4, 3): 4, (4, 4): 5, (4, 6): 6, (4, 7): 7}
RUNNING_COL3_LABELS = {(2, 3): 3, (4, 3): 4, (5, 3): 5, (6, 3): 6}

# Every empty-cell gap of the running diagram as (anchor, gap_len, finals):
# row 2 gap over column 1; row 4 gaps over columns 1-2 and column 5;
# row 5 gap over columns 1-2; row 6 gaps over columns 1-2 and columns 5-6.
RUNNING_GAPS = frozenset(
    {
        ((2, 2), 1, 1),
        ((4, 3), 2, 2),
        ((4, 6), 1, 1),
        ((5, 3), 2, 2),
        ((6, 3), 2, 2),
        ((6, 7), 2, 2),
    }
)

# The two small non-Rothe example diagrams.
D1 = frozenset({(1, 1), (2, 2)})
D2 = frozenset({(1, 2), (2, 1)})

D1_ROW_DOTS = ((1, 2), (2, 3), (3, 1))
D1_COL_DOTS = ((2, 1), (3, 2), (1, 3))
# D2 is symmetric under transposition; its row and column dots coincide.
D2_DOTS = ((1, 3), (2, 2), (3, 1))

D1_H_LABELS = {(1, 1): 1, (2, 2): 2}
D2_H_LABELS = {(1, 2): 1, (2, 1): 2}
D2_V_LABELS = {(2, 1): 1, (1, 2): 2}

# The free-column worked example and its unique placement.
FREE_COLUMNS = ({1, 2}, {2, 4, 5}, {2}, {5})
FREE_POSITIONS = (1, 3, 4, 6)
FREE_PLACED_CELLS = frozenset(
    {(1, 1), (2, 1), (2, 3), (2, 4), (4, 3), (5, 3), (5, 6)}
)
# The placed diagram is the Rothe diagram of 2514736; the shorter word
# 251463 produces only six cells and is not a match.
FREE_PLACED_WORD_TEXT = "2514736"
FREE_REJECTED_WORD_TEXT = "251463"

# Small diagram goldens.
CELLS_231 = frozenset({(1, 1), (2, 1)})
CODE_231 = (1, 1)
CELLS_21 = frozenset({(1, 1)})
