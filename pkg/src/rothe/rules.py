"""Characterization rules for diagrams, each an independent checker.

Every checker returns a :class:`RuleReport` whose witnesses make the
violation concrete: a mismatched dot, a (bubble, dot) pair, an offending
cell pair, a cell with conflicting labels, or a gap box with the wrong
number of final bubbles.  A report holds exactly when it has no witnesses.

Dots are defined on the infinite grid.  All dot computations therefore run
to a horizon of twice the diagram's largest coordinate plus two; beyond the
occupied rows the greedy placement provably settles into "smallest unused
column" behavior, which leaves both dot sets on the diagonal past the
horizon.  Comparing the two finite windows is thus equivalent to comparing
the infinite sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import pairwise

from .core import Cell, Diagram, _dot_reading, rothe_diagram

__all__ = [
    "DotSet",
    "GapBox",
    "Labeling",
    "NumberingRequiredError",
    "RuleReport",
    "StabilizationError",
    "check_dot_rule",
    "check_empty_cell_gap",
    "check_horizontal_popping",
    "check_numbering",
    "check_rothe",
    "check_southwest",
    "check_vertical_popping",
    "classify",
    "column_dots",
    "condition_verdicts",
    "final_bubbles",
    "find_step_outs",
    "gap_boxes",
    "horizontal_numbering",
    "row_dots",
    "vertical_numbering",
]

Labeling = dict[Cell, int]


class StabilizationError(RuntimeError):
    """The dot computation failed to settle before its horizon (internal bug)."""


class NumberingRequiredError(ValueError):
    """A step-out scan was requested for input whose numbering condition fails."""


@dataclass(frozen=True)
class DotSet:
    """Greedy dot placement of a diagram up to a finite horizon.

    ``dots[k]`` is the dot whose row (for row dots) or column (for column
    dots) is ``k + 1``; the other coordinate is pairwise distinct.
    """

    dots: tuple[Cell, ...]
    horizon: int

    def __post_init__(self) -> None:
        dots = tuple(self.dots)
        object.__setattr__(self, "dots", dots)
        if self.horizon < 1 or len(dots) != self.horizon:
            raise ValueError(
                f"expected {self.horizon} dots, got {len(dots)}"
            )
        rows = [r for r, _ in dots]
        cols = [c for _, c in dots]
        enumerated = list(range(1, self.horizon + 1))
        if rows == enumerated:
            other = cols
        elif cols == enumerated:
            other = rows
        else:
            raise ValueError("dots must enumerate rows 1..horizon or columns 1..horizon")
        if len(set(other)) != len(other):
            raise ValueError(f"dot coordinates collide: {dots}")

    def cells(self) -> frozenset[Cell]:
        return frozenset(self.dots)


@dataclass(frozen=True)
class GapBox:
    """The rectangle below an empty-cell gap, with its final-bubble count.

    ``anchor`` is the bubble closing the gap; the box spans columns
    ``col_lo..col_hi`` (``col_lo`` may be 0, the basement column) over the
    rows strictly below the anchor.
    """

    anchor: Cell
    col_lo: int
    col_hi: int
    row_max: int
    gap_len: int
    finals_found: int

    def __post_init__(self) -> None:
        if self.gap_len < 1:
            raise ValueError("a gap spans at least one empty cell")
        if self.col_hi - self.col_lo + 1 != self.gap_len + 1:
            raise ValueError("column span must cover the gap and its left bubble")
        if self.finals_found < 0:
            raise ValueError("final count cannot be negative")

    def to_json_obj(self) -> dict:
        return {
            "anchor": list(self.anchor),
            "col_lo": self.col_lo,
            "col_hi": self.col_hi,
            "row_max": self.row_max,
            "gap_len": self.gap_len,
            "finals_found": self.finals_found,
        }


def _encode_witness(witness: object) -> object:
    if isinstance(witness, GapBox):
        return witness.to_json_obj()
    if isinstance(witness, tuple) and witness and isinstance(witness[0], tuple):
        return [list(cell) for cell in witness]
    return list(witness)  # a single cell


@dataclass(frozen=True)
class RuleReport:
    """Verdict of one rule on one input, with witnesses for each violation."""

    rule: str
    witnesses: tuple = ()

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def to_json_obj(self) -> dict:
        return {
            "rule": self.rule,
            "holds": self.holds,
            "witnesses": [_encode_witness(w) for w in self.witnesses],
        }


def _greedy_dot_columns(diagram: Diagram, horizon: int) -> list[int]:
    """Column of the dot in each row 1..horizon, scanning bottom up.

    Each dot takes the smallest column strictly right of every bubble in
    its row and not used by a lower dot.  After the occupied part of the
    grid the result must be the plain smallest-unused column; that tail
    behavior is verified explicitly.
    """
    row_reach: dict[int, int] = {}
    for r, c in diagram.cells:
        row_reach[r] = max(row_reach.get(r, 0), c)
    used: set[int] = set()
    columns: list[int] = []
    for row in range(1, horizon + 1):
        col = row_reach.get(row, 0) + 1
        while col in used:
            col += 1
        used.add(col)
        columns.append(col)
    top = diagram.max_coordinate
    seen: set[int] = set()
    for row, col in enumerate(columns, 1):
        if row > top:
            expect = 1
            while expect in seen:
                expect += 1
            if col != expect:
                raise StabilizationError(
                    f"row {row} received column {col}, expected minimal unused {expect}"
                )
        seen.add(col)
    return columns


def _horizon(diagram: Diagram) -> int:
    return 2 * diagram.max_coordinate + 2


def row_dots(diagram: Diagram) -> DotSet:
    """Dot each row, bottom to top, just right of its bubbles.

    >>> row_dots(Diagram.from_cells([(1, 1), (2, 2)])).dots[:3]
    ((1, 2), (2, 3), (3, 1))
    """
    horizon = _horizon(diagram)
    columns = _greedy_dot_columns(diagram, horizon)
    return DotSet(tuple((row, col) for row, col in enumerate(columns, 1)), horizon)


def column_dots(diagram: Diagram) -> DotSet:
    """Dot each column, left to right, just above its bubbles.

    >>> column_dots(Diagram.from_cells([(1, 1), (2, 2)])).dots[:3]
    ((2, 1), (3, 2), (1, 3))
    """
    horizon = _horizon(diagram)
    rows = _greedy_dot_columns(diagram.transpose(), horizon)
    return DotSet(tuple((row, col) for col, row in enumerate(rows, 1)), horizon)


def check_dot_rule(diagram: Diagram) -> RuleReport:
    """Row dots and column dots must agree as sets."""
    mismatched = row_dots(diagram).cells() ^ column_dots(diagram).cells()
    return RuleReport("dot", tuple(sorted(mismatched)))


def check_vertical_popping(diagram: Diagram) -> RuleReport:
    """No bubble may sit strictly above a row dot in its column."""
    dot_row_of_col = {c: r for r, c in row_dots(diagram).dots}
    witnesses = sorted(
        ((r, c), (dot_row_of_col[c], c))
        for r, c in diagram.cells
        if c in dot_row_of_col and dot_row_of_col[c] < r
    )
    return RuleReport("vertical_popping", tuple(witnesses))


def check_horizontal_popping(diagram: Diagram) -> RuleReport:
    """No bubble may sit strictly right of a column dot in its row."""
    dot_col_of_row = {r: c for r, c in column_dots(diagram).dots}
    witnesses = sorted(
        ((r, c), (r, dot_col_of_row[r]))
        for r, c in diagram.cells
        if r in dot_col_of_row and dot_col_of_row[r] < c
    )
    return RuleReport("horizontal_popping", tuple(witnesses))


def check_southwest(diagram: Diagram) -> RuleReport:
    """Any two cells must have their coordinatewise minimum in the diagram."""
    cells = diagram.sorted_cells
    witnesses = []
    for i, a in enumerate(cells):
        for b in cells[i + 1 :]:
            corner = (min(a[0], b[0]), min(a[1], b[1]))
            if corner != a and corner != b and corner not in diagram.cells:
                witnesses.append((a, b))
    return RuleReport("southwest", tuple(witnesses))


def horizontal_numbering(diagram: Diagram) -> Labeling:
    """Label the bubbles of row ``i`` left to right as i, i+1, i+2, ...

    >>> horizontal_numbering(Diagram.from_cells([(2, 4), (2, 1)]))
    {(2, 1): 2, (2, 4): 3}
    """
    labels: Labeling = {}
    for row in sorted({r for r, _ in diagram.cells}):
        for offset, col in enumerate(diagram.row_columns(row)):
            labels[(row, col)] = row + offset
    return labels


def vertical_numbering(diagram: Diagram) -> Labeling:
    """Label the bubbles of column ``j`` bottom to top as j, j+1, j+2, ..."""
    labels: Labeling = {}
    for col in sorted({c for _, c in diagram.cells}):
        for offset, row in enumerate(diagram.column_rows(col)):
            labels[(row, col)] = col + offset
    return labels


def check_numbering(diagram: Diagram) -> RuleReport:
    """The horizontal and vertical numberings must be the same labeling."""
    horizontal = horizontal_numbering(diagram)
    vertical = vertical_numbering(diagram)
    witnesses = sorted(
        cell for cell in diagram.cells if horizontal[cell] != vertical[cell]
    )
    return RuleReport("numbering", tuple(witnesses))


def find_step_outs(diagram: Diagram) -> RuleReport:
    """Find label pairs (n, n+1) whose second bubble lies strictly north-east.

    Only defined when the numbering condition holds; otherwise the labels
    are ambiguous and a :class:`NumberingRequiredError` is raised.
    """
    if not check_numbering(diagram).holds:
        raise NumberingRequiredError(
            "step-out scan requires the horizontal and vertical numberings to agree"
        )
    labels = horizontal_numbering(diagram)
    by_label: dict[int, list[Cell]] = {}
    for cell, label in labels.items():
        by_label.setdefault(label, []).append(cell)
    witnesses = sorted(
        (a, b)
        for label, cells in by_label.items()
        for a in cells
        for b in by_label.get(label + 1, ())
        if b[0] > a[0] and b[1] > a[1]
    )
    return RuleReport("step_out", tuple(witnesses))


def final_bubbles(diagram: Diagram) -> frozenset[Cell]:
    """The rightmost bubble of each row up to the top occupied row.

    Every row implicitly holds a basement bubble in column 0, so a row
    with no real bubbles contributes ``(row, 0)``.

    >>> sorted(final_bubbles(Diagram.from_cells([(2, 1), (2, 3)])))
    [(1, 0), (2, 3)]
    """
    finals = set()
    for row in range(1, diagram.max_row + 1):
        cols = diagram.row_columns(row)
        finals.add((row, cols[-1] if cols else 0))
    return frozenset(finals)


def gap_boxes(diagram: Diagram) -> tuple[GapBox, ...]:
    """One box per empty-cell gap, with its final-bubble count filled in.

    A gap is a maximal run of ``n >= 1`` empty cells strictly between two
    bubbles of one row; the basement bubble in column 0 counts as a left
    bubble, and cells right of a row's last bubble are never a gap.  The
    box spans the gap's columns together with the left bubble's column,
    over all rows strictly below.
    """
    finals = final_bubbles(diagram)
    top = diagram.max_row
    boxes = []
    for row in sorted({r for r, _ in diagram.cells}):
        stops = (0,) + diagram.row_columns(row)
        for left, right in pairwise(stops):
            length = right - left - 1
            if length < 1:
                continue
            row_max = row - 1
            assert row_max < top  # boxes never reach above the top occupied row
            found = sum(
                1 for fr, fc in finals if fr <= row_max and left <= fc <= left + length
            )
            boxes.append(
                GapBox(
                    anchor=(row, right),
                    col_lo=left,
                    col_hi=left + length,
                    row_max=row_max,
                    gap_len=length,
                    finals_found=found,
                )
            )
    return tuple(boxes)


def check_empty_cell_gap(diagram: Diagram) -> RuleReport:
    """Each gap of length ``n`` must have exactly ``n`` finals in its box."""
    witnesses = tuple(
        box for box in gap_boxes(diagram) if box.finals_found != box.gap_len
    )
    return RuleReport("empty_cell_gap", witnesses)


def check_rothe(diagram: Diagram) -> RuleReport:
    """Is the diagram the Rothe diagram of some permutation?

    The row-dot columns determine the only candidate word; the witnesses
    are the cells by which the candidate's diagram differs.
    """
    candidate = _dot_reading(diagram)
    difference = diagram.cells ^ rothe_diagram(candidate).cells
    return RuleReport("is_rothe", tuple(sorted(difference)))


def classify(diagram: Diagram) -> list[RuleReport]:
    """Run every checker on the diagram.

    The step-out report is omitted when the numbering condition fails,
    since its labels would be ambiguous; every other rule always reports.
    """
    reports = [
        check_southwest(diagram),
        check_dot_rule(diagram),
        check_vertical_popping(diagram),
        check_horizontal_popping(diagram),
    ]
    numbering = check_numbering(diagram)
    reports.append(numbering)
    if numbering.holds:
        reports.append(find_step_outs(diagram))
    reports.append(check_empty_cell_gap(diagram))
    reports.append(check_rothe(diagram))
    return reports


def condition_verdicts(diagram: Diagram) -> dict[str, bool]:
    """The five equivalent characterizations, evaluated independently.

    All five verdicts agree on every diagram; the verification module
    checks exactly that, exhaustively.
    """
    by_rule = {report.rule: report.holds for report in classify(diagram)}
    return {
        "rothe": by_rule["is_rothe"],
        "popping_gap": by_rule["vertical_popping"] and by_rule["empty_cell_gap"],
        "numbering_dot": by_rule["numbering"] and by_rule["dot"],
        "dot_southwest": by_rule["dot"] and by_rule["southwest"],
        "numbering_stepout": by_rule["numbering"] and by_rule.get("step_out", False),
    }
