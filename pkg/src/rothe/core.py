"""Permutations, diagrams, and the Lehmer bijection.

Conventions used throughout the package:

* A permutation acts on the positive integers and fixes all but finitely
  many of them.  It is stored in one-line notation as a tuple ``word``
  with ``word[i-1] = w_i``; positions beyond the word are fixed points.
  The canonical form is the shortest such word: empty for the identity,
  otherwise ending in an unfixed position.

* A cell is a pair ``(row, col)``, both 1-based.  Rows grow upward
  (French convention) and columns grow to the right, so the cell ``(i, w)``
  sits in row ``i`` at horizontal position ``w``.

* The Rothe diagram of ``w`` is ``{(i, w_j) : i < j, w_i > w_j}``, one
  cell (a "bubble") per inversion.

* A Lehmer code is a finite sequence of nonnegative integers; entry
  ``a_i`` counts the inversions starting at position ``i`` and equals the
  number of bubbles in row ``i`` of the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "Cell",
    "Diagram",
    "LehmerCode",
    "ParseError",
    "Permutation",
    "lehmer_code",
    "parse_permutation",
    "permutation_from_lehmer",
    "recover_permutation",
    "rothe_diagram",
    "rothe_via_death_rays",
    "row_counts",
]

Cell = tuple[int, int]


class ParseError(ValueError):
    """Raised when permutation text cannot be parsed."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of the positive integers with finitely many unfixed points.

    The constructor insists on canonical form; use :meth:`from_word` to
    build one from an arbitrary word with a fixed tail.

    >>> Permutation((2, 3, 1)).value(2)
    3
    >>> Permutation.from_word([2, 1, 3, 4]).word
    (2, 1)
    >>> str(Permutation())
    '1'
    """

    word: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(
                f"word {word} is not a permutation of 1..{n}"
            )
        if word and word[-1] == n:
            raise ValueError(
                f"word {word} is not canonical: last position is fixed"
            )

    @classmethod
    def from_word(cls, values: Iterable[int]) -> "Permutation":
        """Build a permutation from one-line notation, trimming the fixed tail."""
        word = tuple(values)
        while word and word[-1] == len(word):
            word = word[:-1]
        return cls(word)

    @property
    def size(self) -> int:
        """Length of the canonical word (0 for the identity)."""
        return len(self.word)

    def value(self, i: int) -> int:
        """The image of position ``i``, using the identity beyond the word."""
        if i < 1:
            raise ValueError(f"position must be positive, got {i}")
        return self.word[i - 1] if i <= len(self.word) else i

    def __str__(self) -> str:
        if not self.word:
            return "1"
        if all(v <= 9 for v in self.word):
            return "".join(str(v) for v in self.word)
        return " ".join(str(v) for v in self.word)


@dataclass(frozen=True)
class Diagram:
    """A finite set of bubble cells, rows and columns both 1-based.

    >>> d = Diagram.from_cells([(2, 1), (1, 1)])
    >>> d.sorted_cells
    ((1, 1), (2, 1))
    >>> d.max_row, d.max_col
    (2, 1)
    """

    cells: frozenset[Cell] = frozenset()

    def __post_init__(self) -> None:
        cells = frozenset(self.cells)
        for cell in cells:
            if (
                not isinstance(cell, tuple)
                or len(cell) != 2
                or not all(isinstance(v, int) for v in cell)
            ):
                raise ValueError(f"cell {cell!r} is not an integer pair")
            if cell[0] < 1 or cell[1] < 1:
                raise ValueError(f"cell {cell} has coordinates below 1")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_cells(cls, cells: Iterable[Sequence[int]]) -> "Diagram":
        return cls(frozenset((int(r), int(c)) for r, c in cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    @property
    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    @property
    def max_row(self) -> int:
        return max((r for r, _ in self.cells), default=0)

    @property
    def max_col(self) -> int:
        return max((c for _, c in self.cells), default=0)

    @property
    def max_coordinate(self) -> int:
        return max((max(r, c) for r, c in self.cells), default=0)

    def row_columns(self, row: int) -> tuple[int, ...]:
        """Columns of the bubbles in ``row``, ascending."""
        return tuple(sorted(c for r, c in self.cells if r == row))

    def column_rows(self, col: int) -> tuple[int, ...]:
        """Rows of the bubbles in ``col``, ascending."""
        return tuple(sorted(r for r, c in self.cells if c == col))

    def transpose(self) -> "Diagram":
        return Diagram(frozenset((c, r) for r, c in self.cells))

    def to_json_obj(self) -> dict:
        return {"cells": [[r, c] for r, c in self.sorted_cells]}

    @classmethod
    def from_json_obj(cls, obj: object) -> "Diagram":
        if not isinstance(obj, dict) or "cells" not in obj:
            raise ValueError('diagram JSON must be an object with a "cells" key')
        raw = obj["cells"]
        if not isinstance(raw, list):
            raise ValueError('"cells" must be a list of [row, col] pairs')
        cells = []
        for entry in raw:
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(v, int) for v in entry)
            ):
                raise ValueError(f"cell entry {entry!r} is not a [row, col] pair")
            cells.append((entry[0], entry[1]))
        if len(set(cells)) != len(cells):
            raise ValueError("duplicate cells in diagram JSON")
        return cls.from_cells(cells)


@dataclass(frozen=True)
class LehmerCode:
    """A finite sequence of nonnegative integers, trailing zeros trimmed.

    >>> LehmerCode.from_counts([1, 2, 0, 0]).counts
    (1, 2)
    """

    counts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        object.__setattr__(self, "counts", counts)
        if any(not isinstance(a, int) or a < 0 for a in counts):
            raise ValueError(f"counts {counts} must be nonnegative integers")
        if counts and counts[-1] == 0:
            raise ValueError(f"counts {counts} are not canonical: trailing zero")

    @classmethod
    def from_counts(cls, values: Iterable[int]) -> "LehmerCode":
        counts = tuple(values)
        while counts and counts[-1] == 0:
            counts = counts[:-1]
        return cls(counts)

    def to_json_obj(self) -> dict:
        return {"counts": list(self.counts)}

    @classmethod
    def from_json_obj(cls, obj: object) -> "LehmerCode":
        if not isinstance(obj, dict) or "counts" not in obj:
            raise ValueError('code JSON must be an object with a "counts" key')
        raw = obj["counts"]
        if not isinstance(raw, list) or not all(isinstance(v, int) for v in raw):
            raise ValueError('"counts" must be a list of integers')
        return cls.from_counts(raw)


CodeLike = Union[LehmerCode, Sequence[int]]


def _as_counts(code: CodeLike) -> tuple[int, ...]:
    if isinstance(code, LehmerCode):
        return code.counts
    counts = tuple(int(a) for a in code)
    if any(a < 0 for a in counts):
        raise ValueError(f"counts {counts} must be nonnegative")
    return counts


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation into a canonical permutation.

    Accepts whitespace- or comma-separated values, or a compact digit
    string when every value is a single digit.

    >>> parse_permutation("152869347").word
    (1, 5, 2, 8, 6, 9, 3, 4, 7)
    >>> parse_permutation("2, 1").word
    (2, 1)
    >>> parse_permutation("1 2 3").word
    ()
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty input: expected at least one value")
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        values = []
        for pos, ch in enumerate(tokens[0], 1):
            if ch == "0":
                raise ParseError(f"value 0 at position {pos} is out of range")
            values.append(int(ch))
    else:
        values = []
        for pos, tok in enumerate(tokens, 1):
            if not tok.isdigit():
                raise ParseError(f"non-numeric token {tok!r} at position {pos}")
            value = int(tok)
            if value < 1:
                raise ParseError(f"value {value} at position {pos} is out of range")
            values.append(value)
    first_seen: dict[int, int] = {}
    for pos, value in enumerate(values, 1):
        if value in first_seen:
            raise ParseError(
                f"duplicate value {value} at positions {first_seen[value]} and {pos}"
            )
        first_seen[value] = pos
    n = len(values)
    for pos, value in enumerate(values, 1):
        if value > n:
            raise ParseError(
                f"value {value} at position {pos} is out of range 1..{n}"
            )
    return Permutation.from_word(values)


def rothe_diagram(w: Permutation) -> Diagram:
    """The inversion cells of ``w``: {(i, w_j) : i < j, w_i > w_j}.

    >>> sorted(rothe_diagram(Permutation((2, 3, 1))).cells)
    [(1, 1), (2, 1)]
    """
    word = w.word
    n = len(word)
    cells = frozenset(
        (i + 1, word[j])
        for i in range(n)
        for j in range(i + 1, n)
        if word[i] > word[j]
    )
    return Diagram(cells)


def rothe_via_death_rays(w: Permutation) -> Diagram:
    """The same diagram built from ray shadows instead of inversion pairs.

    An origin sits at every (i, w_i) and casts one ray upward and one to
    the right.  The diagram consists of the cells no ray touches; such a
    cell necessarily lies strictly left of its row's origin and strictly
    below its column's origin.
    """
    word = w.word
    n = len(word)
    origin_col = {i: word[i - 1] for i in range(1, n + 1)}
    origin_row = {word[i - 1]: i for i in range(1, n + 1)}
    cells = frozenset(
        (r, c)
        for r in range(1, n + 1)
        for c in range(1, n + 1)
        if origin_col[r] > c and origin_row[c] > r
    )
    return Diagram(cells)


def lehmer_code(w: Permutation) -> LehmerCode:
    """Per-position inversion counts of ``w``.

    >>> lehmer_code(Permutation((2, 3, 1))).counts
    (1, 1)
    """
    word = w.word
    n = len(word)
    counts = [
        sum(1 for j in range(i + 1, n) if word[i] > word[j]) for i in range(n)
    ]
    return LehmerCode.from_counts(counts)


def permutation_from_lehmer(code: CodeLike) -> Permutation:
    """The unique permutation whose Lehmer code is ``code``.

    Repeatedly selects the (a_i + 1)-th smallest unused value.  A ground
    set of ``len + max + 1`` values always suffices.

    >>> permutation_from_lehmer(LehmerCode((1, 1))).word
    (2, 3, 1)
    """
    counts = _as_counts(code)
    if not counts:
        return Permutation()
    available = list(range(1, len(counts) + max(counts) + 2))
    word = [available.pop(a) for a in counts]
    word.extend(available)
    return Permutation.from_word(word)


def row_counts(diagram: Diagram) -> LehmerCode:
    """Bubbles per row, from row 1 to the top occupied row.

    >>> row_counts(Diagram.from_cells([(1, 1), (2, 1)])).counts
    (1, 1)
    """
    top = diagram.max_row
    counts = [0] * top
    for r, _ in diagram.cells:
        counts[r - 1] += 1
    return LehmerCode.from_counts(counts)


def _dot_reading(diagram: Diagram) -> Permutation:
    """The candidate permutation read off the columns of the row dots."""
    from .rules import row_dots

    return Permutation.from_word(c for _, c in row_dots(diagram).dots)


def recover_permutation(diagram: Diagram) -> Optional[Permutation]:
    """The permutation whose Rothe diagram is ``diagram``, if one exists.

    The row-dot columns of a Rothe diagram spell out the one-line word,
    so the only possible preimage is the dot reading; it is checked by
    rebuilding the diagram.

    >>> recover_permutation(Diagram.from_cells([(1, 1), (2, 1)])).word
    (2, 3, 1)
    >>> recover_permutation(Diagram.from_cells([(1, 2), (2, 1)])) is None
    True
    """
    candidate = _dot_reading(diagram)
    return candidate if rothe_diagram(candidate) == diagram else None
