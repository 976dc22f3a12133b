"""Skew shapes and tableaux, in French notation throughout.

Row 1 is the bottom row and row indices increase upward; every
serialization and pretty-printer in the package states this convention.
Cells of set-valued fillings are stored as ascending tuples so that
hashing and equality are deterministic.  The recording filling of Hecke
insertion may repeat a label inside a cell, so the base class permits
duplicates; :class:`SkewSetValuedTableau` rejects them along with the
other semistandardness conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ValidationError
from .hecke import HeckeWord

__all__ = [
    "SkewShape",
    "SetValuedFilling",
    "SkewSetValuedTableau",
    "Tableau",
    "SemistandardTableau",
    "RowIncreasingTableau",
    "IncreasingTableau",
    "FlaggedIncreasingTableau",
    "weight_of",
    "excess_of",
    "row_word",
    "validate",
]


def _check_partition(parts: tuple[int, ...], name: str) -> None:
    if any(p <= 0 for p in parts):
        raise ValidationError(f"{name} has non-positive parts: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValidationError(f"{name} is not weakly decreasing: {parts}")


@dataclass(frozen=True)
class SkewShape:
    """Outer and inner partitions with ``inner`` contained in ``outer``."""

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_partition(self.outer, "outer shape")
        _check_partition(self.inner, "inner shape")
        if len(self.inner) > len(self.outer):
            raise ValidationError("inner shape has more rows than outer shape")
        if any(self.inner_at(i) > self.outer[i - 1] for i in range(1, len(self.outer) + 1)):
            raise ValidationError(f"inner shape {self.inner} not contained in {self.outer}")

    @property
    def rows(self) -> int:
        return len(self.outer)

    def outer_at(self, i: int) -> int:
        return self.outer[i - 1] if 1 <= i <= len(self.outer) else 0

    def inner_at(self, i: int) -> int:
        return self.inner[i - 1] if 1 <= i <= len(self.inner) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        """All (row, column) cells, bottom row first and left to right."""
        for i in range(1, self.rows + 1):
            for j in range(self.inner_at(i) + 1, self.outer_at(i) + 1):
                yield (i, j)

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def content(self, i: int, j: int) -> int:
        """Diagonal label ``rows + j - i`` of the cell ``(i, j)``."""
        return self.rows + j - i

    def __contains__(self, cell: tuple[int, int]) -> bool:
        i, j = cell
        return 1 <= i <= self.rows and self.inner_at(i) < j <= self.outer_at(i)

    def __str__(self) -> str:
        outer = ",".join(str(p) for p in self.outer)
        inner = ",".join(str(p) for p in self.inner)
        return f"{outer}/{inner}" if self.inner else outer


@dataclass(frozen=True)
class SetValuedFilling:
    """A skew shape with a nonempty ascending tuple of labels per cell.

    Labels may repeat inside a cell (needed for Hecke recording
    fillings); no order conditions between cells are imposed here.
    """

    shape: SkewShape
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        sh = self.shape
        if len(self.rows) != sh.rows:
            raise ValidationError(f"expected {sh.rows} rows, got {len(self.rows)}")
        for i in range(1, sh.rows + 1):
            row = self.rows[i - 1]
            if len(row) != sh.outer_at(i) - sh.inner_at(i):
                raise ValidationError(f"row {i} has {len(row)} cells, shape wants "
                                      f"{sh.outer_at(i) - sh.inner_at(i)}")
            for cell in row:
                if not cell:
                    raise ValidationError(f"empty cell in row {i}")
                if any(cell[k] > cell[k + 1] for k in range(len(cell) - 1)):
                    raise ValidationError(f"cell {cell} in row {i} is not ascending")
                if any(v < 1 for v in cell):
                    raise ValidationError(f"cell {cell} in row {i} has entries < 1")

    def cell(self, i: int, j: int) -> tuple[int, ...]:
        if (i, j) not in self.shape:
            raise ValidationError(f"cell ({i}, {j}) outside shape {self.shape}")
        return self.rows[i - 1][j - 1 - self.shape.inner_at(i)]

    def cells(self) -> Iterator[tuple[int, int, tuple[int, ...]]]:
        for i, j in self.shape.cells():
            yield i, j, self.cell(i, j)

    def max_entry(self) -> int:
        return max((v for _, _, c in self.cells() for v in c), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetValuedFilling):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __str__(self) -> str:
        return pretty(self)


class SkewSetValuedTableau(SetValuedFilling):
    """Semistandard set-valued tableau: duplicate-free cells, weak rows
    (max of a cell <= min of its right neighbor), strict columns."""

    def __post_init__(self) -> None:
        super().__post_init__()
        problem = svt_violation(self)
        if problem is not None:
            raise ValidationError(problem)


def svt_violation(t: SetValuedFilling) -> str | None:
    """First semistandardness violation of ``t``, or None if valid."""
    sh = t.shape
    for i, j, cell in t.cells():
        if len(set(cell)) != len(cell):
            return f"cell ({i},{j}) repeats an entry: {cell}"
        if (i, j + 1) in sh and max(cell) > min(t.cell(i, j + 1)):
            return (f"row condition fails between ({i},{j}) and ({i},{j + 1}): "
                    f"max{cell} > min{t.cell(i, j + 1)}")
        if (i + 1, j) in sh and max(cell) >= min(t.cell(i + 1, j)):
            return (f"column condition fails between ({i},{j}) and ({i + 1},{j}): "
                    f"max{cell} >= min{t.cell(i + 1, j)}")
    return None


@dataclass(frozen=True)
class Tableau:
    """A skew shape with a single positive integer per cell."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        sh = self.shape
        if len(self.rows) != sh.rows:
            raise ValidationError(f"expected {sh.rows} rows, got {len(self.rows)}")
        for i in range(1, sh.rows + 1):
            if len(self.rows[i - 1]) != sh.outer_at(i) - sh.inner_at(i):
                raise ValidationError(f"row {i} has the wrong number of cells")
            if any(v < 1 for v in self.rows[i - 1]):
                raise ValidationError(f"row {i} has entries < 1")

    def cell(self, i: int, j: int) -> int:
        if (i, j) not in self.shape:
            raise ValidationError(f"cell ({i}, {j}) outside shape {self.shape}")
        return self.rows[i - 1][j - 1 - self.shape.inner_at(i)]

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for i, j in self.shape.cells():
            yield i, j, self.cell(i, j)

    def max_entry(self) -> int:
        return max((v for _, _, v in self.cells()), default=0)

    def as_set_valued(self) -> SetValuedFilling:
        rows = tuple(tuple((v,) for v in row) for row in self.rows)
        return SetValuedFilling(self.shape, rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __str__(self) -> str:
        return pretty(self)


def _rows_weakly_increase(t: Tableau) -> str | None:
    for i, j, v in t.cells():
        if (i, j + 1) in t.shape and v > t.cell(i, j + 1):
            return f"row {i} decreases at column {j}"
    return None


def _rows_strictly_increase(t: Tableau) -> str | None:
    for i, j, v in t.cells():
        if (i, j + 1) in t.shape and v >= t.cell(i, j + 1):
            return f"row {i} is not strictly increasing at column {j}"
    return None


def _cols_weakly_increase(t: Tableau) -> str | None:
    for i, j, v in t.cells():
        if (i + 1, j) in t.shape and v > t.cell(i + 1, j):
            return f"column {j} decreases at row {i}"
    return None


def _cols_strictly_increase(t: Tableau) -> str | None:
    for i, j, v in t.cells():
        if (i + 1, j) in t.shape and v >= t.cell(i + 1, j):
            return f"column {j} is not strictly increasing at row {i}"
    return None


class SemistandardTableau(Tableau):
    """Rows weakly increase, columns strictly increase."""

    def __post_init__(self) -> None:
        super().__post_init__()
        problem = _rows_weakly_increase(self) or _cols_strictly_increase(self)
        if problem is not None:
            raise ValidationError(problem)


class RowIncreasingTableau(Tableau):
    """Rows strictly increase, columns weakly increase (transpose is
    semistandard)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        problem = _rows_strictly_increase(self) or _cols_weakly_increase(self)
        if problem is not None:
            raise ValidationError(problem)


class IncreasingTableau(Tableau):
    """Rows and columns strictly increase."""

    def __post_init__(self) -> None:
        super().__post_init__()
        problem = _rows_strictly_increase(self) or _cols_strictly_increase(self)
        if problem is not None:
            raise ValidationError(problem)


class FlaggedIncreasingTableau(Tableau):
    """Strictly increasing skew filling with entries in row ``i`` at most
    ``i - 1``; here outer and inner shapes share the first part, so the
    bottom row carries no cells."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.shape.outer and self.shape.outer_at(1) != self.shape.inner_at(1):
            raise ValidationError("flagged tableau must have an empty bottom row")
        problem = _rows_strictly_increase(self) or _cols_strictly_increase(self)
        if problem is not None:
            raise ValidationError(problem)
        for i, j, v in self.cells():
            if v > i - 1:
                raise ValidationError(f"entry {v} in row {i} exceeds the flag {i - 1}")


def validate(obj: SetValuedFilling | Tableau) -> str | None:
    """Re-run the invariants of the concrete type, returning the first
    violation instead of raising (used by the CLI and the harness)."""
    try:
        type(obj)(obj.shape, obj.rows)
    except ValidationError as exc:
        return str(exc)
    return None


def weight_of(t: SetValuedFilling | Tableau) -> tuple[int, ...]:
    """Multiplicity vector of the letters ``1..max``."""
    if isinstance(t, Tableau):
        entries = [v for _, _, v in t.cells()]
    else:
        entries = [v for _, _, c in t.cells() for v in c]
    top = max(entries, default=0)
    counts = [0] * top
    for v in entries:
        counts[v - 1] += 1
    return tuple(counts)


def excess_of(t: SetValuedFilling) -> int:
    return sum(len(c) for _, _, c in t.cells()) - t.shape.size()


def row_word(p: Tableau, n: int | None = None) -> HeckeWord:
    """Row reading word: rows top to bottom, each left to right."""
    letters = tuple(v for row in reversed(p.rows) for v in row)
    if n is None:
        n = max(letters, default=0) + 1
    return HeckeWord(letters, max(n, 1))


def pretty(t: SetValuedFilling | Tableau) -> str:
    """Diagram layout with the top row first and inner cells dotted."""
    sh = t.shape

    def text(i: int, j: int) -> str:
        if (i, j) not in sh:
            return "." if j <= sh.inner_at(i) and j <= sh.outer_at(i) else ""
        v = t.cell(i, j)
        if isinstance(v, tuple):
            return "".join(map(str, v)) if all(x <= 9 for x in v) else ",".join(map(str, v))
        return str(v)

    width = max(sh.outer_at(i) for i in range(1, sh.rows + 1)) if sh.rows else 0
    grid = [[text(i, j) for j in range(1, width + 1)] for i in range(sh.rows, 0, -1)]
    colw = [max((len(row[c]) for row in grid), default=1) for c in range(width)]
    lines = [" ".join(row[c].ljust(colw[c]) for c in range(width)).rstrip() for row in grid]
    return "\n".join(line for line in lines if line) or "(empty)"


def from_cells(shape: SkewShape, cells: dict[tuple[int, int], Iterable[int]],
               cls: type = SkewSetValuedTableau) -> SetValuedFilling:
    """Assemble a set-valued filling from a cell dictionary."""
    rows = []
    for i in range(1, shape.rows + 1):
        row = []
        for j in range(shape.inner_at(i) + 1, shape.outer_at(i) + 1):
            if (i, j) not in cells:
                raise ValidationError(f"missing cell ({i}, {j})")
            row.append(tuple(sorted(cells[(i, j)])))
        rows.append(tuple(row))
    return cls(shape, tuple(rows))


def tableau_from_cells(shape: SkewShape, cells: dict[tuple[int, int], int],
                       cls: type = Tableau) -> Tableau:
    rows = []
    for i in range(1, shape.rows + 1):
        row = []
        for j in range(shape.inner_at(i) + 1, shape.outer_at(i) + 1):
            if (i, j) not in cells:
                raise ValidationError(f"missing cell ({i}, {j})")
            row.append(cells[(i, j)])
        rows.append(tuple(row))
    return cls(shape, tuple(rows))
