"""Crystal operators on skew semistandard set-valued tableaux.

The signature rule works column by column: a column carrying ``i`` but
not ``i+1`` contributes a minus, the opposite a plus, and each plus
immediately left of a surviving minus cancels against it.  Lowering
turns the ``i`` in the rightmost unpaired minus column into ``i+1``,
except that a right neighbor holding both letters donates instead
(keeping the filling semistandard without moving the column signature).

Classical crystal operators on single-valued semistandard tableaux are
the restriction of these maps to all-singleton fillings, so the module
also serves as the operator backend for recording tableaux.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import mutations
from .errors import ValidationError
from .graphs import ColoredDigraph, build_component
from .tableaux import (
    SetValuedFilling,
    SkewSetValuedTableau,
    Tableau,
    weight_of,
)

__all__ = ["Signature", "signature", "f_svt", "e_svt", "phi_svt", "epsilon_svt",
           "f_classical", "e_classical", "crystal_graph_svt"]


@dataclass(frozen=True)
class Signature:
    """Per-column signs for one letter, with the surviving brackets."""

    signs: tuple[str, ...]              # one of "-", "+", "" per column
    unpaired_minus: tuple[int, ...]     # column indices, left to right
    unpaired_plus: tuple[int, ...]


def _column_letters(t: SetValuedFilling) -> list[set[int]]:
    width = max((t.shape.outer_at(i) for i in range(1, t.shape.rows + 1)), default=0)
    cols: list[set[int]] = [set() for _ in range(width + 1)]
    for _, j, cell in t.cells():
        cols[j].update(cell)
    return cols


def signature(t: SetValuedFilling, i: int) -> Signature:
    if i < 1:
        raise ValidationError("letter index must be positive")
    cols = _column_letters(t)
    signs = []
    for j in range(1, len(cols)):
        has_i, has_i1 = i in cols[j], i + 1 in cols[j]
        if has_i and not has_i1:
            signs.append("-")
        elif has_i1 and not has_i:
            signs.append("+")
        else:
            signs.append("")
    minus: list[int] = []
    plus_stack: list[int] = []
    for j, s in enumerate(signs, start=1):
        if s == "+":
            plus_stack.append(j)
        elif s == "-":
            if plus_stack:
                plus_stack.pop()
            else:
                minus.append(j)
    return Signature(tuple(signs), tuple(minus), tuple(plus_stack))


def _find_cell_with(t: SetValuedFilling, column: int, letter: int) -> tuple[int, int]:
    for r, c, cell in t.cells():
        if c == column and letter in cell:
            return r, c
    raise AssertionError(f"no cell with {letter} in column {column}")


def _replace_cells(t: SetValuedFilling,
                   changes: dict[tuple[int, int], tuple[int, ...]]) -> SetValuedFilling:
    rows = [list(row) for row in t.rows]
    for (r, c), new in changes.items():
        rows[r - 1][c - 1 - t.shape.inner_at(r)] = tuple(sorted(new))
    return type(t)(t.shape, tuple(tuple(row) for row in rows))


def f_svt(t: SetValuedFilling, i: int) -> SetValuedFilling | None:
    sig = signature(t, i)
    if not sig.unpaired_minus:
        return None
    col = sig.unpaired_minus[-1]
    r, c = _find_cell_with(t, col, i)
    b = t.cell(r, c)
    right = (r, c + 1)
    if (right in t.shape
            and not mutations.enabled(mutations.FSVT_EXCEPTION_OFF)
            and i in t.cell(*right) and i + 1 in t.cell(*right)):
        moved = tuple(v for v in t.cell(*right) if v != i)
        return _replace_cells(t, {(r, c): b + (i + 1,), right: moved})
    return _replace_cells(t, {(r, c): tuple(v for v in b if v != i) + (i + 1,)})


def e_svt(t: SetValuedFilling, i: int) -> SetValuedFilling | None:
    sig = signature(t, i)
    if not sig.unpaired_plus:
        return None
    col = sig.unpaired_plus[0]
    r, c = _find_cell_with(t, col, i + 1)
    b = t.cell(r, c)
    left = (r, c - 1)
    if left in t.shape and i in t.cell(*left) and i + 1 in t.cell(*left):
        moved = tuple(v for v in t.cell(*left) if v != i + 1)
        return _replace_cells(t, {(r, c): b + (i,), left: moved})
    return _replace_cells(t, {(r, c): tuple(v for v in b if v != i + 1) + (i,)})


def phi_svt(t: SetValuedFilling, i: int) -> int:
    return len(signature(t, i).unpaired_minus)


def epsilon_svt(t: SetValuedFilling, i: int) -> int:
    return len(signature(t, i).unpaired_plus)


def _as_tableau(t: SetValuedFilling, cls: type) -> Tableau:
    rows = tuple(tuple(cell[0] for cell in row) for row in t.rows)
    return cls(t.shape, rows)


def f_classical(t: Tableau, i: int) -> Tableau | None:
    """Classical lowering operator on a single-valued tableau, realized
    as the restriction of :func:`f_svt` to singleton cells."""
    out = f_svt(t.as_set_valued(), i)
    return None if out is None else _as_tableau(out, type(t))


def e_classical(t: Tableau, i: int) -> Tableau | None:
    out = e_svt(t.as_set_valued(), i)
    return None if out is None else _as_tableau(out, type(t))


def crystal_graph_svt(seed: SkewSetValuedTableau, m: int) -> ColoredDigraph:
    """Connected component of ``seed`` under letters ``1..m-1``."""
    if seed.max_entry() > m:
        raise ValidationError(f"seed has entries above {m}")
    return build_component(
        [seed], tuple(range(1, m)),
        lower=f_svt, raise_=e_svt,
        weight=lambda t: _padded_weight(t, m),
    )


def _padded_weight(t: SetValuedFilling, m: int) -> tuple[int, ...]:
    w = weight_of(t)
    return w + (0,) * (m - len(w))
