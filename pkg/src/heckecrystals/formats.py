"""Text and JSON formats for words, factorizations, biwords and tableaux.

Factorizations print the way this corner of combinatorics writes them:
``(7532)(621)(6)``, empty blocks as ``()``.  On input a block may also
separate letters with spaces or commas (required once letters exceed 9)
and ``(\\;)`` is accepted for an empty block.  Tableau JSON is explicit
about the row convention: row 1 is the bottom row and rows are listed
bottom-up; every cell is an ascending list even when it is a singleton.
The full grammar ships in ``docs/grammar.ebnf``.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .errors import ValidationError
from .factorization import DecreasingFactorization, HeckeBiword
from .hecke import HeckeWord
from .tableaux import (
    SetValuedFilling,
    SkewSetValuedTableau,
    SkewShape,
    Tableau,
)

__all__ = [
    "parse_word", "word_to_json", "word_from_json",
    "parse_factorization", "factorization_to_json", "factorization_from_json",
    "parse_biword", "parse_shape",
    "filling_to_json", "filling_from_json",
    "tableau_to_json", "tableau_from_json",
]

_BLOCK = re.compile(r"\(([^()]*)\)")


def _letters(text: str) -> tuple[int, ...]:
    text = text.replace("\\;", " ").strip()
    if not text:
        return ()
    if any(sep in text for sep in (" ", ",")):
        return tuple(int(tok) for tok in re.split(r"[,\s]+", text) if tok)
    if not text.isdigit():
        raise ValidationError(f"cannot read letters from {text!r}")
    return tuple(int(ch) for ch in text)


def parse_word(text: str, n: int | None = None) -> HeckeWord:
    letters = _letters(text)
    if n is None:
        n = max(letters, default=0) + 1
    return HeckeWord(letters, max(n, 1))


def parse_factorization(text: str, n: int | None = None) -> DecreasingFactorization:
    if not re.fullmatch(r"\s*(?:\([^()]*\)\s*)*", text):
        raise ValidationError(f"cannot parse factorization {text!r}")
    factors = tuple(_letters(b) for b in _BLOCK.findall(text))
    if n is None:
        n = max((a for f in factors for a in f), default=0) + 1
    return DecreasingFactorization(factors, max(n, 1))


def parse_biword(text: str, n: int | None = None) -> HeckeBiword:
    if "/" not in text:
        raise ValidationError("biword text needs a '/' between the two rows")
    top_text, bottom_text = text.split("/", 1)
    top = _letters(top_text)
    bottom = _letters(bottom_text)
    if n is None:
        n = max(bottom, default=0) + 1
    return HeckeBiword(top, bottom, max(n, 1))


def parse_shape(text: str) -> SkewShape:
    text = text.strip()
    if "/" in text:
        outer_text, inner_text = text.split("/", 1)
    else:
        outer_text, inner_text = text, ""
    outer = tuple(int(t) for t in re.split(r"[,\s]+", outer_text.strip()) if t)
    inner = tuple(int(t) for t in re.split(r"[,\s]+", inner_text.strip()) if t)
    return SkewShape(outer, inner)


def word_to_json(w: HeckeWord) -> dict[str, Any]:
    return {"n": w.n, "letters": list(w.letters)}


def word_from_json(data: dict[str, Any]) -> HeckeWord:
    return HeckeWord(tuple(data["letters"]), int(data["n"]))


def factorization_to_json(f: DecreasingFactorization) -> dict[str, Any]:
    return {"n": f.n, "factors": [list(b) for b in f.factors]}


def factorization_from_json(data: dict[str, Any]) -> DecreasingFactorization:
    return DecreasingFactorization(tuple(tuple(b) for b in data["factors"]), int(data["n"]))


def filling_to_json(t: SetValuedFilling) -> dict[str, Any]:
    return {
        "notation": "french",
        "outer": list(t.shape.outer),
        "inner": list(t.shape.inner),
        "rows": [[list(cell) for cell in row] for row in t.rows],
    }


def filling_from_json(data: dict[str, Any],
                      cls: type = SkewSetValuedTableau) -> SetValuedFilling:
    if data.get("notation", "french") != "french":
        raise ValidationError("only French notation is supported")
    shape = SkewShape(tuple(data["outer"]), tuple(data.get("inner", ())))
    rows = tuple(tuple(tuple(cell) for cell in row) for row in data["rows"])
    return cls(shape, rows)


def tableau_to_json(t: Tableau) -> dict[str, Any]:
    return {
        "notation": "french",
        "outer": list(t.shape.outer),
        "inner": list(t.shape.inner),
        "rows": [[[v] for v in row] for row in t.rows],
    }


def tableau_from_json(data: dict[str, Any], cls: type = Tableau) -> Tableau:
    if data.get("notation", "french") != "french":
        raise ValidationError("only French notation is supported")
    shape = SkewShape(tuple(data["outer"]), tuple(data.get("inner", ())))
    rows = []
    for row in data["rows"]:
        cells = []
        for cell in row:
            if isinstance(cell, list):
                if len(cell) != 1:
                    raise ValidationError("single-valued tableau expects singleton cells")
                cells.append(int(cell[0]))
            else:
                cells.append(int(cell))
        rows.append(tuple(cells))
    return cls(shape, tuple(rows))


def loads(text: str) -> dict[str, Any]:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad JSON input: {exc}") from exc
