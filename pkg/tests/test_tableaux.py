import pytest

from heckecrystals.errors import ValidationError
from heckecrystals.grothendieck import ssyt_fillings
from heckecrystals.tableaux import (
    RowIncreasingTableau,
    SemistandardTableau,
    SetValuedFilling,
    SkewSetValuedTableau,
    SkewShape,
    Tableau,
    excess_of,
    row_word,
    validate,
    weight_of,
)
from heckecrystals.verification import svt_fillings


def test_shape_containment_checked():
    with pytest.raises(ValidationError):
        SkewShape((2, 2), (3,))
    with pytest.raises(ValidationError):
        SkewShape((2, 3), ())


def test_shape_contents():
    sh = SkewShape((2, 2), (1,))
    assert sh.content(1, 2) == 3
    assert sh.content(2, 1) == 1
    assert list(sh.cells()) == [(1, 2), (2, 1), (2, 2)]


def test_svt_example_is_valid():
    t = SkewSetValuedTableau(SkewShape((2, 2), (1,)), (((1, 2),), ((2, 3), (3,))))
    assert validate(t) is None
    assert weight_of(t) == (1, 2, 2)
    assert excess_of(t) == 2


def test_row_condition_rejected():
    with pytest.raises(ValidationError):
        SkewSetValuedTableau(SkewShape((2,), ()), (((2, 3), (1,)),))


def test_column_condition_rejected():
    with pytest.raises(ValidationError):
        SkewSetValuedTableau(SkewShape((1, 1), ()), (((2,),), ((2,),)))


def test_duplicate_entries_rejected_for_svt_but_kept_for_fillings():
    with pytest.raises(ValidationError):
        SkewSetValuedTableau(SkewShape((1,), ()), (((2, 2),),))
    filling = SetValuedFilling(SkewShape((1,), ()), (((2, 2),),))
    assert filling.cell(1, 1) == (2, 2)


def test_row_increasing_rejects_weak_rows():
    with pytest.raises(ValidationError):
        RowIncreasingTableau(SkewShape((2, 2), ()), ((1, 1), (2, 2)))


def test_recording_filling_example_is_valid_svt():
    t = SkewSetValuedTableau(
        SkewShape((2, 2, 1), ()), (((1,), (1, 3)), ((3,), (4,)), ((5,),)))
    assert weight_of(t) == (2, 0, 2, 1, 1)


def test_weight_of_empty():
    t = SkewSetValuedTableau(SkewShape((), ()), ())
    assert weight_of(t) == ()
    assert excess_of(t) == 0


def test_row_word_reads_top_down():
    p = RowIncreasingTableau(SkewShape((3, 1, 1), ()), ((1, 2, 4), (1,), (3,)))
    assert row_word(p).letters == (3, 1, 1, 2, 4)
    single = RowIncreasingTableau(SkewShape((3,), ()), ((1, 3, 4),))
    assert row_word(single).letters == (1, 3, 4)


def _transpose(t: Tableau) -> Tableau:
    cols = t.shape.outer[0] if t.shape.outer else 0
    rows = []
    for j in range(1, cols + 1):
        rows.append(tuple(t.cell(i, j) for i in range(1, t.shape.rows + 1)
                          if (i, j) in t.shape))
    return Tableau(SkewShape(tuple(len(r) for r in rows), ()), tuple(rows))


@pytest.mark.parametrize("mu", [(2, 1), (2, 2), (3, 1), (1, 1, 1)])
def test_transpose_of_semistandard_is_row_increasing(mu):
    for rows in ssyt_fillings(mu, 3):
        t = SemistandardTableau(SkewShape(mu, ()), rows)
        tt = _transpose(t)
        RowIncreasingTableau(tt.shape, tt.rows)  # validates
        back = _transpose(tt)
        assert back.rows == t.rows


def test_minimal_filling_is_unique_with_its_weight():
    from heckecrystals.uncrowding import t_mu

    for mu in [(1,), (2,), (2, 1), (3, 2, 1), (2, 2, 2)]:
        matches = [rows for rows in ssyt_fillings(mu, len(mu))
                   if weight_of(SemistandardTableau(SkewShape(mu, ()), rows)) == mu]
        assert matches == [t_mu(mu).rows]


def test_excess_nonnegative_and_zero_iff_singletons():
    shape = SkewShape((2, 1), ())
    for t in svt_fillings(shape, 3):
        e = excess_of(t)
        assert e >= 0
        assert (e == 0) == all(len(c) == 1 for _, _, c in t.cells())
