import pytest

from heckecrystals.residue import res
from heckecrystals.formats import parse_factorization as pf
from heckecrystals.svt_crystal import (
    e_svt,
    epsilon_svt,
    f_svt,
    phi_svt,
    signature,
)
from heckecrystals.tableaux import (
    SkewSetValuedTableau,
    SkewShape,
    excess_of,
    weight_of,
)
from heckecrystals.verification import Bounds, skew_shapes, svt_fillings

# straight shape (2,1): bottom row {1},{1,2,3}; top row {3}
T = SkewSetValuedTableau(SkewShape((2, 1), ()), (((1,), (1, 2, 3)), ((3,),)))


def test_signature_of_example():
    sig = signature(T, 1)
    assert sig.signs == ("-", "")
    assert sig.unpaired_minus == (1,)
    assert sig.unpaired_plus == ()


def test_signature_without_the_letters():
    sig = signature(T, 4)
    assert sig.signs == ("", "")
    assert sig.unpaired_minus == sig.unpaired_plus == ()


def test_statistics_from_signature():
    assert phi_svt(T, 1) == 1
    assert epsilon_svt(T, 1) == 0


def test_lowering_with_neighbor_donation():
    out = f_svt(T, 1)
    assert out == SkewSetValuedTableau(
        SkewShape((2, 1), ()), (((1, 2), (2, 3)), ((3,),)))
    assert res(out, 3) == pf("(31)(32)(2)")
    assert res(T, 3) == pf("(31)(3)(32)")


def test_raising_annihilates_without_unpaired_plus():
    assert e_svt(T, 1) is None


def test_raising_inverts_lowering():
    lowered = f_svt(T, 1)
    assert e_svt(lowered, 1) == T


def test_null_when_no_unpaired_minus():
    t = SkewSetValuedTableau(SkewShape((1, 1), ()), (((1,),), ((2,),)))
    assert f_svt(t, 1) is None


def test_operators_preserve_shape_excess_and_validity():
    bounds = Bounds(m=3, max_cells=4, max_rows=3, max_cols=3)
    for shape in skew_shapes(bounds):
        for t in svt_fillings(shape, 3):
            for i in (1, 2):
                for op, delta in ((f_svt, -1), (e_svt, +1)):
                    out = op(t, i)
                    if out is None:
                        continue
                    assert type(out) is SkewSetValuedTableau  # re-validated
                    assert out.shape == t.shape
                    assert excess_of(out) == excess_of(t)
                    wt, wo = weight_of(t), weight_of(out)
                    pad = max(len(wt), len(wo), i + 1)
                    wt = wt + (0,) * (pad - len(wt))
                    wo = wo + (0,) * (pad - len(wo))
                    assert wo[i - 1] - wt[i - 1] == delta
                    assert wo[i] - wt[i] == -delta


def test_classical_restriction_on_singletons():
    from heckecrystals.svt_crystal import f_classical
    from heckecrystals.tableaux import SemistandardTableau

    t = SemistandardTableau(SkewShape((2,), ()), ((1, 1),))
    out = f_classical(t, 1)
    assert out.rows == ((1, 2),)
    out2 = f_classical(out, 1)
    assert out2.rows == ((2, 2),)
    assert f_classical(out2, 1) is None
