import pytest

from heckecrystals.errors import ValidationError
from heckecrystals.formats import parse_factorization as pf
from heckecrystals.residue import res
from heckecrystals.tableaux import (
    FlaggedIncreasingTableau,
    SkewSetValuedTableau,
    SkewShape,
    excess_of,
    weight_of,
)
from heckecrystals.uncrowding import star_tilde, t_mu, uncrowd, uncrowd_step

BIG = SkewSetValuedTableau(
    SkewShape((6, 3, 3, 1), ()),
    (((1,), (1,), (1,), (1, 2), (2, 3, 4), (5,)),
     ((2,), (2, 3), (3,)),
     ((4,), (4,), (5,)),
     ((5,),)))


def test_uncrowd_step_worked_example():
    out, added, source = uncrowd_step(BIG)
    assert added == (5, 1) and source == 2
    assert out.rows == (
        ((1,), (1,), (1,), (1, 2), (2, 3, 4), (5,)),
        ((2,), (2,), (3,)),
        ((3,), (4,), (5,)),
        ((4,),),
        ((5,),))


def test_uncrowd_step_single_cell():
    t = SkewSetValuedTableau(SkewShape((1,), ()), (((1, 2),),))
    out, added, source = uncrowd_step(t)
    assert out.rows == (((1,),), ((2,),))
    assert added == (2, 1) and source == 1


def test_uncrowd_step_decrements_excess():
    cur = BIG
    while True:
        try:
            nxt, _, _ = uncrowd_step(cur)
        except ValidationError:
            break
        assert excess_of(nxt) == excess_of(cur) - 1
        cur = nxt


def test_uncrowd_step_requires_multicell():
    t = SkewSetValuedTableau(SkewShape((1,), ()), (((1,),),))
    with pytest.raises(ValidationError):
        uncrowd_step(t)


def test_uncrowd_worked_example():
    p, q = uncrowd(BIG)
    assert p.rows == ((1, 1, 1, 1, 2, 5), (2, 2, 2, 3), (3, 3, 4), (4, 4), (5, 5))
    assert q.shape == SkewShape((6, 4, 3, 2, 2), (6, 3, 3, 1))
    assert q.rows == ((), (1,), (), (3,), (3, 4))
    assert weight_of(p) == weight_of(BIG)
    assert isinstance(q, FlaggedIncreasingTableau)


def test_uncrowd_of_multicell_free_tableau():
    t = SkewSetValuedTableau(SkewShape((2, 1), ()), (((1,), (2,)), ((2,),)))
    p, q = uncrowd(t)
    assert p.rows == ((1, 2), (2,))
    assert q.shape.size() == 0


def test_minimal_filling():
    assert t_mu((2, 1)).rows == ((1, 1), (2,))
    assert t_mu(()).rows == ()


def test_star_tilde_equals_plain_insertion_for_straight_class():
    from heckecrystals.factorization import to_biword
    from heckecrystals.insertion import star_insert

    t = SkewSetValuedTableau(SkewShape((2,), ()), (((1,), (1, 2)),))
    g = res(t, 2)  # canonical preimage is straight
    assert star_tilde(g).q == star_insert(to_biword(g)).q


def test_star_tilde_on_skew_example():
    t = SkewSetValuedTableau(SkewShape((2, 2), (1,)), (((1, 2),), ((2, 3), (3,))))
    result = star_tilde(res(t, 3))
    p_tilde, _ = uncrowd(t)
    assert result.q == p_tilde
    assert result.q.shape == SkewShape((2, 2, 2), (1,))
    assert result.p.shape == result.q.shape


def test_star_tilde_sink_gives_lowest_weight_recording():
    """At a sink, the normalized recording tableau is the unique
    lowest-weight semistandard tableau of the sorted weight."""
    from heckecrystals.star_crystal import f_star
    from heckecrystals.verification import Bounds, fc_factorizations

    checked = 0
    for f in fc_factorizations(Bounds(n=4, m=3, max_letters=5)):
        if any(f_star(f, i) is not None for i in (1, 2)):
            continue
        result = star_tilde(f)
        if result.q.shape.inner:
            continue
        from heckecrystals.svt_crystal import f_classical
        from heckecrystals.tableaux import weight_of

        assert all(f_classical(result.q, i) is None for i in range(1, f.m))
        wt = weight_of(result.q) + (0,) * (f.m - len(weight_of(result.q)))
        assert all(wt[i] <= wt[i + 1] for i in range(len(wt) - 1))
        checked += 1
    assert checked > 10
