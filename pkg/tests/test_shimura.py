import itertools

import pytest

from muordinary import (
    DatumError,
    NewtonPolygon,
    Orbit,
    PELDatum,
    SlopeEHalf,
    cascade,
    cascade_inventory,
    dual_orbit,
    gr_ranks,
    hasse_weight,
    is_ordinary,
    levi_shape,
    moonen_parameter_count,
    newton_from_multtype,
    newton_slopes,
)
from muordinary.shimura import (
    KIND_GENERAL,
    KIND_LUBIN_TATE,
    KIND_MULTIPLICATIVE,
    KIND_SELF_DUAL_DIAGONAL,
)


def test_newton_counting_examples():
    assert newton_slopes(Orbit(1, 4, (2,))).as_dict() == {0: 2, 1: 2}
    assert newton_slopes(Orbit(2, 3, (1, 2))).as_dict() == {0: 1, 1: 1, 2: 1}
    assert newton_slopes(Orbit(3, 2, (1, 1, 2))).as_dict() == {1: 1, 3: 1}


def test_newton_multtype_examples():
    for e in (1, 2, 3):
        for n in (2, 3, 4):
            for c in range(1, n):
                o = Orbit(e, n, (c,) * e)
                assert newton_from_multtype(o).as_dict() == {0: n - c, e: c}
    assert newton_from_multtype(Orbit(2, 3, (0, 0))).as_dict() == {0: 3}
    assert newton_from_multtype(Orbit(2, 3, (3, 3))).as_dict() == {2: 3}
    assert newton_from_multtype(Orbit(2, 3, (1, 2))).as_dict() == {0: 1, 1: 1, 2: 1}


def test_polygon_invariants_sampled():
    for e, n in [(1, 3), (2, 4), (3, 3)]:
        for f in itertools.product(range(n + 1), repeat=e):
            np = newton_slopes(Orbit(e, n, f))
            assert np.total_multiplicity() == n
            distinct = np.distinct()
            assert all(0 <= a <= e for a in distinct)
            assert all(a < b for a, b in zip(distinct, distinct[1:]))


def test_dual_examples():
    o = Orbit(2, 3, (1, 2))
    d = dual_orbit(o)
    assert d.f == (2, 1)
    assert dual_orbit(d) == o
    reflected = {o.e - a: m for a, m in newton_slopes(o).slopes}
    assert newton_slopes(d).as_dict() == reflected
    c = Orbit(3, 4, (1, 1, 1))
    assert newton_slopes(dual_orbit(c)).as_dict() == {0: 1, 3: 3}
    assert newton_slopes(c).as_dict() == {0: 3, 3: 1}


def test_levi_shape_examples():
    assert levi_shape(Orbit(2, 3, (1, 2))) == (1, 1, 1)
    for n, c in [(3, 1), (3, 2), (5, 2)]:
        assert levi_shape(Orbit(2, n, (c, c))) == (c, n - c)
    # self-dual with two slopes 0, e keeps only the top block
    assert levi_shape(Orbit(2, 2, (1, 1), self_dual=True)) == (1,)


def test_levi_shape_rejects_middle_slope():
    # type (0, 2): the single slope is 1 = e/2
    with pytest.raises(SlopeEHalf):
        levi_shape(Orbit(2, 2, (0, 2), self_dual=True))
    with pytest.raises(SlopeEHalf):
        cascade(Orbit(2, 2, (0, 2), self_dual=True))


def _self_dual(e, n=2):
    return Orbit(e, n, (n // 2,) * e, self_dual=True)


def test_hasse_examples():
    assert hasse_weight(PELDatum(3, (_self_dual(1),))) == 2
    assert hasse_weight(PELDatum(3, (_self_dual(1), _self_dual(2)))) == 8
    assert hasse_weight(PELDatum(3, (_self_dual(1), _self_dual(2), _self_dual(3)))) == 104
    for p in (3, 5, 7, 11):
        assert hasse_weight(PELDatum(p, (_self_dual(1), _self_dual(1)))) == p - 1


def test_gr_ranks_example():
    ranks = gr_ranks(Orbit(2, 3, (1, 2)))
    assert ranks[(1, 0)] == 1
    assert ranks[(2, 0)] == 2
    assert ranks[(2, 1)] == 1
    assert all(r == 0 for (i, j), r in ranks.items() if i <= j)


def test_gr_ranks_constant_type():
    for e, n, c in [(2, 3, 1), (3, 4, 2), (1, 5, 3)]:
        ranks = gr_ranks(Orbit(e, n, (c,) * e))
        assert ranks[(1, 0)] == c * (n - c) * e


def test_gr_conservation_sampled():
    for e, n in [(2, 3), (3, 2)]:
        for f in itertools.product(range(n + 1), repeat=e):
            o = Orbit(e, n, f)
            total = sum(r for (i, j), r in gr_ranks(o).items() if j < i)
            assert total == moonen_parameter_count(o)


def test_moonen_count():
    assert moonen_parameter_count(Orbit(2, 3, (0, 0))) == 0
    assert moonen_parameter_count(Orbit(2, 3, (1, 2))) == 4


def test_cascade_standard_example():
    pieces = cascade(Orbit(2, 3, (1, 2)))
    kinds = {(p.slope_high, p.slope_low): p.kind for p in pieces}
    assert kinds == {
        (1, 0): KIND_LUBIN_TATE,
        (2, 0): KIND_MULTIPLICATIVE,
        (2, 1): KIND_LUBIN_TATE,
    }
    dims = {(p.slope_high, p.slope_low): (p.dimension, p.height, p.multiplicity) for p in pieces}
    assert dims[(2, 0)] == (2, 2, 1)


def test_cascade_no_multiplicative_when_type_hits_n():
    pieces = cascade(Orbit(2, 3, (2, 3)))
    assert all(p.kind != KIND_MULTIPLICATIVE for p in pieces)
    assert 0 not in newton_slopes(Orbit(2, 3, (2, 3))).distinct()


def test_cascade_constant_type_is_multiplicative():
    for e, n, c in [(2, 3, 1), (3, 4, 2)]:
        pieces = cascade(Orbit(e, n, (c,) * e))
        assert len(pieces) == 1
        assert pieces[0].kind in (KIND_MULTIPLICATIVE, KIND_LUBIN_TATE)
        assert pieces[0].slope_high == e and pieces[0].slope_low == 0
        if e > 1:
            assert pieces[0].kind == KIND_MULTIPLICATIVE


def test_cascade_general_kind():
    # slopes 0, 2 with e = 3: neither adjacent nor the full (0, e) pair
    o = Orbit(3, 3, (2, 2, 0))
    slopes = newton_slopes(o).distinct()
    pieces = cascade(o)
    if 0 in slopes and o.e not in slopes:
        assert any(p.kind == KIND_GENERAL for p in pieces)


def test_cascade_self_dual_diagonal():
    pieces = cascade(Orbit(2, 2, (1, 1), self_dual=True), orbit_index=5)
    assert len(pieces) == 1
    piece = pieces[0]
    assert piece.kind == KIND_SELF_DUAL_DIAGONAL
    assert (piece.slope_high, piece.slope_low) == (2, 0)
    assert piece.orbit_index == 5


def test_cascade_self_dual_four_slopes():
    # conjugation rotates by 2: f = (3, 2, 1, 2) pairs with n - f = (1, 2, 3, 2)
    o = Orbit(4, 4, (3, 2, 1, 2), self_dual=True)
    slopes = newton_slopes(o)
    assert slopes.distinct() == (0, 1, 3, 4)
    assert levi_shape(o) == (1, 1)
    pieces = cascade(o)
    by_kind = {}
    for p in pieces:
        by_kind.setdefault(p.kind, []).append((p.slope_high, p.slope_low))
    assert sorted(by_kind[KIND_SELF_DUAL_DIAGONAL]) == [(3, 1), (4, 0)]
    assert by_kind[KIND_LUBIN_TATE] == [(1, 0)]
    # no piece crosses from the lower half except through duality
    assert len(pieces) == 3


def test_is_ordinary():
    assert is_ordinary(Orbit(1, 4, (2,)))
    assert not is_ordinary(Orbit(2, 3, (1, 2)))
    assert is_ordinary(Orbit(3, 4, (2, 2, 2)))


def test_orbit_validation():
    with pytest.raises(DatumError):
        Orbit(2, 3, (1,))
    with pytest.raises(DatumError):
        Orbit(1, 3, (4,))
    with pytest.raises(DatumError):
        Orbit(2, 3, (1, 1), self_dual=True)  # n - f = (2, 2), no rotation works
    assert Orbit(2, 4, (1, 3), self_dual=True).dual_rotation() == 1


def test_datum_validation():
    a = Orbit(1, 3, (2,))
    b = Orbit(1, 3, (1,))
    datum = PELDatum(3, (a, b), (1, 0))
    assert datum.representatives() == (0,)
    assert datum.conjugate(0, 0) == (1, 0)
    with pytest.raises(DatumError):
        PELDatum(3, (a, b), (1, None))
    with pytest.raises(DatumError):
        PELDatum(3, (a, a), (1, 0))  # partner type must be n - f
    with pytest.raises(DatumError):
        PELDatum(4, (a, b), (1, 0))  # p must be an odd prime
    with pytest.raises(DatumError):
        PELDatum(3, (a, b), (1, 0), labels=("x", "x"))


def test_conjugate_self_dual_rotation():
    o = Orbit(2, 4, (1, 3), self_dual=True)
    datum = PELDatum(3, (o,))
    assert datum.conjugate(0, 0) == (0, 1)
    assert datum.conjugate(0, 1) == (0, 0)


def test_cascade_inventory_uses_representatives():
    a = Orbit(1, 3, (2,))
    b = Orbit(1, 3, (1,))
    datum = PELDatum(3, (a, b, _self_dual(2)), (1, 0, None))
    pieces = cascade_inventory(datum)
    assert {p.orbit_index for p in pieces} == {0, 2}


def test_polygon_type_validation():
    with pytest.raises(DatumError):
        NewtonPolygon(((1, 1), (1, 2)))
    with pytest.raises(DatumError):
        NewtonPolygon(((0, 0),))
