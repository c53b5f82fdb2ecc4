import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from muordinary import (
    BinomialVector,
    ContextMismatch,
    PrecisionContext,
    PrecisionError,
    UExpansion,
    binomial_to_series,
    series_add,
    series_congruent,
    series_mul,
    series_scale,
)
from muordinary.serialize import series_from_dict, series_to_dict

CTX = PrecisionContext(3, 2, 4, ("u1", "u2"))


def mono(ctx, exps, c=1):
    return UExpansion.monomial(ctx, exps, c)


def test_add_identity():
    z = UExpansion.zero(CTX)
    assert series_add(z, z) == z
    f = mono(CTX, (1, 0))
    assert series_add(f, UExpansion.one(CTX)) == UExpansion(CTX, {(1, 0): 1, (0, 0): 1})


def test_add_reduces_mod_p_prec():
    ctx = PrecisionContext(3, 2, 2, ("u",))
    f = UExpansion(ctx, {(2,): 5})
    g = UExpansion(ctx, {(2,): 7})
    assert series_add(f, g) == UExpansion(ctx, {(2,): 3})  # 12 mod 9


def test_mul_identity_and_square():
    f = UExpansion(CTX, {(1, 0): 2, (0, 1): 1, (0, 0): 5})
    assert series_mul(f, UExpansion.one(CTX)) == f
    ctx = PrecisionContext(5, 1, 2, ("u",))
    q = UExpansion(ctx, {(0,): 1, (1,): 1})
    assert series_mul(q, q) == UExpansion(ctx, {(0,): 1, (1,): 2, (2,): 1})


def test_mul_truncates():
    ctx = PrecisionContext(3, 1, 1, ("u",))
    q = UExpansion(ctx, {(0,): 1, (1,): 1})
    assert series_mul(q, q) == UExpansion(ctx, {(0,): 1, (1,): 2})


def test_context_mismatch():
    other = PrecisionContext(3, 2, 4, ("v1", "v2"))
    with pytest.raises(ContextMismatch):
        series_add(UExpansion.zero(CTX), UExpansion.zero(other))


def test_binomial_expansion_basics():
    ctx = PrecisionContext(3, 2, 2, ("u",))
    assert binomial_to_series(BinomialVector(ctx, [(1, (0,))])) == UExpansion.one(ctx)
    sq = binomial_to_series(BinomialVector(ctx, [(1, (2,))]))
    assert sq == UExpansion(ctx, {(0,): 1, (1,): 2, (2,): 1})
    fourth = binomial_to_series(BinomialVector(ctx, [(1, (4,))]))
    assert fourth == UExpansion(ctx, {(0,): 1, (1,): 4, (2,): 6})


def test_binomial_exponent_sum_is_product():
    ctx = PrecisionContext(5, 2, 5, ("u",))
    for a in range(7):
        for b in range(7):
            fa = binomial_to_series(BinomialVector(ctx, [(1, (a,))]))
            fb = binomial_to_series(BinomialVector(ctx, [(1, (b,))]))
            fab = binomial_to_series(BinomialVector(ctx, [(1, (a + b,))]))
            assert series_mul(fa, fb) == fab


def test_binomial_linearity():
    ctx = PrecisionContext(3, 2, 3, ("u",))
    v = BinomialVector(ctx, [(2, (1,)), (5, (3,))])
    direct = binomial_to_series(v)
    split = series_add(
        series_scale(binomial_to_series(BinomialVector(ctx, [(1, (1,))])), 2),
        series_scale(binomial_to_series(BinomialVector(ctx, [(1, (3,))])), 5),
    )
    assert direct == split


def test_congruence_examples():
    ctx = PrecisionContext(3, 2, 1, ("u",))
    f = UExpansion(ctx, {(1,): 3})
    z = UExpansion.zero(ctx)
    assert series_congruent(f, z, 1)
    assert not series_congruent(f, z, 2)
    ctx5 = PrecisionContext(5, 1, 0, ("u",))
    assert series_congruent(
        UExpansion.constant(ctx5, 1), UExpansion.constant(ctx5, 6), 1
    )


def test_congruence_precision_error():
    f = UExpansion.zero(CTX)
    with pytest.raises(PrecisionError):
        series_congruent(f, f, CTX.prec + 1)


def test_invalid_construction():
    with pytest.raises(ValueError):
        UExpansion(CTX, {(1,): 1})  # wrong arity
    with pytest.raises(ValueError):
        UExpansion(CTX, {(3, 2): 1})  # degree 5 > 4
    with pytest.raises(ValueError):
        PrecisionContext(4, 1, 1, ("u",))
    with pytest.raises(ValueError):
        PrecisionContext(3, 1, 1, ("u", "u"))


small_series = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)).filter(lambda e: sum(e) <= 4),
    st.integers(-20, 20),
    max_size=6,
).map(lambda d: UExpansion(CTX, d))


@settings(max_examples=150, deadline=None)
@given(small_series, small_series, small_series)
def test_ring_axioms(f, g, h):
    assert series_add(f, g) == series_add(g, f)
    assert series_mul(f, g) == series_mul(g, f)
    assert series_add(series_add(f, g), h) == series_add(f, series_add(g, h))
    assert series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h))
    assert series_mul(f, series_add(g, h)) == series_add(
        series_mul(f, g), series_mul(f, h)
    )


@settings(max_examples=100, deadline=None)
@given(small_series, small_series, st.integers(0, 2))
def test_congruence_is_difference_to_zero(f, g, m):
    lhs = series_congruent(f, g, m)
    rhs = series_congruent(f - g, UExpansion.zero(CTX), m)
    assert lhs == rhs


def test_series_round_trip():
    f = UExpansion(CTX, {(1, 2): 7, (0, 0): 3, (2, 0): 1})
    data = series_to_dict(f)
    assert series_from_dict(data) == f
    # canonical ordering: terms sorted by exponent vector
    assert data["terms"] == sorted(data["terms"])
