import itertools

import pytest

from muordinary import (
    DominantWeight,
    InvalidWeight,
    LeviWeight,
    NotSimple,
    Orbit,
    PELDatum,
    ShapeMismatch,
    SlopeEHalf,
    char_congruent,
    classify,
    classify_levi,
    dominant_dim,
    dual_orbit,
    embed_in_dominant,
    is_multiplicity_free,
    is_simple,
    levi_dim,
    restrict_to_levi,
    scalar_weight,
    simple_report,
    theta_hypotheses,
    weights_coprime,
    zero_levi_weight,
)
from muordinary.weights import visible_block_sizes


def pair_datum(p, e, n, f):
    o = Orbit(e, n, tuple(f))
    return PELDatum(p, (o, dual_orbit(o)), (1, 0))


STAIRCASE = pair_datum(3, 2, 4, (3, 2))  # blocks (2, 1) at the type-3 embedding
SMALL = pair_datum(3, 2, 2, (2, 1))  # blocks (1, 1) at the type-2 embedding


def weight_at_first_slot(datum, entries):
    """Dominant weight with the given tuple at orbit 0, position 0, zero
    elsewhere."""
    full = []
    for oi, o in enumerate(datum.orbits):
        per = []
        for pos in range(o.e):
            if (oi, pos) == (0, 0):
                per.append(tuple(entries))
            else:
                per.append((0,) * o.f[pos])
        full.append(tuple(per))
    return DominantWeight(datum, tuple(full))


def test_visible_blocks():
    assert visible_block_sizes(STAIRCASE, 0, 0) == (2, 1)
    assert visible_block_sizes(STAIRCASE, 0, 1) == (2,)
    assert visible_block_sizes(STAIRCASE, 1, 0) == (1,)
    assert visible_block_sizes(STAIRCASE, 1, 1) == (1, 1)
    assert visible_block_sizes(SMALL, 0, 0) == (1, 1)


def test_classify_zero_weight():
    w = scalar_weight(STAIRCASE, 0)
    rep = classify(w)
    assert rep.positive and rep.scalar and rep.sum_symmetric and rep.symmetric
    assert rep.total_degree == 0 and rep.depth == 0


def test_classify_sum_symmetric_not_symmetric():
    datum = pair_datum(3, 1, 3, (2,))
    w = DominantWeight(datum, (((1, 1),), ((2,),)))
    rep = classify(w)
    assert rep.positive and not rep.scalar
    assert rep.sum_symmetric and rep.total_degree == 4 and rep.depth == 2
    assert not rep.symmetric


def test_classify_symmetric():
    datum = pair_datum(3, 1, 4, (2,))
    w = DominantWeight(datum, (((1, 0),), ((1, 0),)))
    rep = classify(w)
    assert rep.symmetric and rep.sum_symmetric and rep.depth == 1


def test_classify_negative_weight_not_positive():
    datum = pair_datum(3, 1, 2, (1,))
    w = DominantWeight(datum, (((-1,),), ((0,),)))
    rep = classify(w)
    assert not rep.positive and not rep.sum_symmetric


def test_scalar_restricts_to_singleton():
    for k in (0, 1, 3):
        w = scalar_weight(STAIRCASE, k)
        dec = restrict_to_levi(w)
        assert len(dec) == 1
        lw, mult = dec.components[0]
        assert mult == 1
        assert set(lw.flat()) <= {k}


def test_restriction_staircase_example():
    w = weight_at_first_slot(STAIRCASE, (2, 1, 0))
    dec = restrict_to_levi(w)
    assert len(dec) == 4
    assert dec.is_multiplicity_free()
    firsts = sorted(lw.at(0, 0) for lw, _ in dec.components)
    assert firsts == [
        ((1, 0), (2,)),
        ((1, 1), (1,)),
        ((2, 0), (1,)),
        ((2, 1), (0,)),
    ]
    assert dec.total_dimension() == dominant_dim(w) == 8


def test_restriction_product_structure():
    o = Orbit(2, 2, (2, 1))
    datum = PELDatum(
        3,
        (o, dual_orbit(o), o, dual_orbit(o)),
        (1, 0, 3, 2),
    )
    entries = []
    for oi, orb in enumerate(datum.orbits):
        per = []
        for pos in range(orb.e):
            per.append((1, 0) if (oi in (0, 2) and pos == 0) else (0,) * orb.f[pos])
        entries.append(tuple(per))
    w = DominantWeight(datum, tuple(entries))
    dec = restrict_to_levi(w)
    assert len(dec) == 4  # two components at each of the two marked slots
    assert all(mult == 1 for _, mult in dec.components)


def test_multiplicity_free_examples():
    assert is_multiplicity_free(scalar_weight(STAIRCASE, 2))
    assert is_multiplicity_free(weight_at_first_slot(STAIRCASE, (2, 1, 0)))
    datum = pair_datum(3, 2, 4, (4, 2))  # blocks (2, 2) at the type-4 embedding
    assert visible_block_sizes(datum, 0, 0) == (2, 2)
    w = weight_at_first_slot(datum, (3, 2, 1, 0))
    assert not is_multiplicity_free(w)
    dec = restrict_to_levi(w)
    assert max(mult for _, mult in dec.components) == 2


def test_weights_coprime():
    w1 = weight_at_first_slot(SMALL, (2, 0))
    w2 = weight_at_first_slot(SMALL, (1, 1))
    w3 = weight_at_first_slot(SMALL, (1, 0))
    assert not weights_coprime(w1, w2)  # both contain the component ((1),(1))
    assert weights_coprime(w1, w3)  # degrees 2 vs 1
    assert not weights_coprime(w1, w1)
    with pytest.raises(InvalidWeight):
        neg = DominantWeight(
            SMALL,
            (((-1, -1), (0,)), ((0,), (0, 0))),
        )
        weights_coprime(neg, w1)


def test_restriction_propagates_middle_slope_rejection():
    bad = Orbit(2, 2, (0, 2), self_dual=True)
    datum = PELDatum(3, (bad,))
    w = scalar_weight(datum, 0)
    with pytest.raises(SlopeEHalf):
        restrict_to_levi(w)


# --- simple weights -----------------------------------------------------------


def make_levi(datum, assign):
    """LeviWeight with given per-(orbit, pos, block) tuples, zero elsewhere."""
    blocks = []
    for oi, o in enumerate(datum.orbits):
        per_orbit = []
        for pos in range(o.e):
            sizes = visible_block_sizes(datum, oi, pos)
            per_pos = []
            for bi, size in enumerate(sizes):
                per_pos.append(tuple(assign.get((oi, pos, bi), (0,) * size)))
            per_orbit.append(tuple(per_pos))
        blocks.append(tuple(per_orbit))
    return LeviWeight(datum, tuple(blocks))


def test_zero_weight_is_simple():
    assert is_simple(zero_levi_weight(STAIRCASE))


def test_simple_requires_zero_on_unsupported_orbits():
    datum = pair_datum(3, 1, 3, (3,))  # type hits n
    w = make_levi(datum, {(0, 0, 0): (1, 1, 1)})
    ok, failures = simple_report(w)
    assert not ok
    assert any("touches type 0 or n" in f for f in failures)


def test_simple_staircase():
    # free block (highest slope) nonzero, tied across the dual pair
    w = make_levi(
        STAIRCASE,
        {
            (0, 0, 0): (2, 1),
            (0, 1, 0): (3, 0),
            (1, 0, 0): (2,),
            (1, 1, 0): (3,),
        },
    )
    assert is_simple(w)
    bad = make_levi(STAIRCASE, {(0, 0, 1): (1,)})
    ok, failures = simple_report(bad)
    assert not ok and any("must vanish" in f for f in failures)


def test_simple_free_block_convention():
    w = make_levi(
        STAIRCASE,
        {
            (0, 0, 1): (2,),
            (0, 1, 0): (1, 1),
            (1, 1, 1): (1,),
            (1, 0, 0): (0,),
        },
    )
    # symmetric pairing forces the type-3 embedding's low block against the
    # dual orbit's single block
    assert not is_simple(w, "high")
    low_ok, _ = simple_report(w, "low")
    assert not low_ok  # still fails symmetry: entry 2 at (0,1) vs (1,1)
    w2 = make_levi(
        STAIRCASE,
        {(0, 0, 1): (2,), (0, 1, 0): (1, 0), (1, 1, 1): (1,)},
    )
    assert is_simple(w2, "low") != is_simple(w2, "high")


def _enumerate_levi_weights(datum, max_entry):
    per_block_choices = []
    slots = []
    for oi, o in enumerate(datum.orbits):
        for pos in range(o.e):
            for bi, size in enumerate(visible_block_sizes(datum, oi, pos)):
                slots.append((oi, pos, bi))
                per_block_choices.append(
                    list(
                        itertools.combinations_with_replacement(
                            range(max_entry, -1, -1), size
                        )
                    )
                )
    for combo in itertools.product(*per_block_choices):
        yield make_levi(datum, dict(zip(slots, combo)))


def test_simple_implies_sum_symmetric_dominant():
    count = 0
    for datum in (SMALL, STAIRCASE):
        for w in _enumerate_levi_weights(datum, 2):
            if not is_simple(w):
                continue
            count += 1
            emb = embed_in_dominant(w)  # raises if not dominant
            assert classify(emb).sum_symmetric
    assert count > 10


def test_levi_dim_and_concat():
    w = make_levi(STAIRCASE, {(0, 0, 0): (2, 1)})
    assert w.concat(0, 0) == (2, 1, 0)
    assert levi_dim(w) == 3  # dim of (2,1) in GL_2, everything else trivial


# --- torus characters ----------------------------------------------------------


def test_char_congruent_examples():
    datum = pair_datum(3, 1, 2, (1,))
    w1, w7 = scalar_weight(datum, 1), scalar_weight(datum, 7)
    assert char_congruent(w1, w1, 2)
    assert char_congruent(w1, w7, 2)  # 6 = order of units mod 9
    assert not char_congruent(w1, w7, 3)
    datum5 = pair_datum(5, 1, 2, (1,))
    assert not char_congruent(scalar_weight(datum5, 1), scalar_weight(datum5, 3), 1)


def test_char_congruent_levi_weights():
    w1 = make_levi(SMALL, {(0, 0, 0): (2,)})
    w2 = make_levi(SMALL, {(0, 0, 0): (8,)})
    assert char_congruent(w1, w2, 1)
    assert not char_congruent(w1, w2, 2)


# --- hypotheses ----------------------------------------------------------------


def simple_pair(datum, a, b):
    w1 = make_levi(
        datum,
        {(0, 0, 0): (a, a), (0, 1, 0): (a, 0), (1, 0, 0): (a,), (1, 1, 0): (a,)},
    )
    w2 = make_levi(
        datum,
        {(0, 0, 0): (b, b), (0, 1, 0): (b, 0), (1, 0, 0): (b,), (1, 1, 0): (b,)},
    )
    return w1, w2


def test_theta_hypotheses_equal_weights():
    w1, w2 = simple_pair(STAIRCASE, 3, 3)
    for m in (1, 2, 5):
        assert theta_hypotheses(w1, w2, m).ok


def test_theta_hypotheses_congruent_pair():
    w1, w2 = simple_pair(STAIRCASE, 2, 8)
    assert theta_hypotheses(w1, w2, 1).ok
    report = theta_hypotheses(w1, w2, 2)
    assert not report.ok
    assert any("differ mod" in f for f in report.failures)


def test_theta_hypotheses_minimum_condition():
    # 0 vs 6 is congruent mod 6 but the last entry fails min > m
    w1, w2 = simple_pair(STAIRCASE, 0, 6)
    report = theta_hypotheses(w1, w2, 1)
    assert not report.ok
    assert any("last entry" in f for f in report.failures)


def test_theta_hypotheses_rejects_non_simple():
    w1, _ = simple_pair(STAIRCASE, 2, 2)
    bad = make_levi(STAIRCASE, {(0, 0, 1): (4,)})
    with pytest.raises(NotSimple):
        theta_hypotheses(w1, bad, 1)


# --- shapes --------------------------------------------------------------------


def test_weight_shape_validation():
    with pytest.raises(ShapeMismatch):
        DominantWeight(SMALL, (((1, 2), (0,)), ((0,), (0, 0))))  # increasing
    with pytest.raises(ShapeMismatch):
        DominantWeight(SMALL, (((1,), (0,)), ((0,), (0, 0))))  # wrong length
    with pytest.raises(ShapeMismatch):
        LeviWeight(SMALL, ((((1, 0),), ((0,),)), (((0,),), ((0,), (0,)))))


def test_classify_levi_matches_concat():
    w = make_levi(STAIRCASE, {(0, 0, 0): (1, 1), (1, 0, 0): (1,)})
    rep = classify_levi(w)
    assert rep.degrees[(0, 0)] == 2 and rep.degrees[(1, 0)] == 1
