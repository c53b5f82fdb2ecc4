"""Differential operators on truncated expansions, and their measures.

The operator attached to a simple weight acts coordinate by coordinate as a
power of (1+u) d/du.  On the binomial basis (1+u)^a this is multiplication
by a^k, which is what makes the congruence and measure statements exactly
checkable at finite precision: (1+u) d/du never raises the total degree, so
no truncation error enters.

Each multiplicative coordinate is driven by one entry of the free block of
the simple weight, through an explicit CoordinateAssignment.
"""

import itertools
from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .errors import (
    AssignmentError,
    HypothesisError,
    MeasureError,
    NotSimple,
    PrecisionError,
)
from .padics import (
    BinomialVector,
    PrecisionContext,
    UExpansion,
    binomial_to_series,
    series_add,
    series_congruent,
    series_scale,
)
from .shimura import PELDatum
from .weights import (
    FREE_BLOCK_HIGH,
    LeviWeight,
    free_block_entries,
    free_block_position,
    orbit_supported,
    simple_report,
    theta_hypotheses,
    visible_block_sizes,
)

Seed = Union[UExpansion, BinomialVector]


def theta_coordinate(f: UExpansion, label: str) -> UExpansion:
    """Apply (1+u) d/du in the named coordinate.

    Sends u^k to k u^{k-1} + k u^k, hence never raises the degree: the
    result is exact, not merely exact up to truncation.
    """
    axis = f.ctx.axis(label)
    mod = f.ctx.modulus
    out: dict[tuple, int] = {}
    for exps, c in f.items():
        k = exps[axis]
        if k == 0:
            continue
        kc = (k * c) % mod
        down = exps[:axis] + (k - 1,) + exps[axis + 1:]
        out[down] = (out.get(down, 0) + kc) % mod
        out[exps] = (out.get(exps, 0) + kc) % mod
    res = UExpansion.zero(f.ctx)
    res._coeffs.update({k: v for k, v in out.items() if v})
    return res


def theta_apply(f: UExpansion, exponents: Mapping[str, int]) -> UExpansion:
    """Apply the product over coordinates of ((1+u) d/du)^k.

    Operators in distinct coordinates commute, so the application order is
    immaterial.
    """
    out = f
    for label in f.ctx.coords:
        for _ in range(exponents.get(label, 0)):
            out = theta_coordinate(out, label)
    return out


def theta_binomial(v: BinomialVector, exponents: Mapping[str, int]) -> BinomialVector:
    """The same operator on the binomial basis: each term (1+u)^a picks up
    the eigenvalue prod_c a_c^{k_c}."""
    ctx = v.ctx
    mod = ctx.modulus
    ks = [exponents.get(label, 0) for label in ctx.coords]
    factors = {}
    for _, a in v.terms:
        val = 1
        for ac, kc in zip(a, ks):
            val = (val * pow(ac, kc, mod)) % mod
        factors[a] = val
    return v.scaled_exponents(factors)


@dataclass(frozen=True)
class CoordinateAssignment:
    """Which free-block weight entry drives each multiplicative coordinate.

    slots maps every coordinate label to (orbit index, entry index), where
    the entry index points into the orbit's flattened free-block entries.
    Only orbits whose type avoids 0 and n may own coordinates.
    """

    ctx: PrecisionContext
    datum: PELDatum
    slots: tuple[tuple[str, int, int], ...]
    free_block: str = FREE_BLOCK_HIGH

    def __post_init__(self):
        object.__setattr__(
            self, "slots", tuple((str(l), int(oi), int(ei)) for l, oi, ei in self.slots)
        )
        labels = [l for l, _, _ in self.slots]
        if sorted(labels) != sorted(self.ctx.coords):
            raise AssignmentError(
                "assignment must cover every context coordinate exactly once"
            )
        for label, oi, ei in self.slots:
            if not (0 <= oi < len(self.datum.orbits)):
                raise AssignmentError(f"slot {label!r} names orbit {oi}, out of range")
            if not orbit_supported(self.datum, oi):
                raise AssignmentError(
                    f"slot {label!r} names orbit {self.datum.labels[oi]}, whose type "
                    "touches 0 or n; such orbits carry no multiplicative coordinates"
                )
            count = self._entry_count(oi)
            if not (0 <= ei < count):
                raise AssignmentError(
                    f"slot {label!r} entry index {ei} out of range (orbit has {count})"
                )

    def _entry_count(self, oi: int) -> int:
        o = self.datum.orbits[oi]
        total = 0
        for pos in range(o.e):
            sizes = visible_block_sizes(self.datum, oi, pos)
            total += sizes[free_block_position(self.datum, oi, pos, self.free_block)]
        return total

    def exponents_for(self, w: LeviWeight) -> dict[str, int]:
        if w.datum != self.datum:
            raise AssignmentError("weight and assignment live over different data")
        cache = {}
        out = {}
        for label, oi, ei in self.slots:
            if oi not in cache:
                cache[oi] = free_block_entries(w, oi, self.free_block)
            out[label] = cache[oi][ei]
        return out


@dataclass(frozen=True)
class ThetaOperator:
    """A fixed monomial in the coordinate operators."""

    assignment: CoordinateAssignment
    exponents: tuple[int, ...]  # aligned with ctx.coords

    def __post_init__(self):
        if len(self.exponents) != self.assignment.ctx.ncoords:
            raise AssignmentError("one exponent per coordinate required")
        if any(k < 0 for k in self.exponents):
            raise AssignmentError("operator exponents must be nonnegative")

    @classmethod
    def from_weight(cls, w: LeviWeight, assignment: CoordinateAssignment) -> "ThetaOperator":
        ok, why = simple_report(w, assignment.free_block)
        if not ok:
            raise NotSimple("; ".join(why))
        exps = assignment.exponents_for(w)
        return cls(assignment, tuple(exps[l] for l in assignment.ctx.coords))

    def exponent_map(self) -> dict[str, int]:
        return dict(zip(self.assignment.ctx.coords, self.exponents))

    def apply(self, f: Seed) -> Seed:
        if isinstance(f, BinomialVector):
            return theta_binomial(f, self.exponent_map())
        return theta_apply(f, self.exponent_map())


def theta_simple(f: Seed, w: LeviWeight, assignment: CoordinateAssignment) -> Seed:
    """Apply the operator attached to a simple weight.

    UExpansion input goes through the differential operators; BinomialVector
    input goes through the eigenvalue action.
    """
    return ThetaOperator.from_weight(w, assignment).apply(f)


def verify_theta_congruence(
    f: Seed,
    w1: LeviWeight,
    w2: LeviWeight,
    m: int,
    assignment: CoordinateAssignment,
) -> bool:
    """Check theta(w1) f = theta(w2) f mod p^{m+1} after validating the
    hypotheses of the congruence statement.

    A hypothesis failure raises HypothesisError (with the report); a False
    return therefore signals a genuine congruence failure, which the
    underlying statement rules out.
    """
    report = theta_hypotheses(w1, w2, m, assignment.free_block)
    if not report.ok:
        raise HypothesisError(
            "congruence hypotheses fail: " + "; ".join(report.failures),
            failures=report.failures,
        )
    ctx = assignment.ctx
    if ctx.prec < m + 1:
        raise PrecisionError(
            f"verifying a congruence mod p^{m + 1} needs prec >= {m + 1}, have {ctx.prec}"
        )
    if isinstance(f, BinomialVector):
        f = binomial_to_series(f)
    g1 = theta_simple(f, w1, assignment)
    g2 = theta_simple(f, w2, assignment)
    return series_congruent(g1, g2, m + 1)


@dataclass(frozen=True)
class MeasureHandle:
    """A series (or binomial vector) designated as the seed of a measure on
    the unit-group torus: its moments are the operator images."""

    seed: Seed


def moment(h: MeasureHandle, w: LeviWeight, assignment: CoordinateAssignment) -> Seed:
    """The moment of the measure against a simple weight: the operator image
    of the seed.  The zero weight returns the seed itself (total mass)."""
    return theta_simple(h.seed, w, assignment)


@dataclass(frozen=True)
class KummerResult:
    """Outcome of a Kummer-congruence check.

    hypothesis_met records whether the pointwise sum vanished mod p^m on
    every unit tuple; conclusion is the moment-sum congruence, or None when
    the hypothesis already failed.
    """

    hypothesis_met: bool
    conclusion: Optional[bool]


def _unit_residues(p: int, m: int) -> list[int]:
    pm = p ** m
    return [a for a in range(1, pm) if a % p != 0]


def kummer_check(
    h: MeasureHandle,
    terms: list[tuple[int, LeviWeight]],
    m: int,
    assignment: CoordinateAssignment,
) -> KummerResult:
    """Abstract Kummer congruence at finite level.

    The seed must be a binomial vector all of whose exponents are prime to
    p (the measure lives on units).  First the hypothesis
    sum_i c_i * g^{w_i} = 0 mod p^m is checked on every unit tuple g mod
    p^m; if it holds, the same combination of moments is asserted to vanish
    mod p^m.
    """
    seed = h.seed
    if not isinstance(seed, BinomialVector):
        raise MeasureError("Kummer checks need a binomial-vector seed")
    ctx = assignment.ctx
    if m < 1:
        raise ValueError("congruence exponent must be at least 1")
    if m > ctx.prec:
        raise PrecisionError(f"checking mod p^{m} needs prec >= {m}, have {ctx.prec}")
    for _, a in seed.terms:
        if any(x % ctx.p == 0 for x in a):
            raise MeasureError(
                f"seed exponents {a} are not all units at p={ctx.p}"
            )

    ops = [(c, ThetaOperator.from_weight(w, assignment)) for c, w in terms]
    pm = ctx.p ** m
    units = _unit_residues(ctx.p, m)
    for g in itertools.product(units, repeat=ctx.ncoords):
        total = 0
        for c, op in ops:
            val = c
            for gc, kc in zip(g, op.exponents):
                val = (val * pow(gc, kc, pm)) % pm
            total = (total + val) % pm
        if total % pm != 0:
            return KummerResult(hypothesis_met=False, conclusion=None)

    combined = UExpansion.zero(ctx)
    for c, op in ops:
        combined = series_add(
            combined, series_scale(binomial_to_series(op.apply(seed)), c)
        )
    holds = series_congruent(combined, UExpansion.zero(ctx), m)
    return KummerResult(hypothesis_met=True, conclusion=holds)
