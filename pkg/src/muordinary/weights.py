"""Dominant weights shaped by a PEL datum, and their restriction theory.

A DominantWeight stores one non-increasing tuple per embedding, of length
equal to the signature there.  A LeviWeight stores, per embedding, one
tuple per visible slope block (highest slope first).  Restriction from the
full Levi to the slope centralizer is the per-embedding iterated
Littlewood-Richardson branching, combined multiplicatively across
embeddings.

The classification predicates (positive / scalar / sum-symmetric /
symmetric / simple) and the torus-character congruence tests live here as
well, since they are conditions on the same weight data.
"""

import itertools
from dataclasses import dataclass
from math import prod
from typing import Optional

from . import lr
from .errors import InvalidWeight, NotSimple, ShapeMismatch
from .shimura import PELDatum, levi_shape, slope_decomposition

FREE_BLOCK_HIGH = "high"
FREE_BLOCK_LOW = "low"


def visible_block_indices(datum: PELDatum, oi: int, pos: int) -> tuple[int, ...]:
    """Slope indices of the blocks seen at one embedding, highest first.

    An embedding of type value F_i sees the blocks i..s, whose sizes sum to
    exactly its signature.
    """
    o = datum.orbits[oi]
    dec = slope_decomposition(o)
    i_tau = dec.F.index(o.f[pos])
    return tuple(range(dec.s, i_tau - 1, -1))


def visible_block_sizes(datum: PELDatum, oi: int, pos: int) -> tuple[int, ...]:
    o = datum.orbits[oi]
    dec = slope_decomposition(o)
    return tuple(dec.mults[t] for t in visible_block_indices(datum, oi, pos))


@dataclass(frozen=True)
class DominantWeight:
    """Per-embedding non-increasing integer tuples, entries[orbit][position]."""

    datum: PELDatum
    entries: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        entries = tuple(
            tuple(tuple(t) for t in per_orbit) for per_orbit in self.entries
        )
        object.__setattr__(self, "entries", entries)
        if len(entries) != len(self.datum.orbits):
            raise ShapeMismatch("one entry group per orbit required")
        for oi, o in enumerate(self.datum.orbits):
            if len(entries[oi]) != o.e:
                raise ShapeMismatch(
                    f"orbit {self.datum.labels[oi]} needs {o.e} embedding tuples"
                )
            for pos in range(o.e):
                t = entries[oi][pos]
                if len(t) != o.f[pos]:
                    raise ShapeMismatch(
                        f"tuple at {self.datum.labels[oi]}[{pos}] has length "
                        f"{len(t)}, signature demands {o.f[pos]}"
                    )
                if not lr.is_weakly_decreasing(t):
                    raise ShapeMismatch(
                        f"tuple at {self.datum.labels[oi]}[{pos}] is not non-increasing"
                    )

    def at(self, oi: int, pos: int) -> tuple[int, ...]:
        return self.entries[oi][pos]

    def flat(self) -> tuple[int, ...]:
        return tuple(
            x for per_orbit in self.entries for t in per_orbit for x in t
        )


def scalar_weight(datum: PELDatum, k: int) -> DominantWeight:
    return DominantWeight(
        datum,
        tuple(
            tuple((k,) * o.f[pos] for pos in range(o.e))
            for o in datum.orbits
        ),
    )


@dataclass(frozen=True)
class LeviWeight:
    """Per-embedding block weights, blocks[orbit][position][block].

    Blocks follow the visible slope indices in decreasing slope order; each
    block is non-increasing on its own, with no constraint across blocks.
    """

    datum: PELDatum
    blocks: tuple[tuple[tuple[tuple[int, ...], ...], ...], ...]

    def __post_init__(self):
        blocks = tuple(
            tuple(tuple(tuple(b) for b in per_pos) for per_pos in per_orbit)
            for per_orbit in self.blocks
        )
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) != len(self.datum.orbits):
            raise ShapeMismatch("one block group per orbit required")
        for oi, o in enumerate(self.datum.orbits):
            if len(blocks[oi]) != o.e:
                raise ShapeMismatch(
                    f"orbit {self.datum.labels[oi]} needs {o.e} embedding block lists"
                )
            for pos in range(o.e):
                sizes = visible_block_sizes(self.datum, oi, pos)
                got = blocks[oi][pos]
                if tuple(len(b) for b in got) != sizes:
                    raise ShapeMismatch(
                        f"blocks at {self.datum.labels[oi]}[{pos}] have sizes "
                        f"{tuple(len(b) for b in got)}, expected {sizes}"
                    )
                for b in got:
                    if not lr.is_weakly_decreasing(b):
                        raise ShapeMismatch(
                            f"block {b} at {self.datum.labels[oi]}[{pos}] is not non-increasing"
                        )

    def at(self, oi: int, pos: int) -> tuple[tuple[int, ...], ...]:
        return self.blocks[oi][pos]

    def concat(self, oi: int, pos: int) -> tuple[int, ...]:
        return tuple(x for b in self.blocks[oi][pos] for x in b)

    def concat_entries(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        return tuple(
            tuple(self.concat(oi, pos) for pos in range(o.e))
            for oi, o in enumerate(self.datum.orbits)
        )

    def flat(self) -> tuple[int, ...]:
        return tuple(
            x
            for per_orbit in self.blocks
            for per_pos in per_orbit
            for b in per_pos
            for x in b
        )

    def sort_key(self):
        return self.blocks


def zero_levi_weight(datum: PELDatum) -> LeviWeight:
    return LeviWeight(
        datum,
        tuple(
            tuple(
                tuple((0,) * size for size in visible_block_sizes(datum, oi, pos))
                for pos in range(o.e)
            )
            for oi, o in enumerate(datum.orbits)
        ),
    )


def embed_in_dominant(w: LeviWeight) -> DominantWeight:
    """Concatenate the blocks at each embedding into a full weight.

    Raises ShapeMismatch when the concatenation fails dominance, so a
    successful call certifies that the Levi weight is dominant for the full
    group as well.
    """
    return DominantWeight(w.datum, w.concat_entries())


# --- classification ---------------------------------------------------------


@dataclass(frozen=True)
class WeightClassReport:
    positive: bool
    scalar: bool
    sum_symmetric: bool
    symmetric: bool
    degrees: dict
    total_degree: int
    depth: Optional[int]


def _classify_entries(datum: PELDatum, entries) -> WeightClassReport:
    flat = [x for per_orbit in entries for t in per_orbit for x in t]
    positive = all(x >= 0 for x in flat)
    scalar = len(set(flat)) <= 1
    degrees = {
        (oi, pos): sum(entries[oi][pos])
        for oi, o in enumerate(datum.orbits)
        for pos in range(o.e)
    }
    total = sum(degrees.values())
    sum_symmetric = positive and all(
        degrees[(oi, pos)] == degrees[datum.conjugate(oi, pos)]
        for (oi, pos) in degrees
    )
    symmetric = sum_symmetric
    if symmetric:
        for oi, o in enumerate(datum.orbits):
            for pos in range(o.e):
                oj, pos2 = datum.conjugate(oi, pos)
                t1, t2 = entries[oi][pos], entries[oj][pos2]
                if any(a != b for a, b in zip(t1, t2)):
                    symmetric = False
                    break
            if not symmetric:
                break
    depth = None
    if sum_symmetric and total % 2 == 0:
        depth = total // 2
    return WeightClassReport(
        positive=positive,
        scalar=scalar,
        sum_symmetric=sum_symmetric,
        symmetric=symmetric,
        degrees=degrees,
        total_degree=total,
        depth=depth,
    )


def classify(w: DominantWeight) -> WeightClassReport:
    """Flags and degree data for a dominant weight of the full Levi."""
    return _classify_entries(w.datum, w.entries)


def classify_levi(w: LeviWeight) -> WeightClassReport:
    """Same flags, computed on the concatenated per-embedding tuples."""
    return _classify_entries(w.datum, w.concat_entries())


# --- restriction to the slope centralizer -----------------------------------


@dataclass(frozen=True)
class LRDecomposition:
    """The restriction multiset: (Levi weight, multiplicity) pairs, sorted
    lexicographically block-by-block for deterministic output."""

    weight: DominantWeight
    components: tuple[tuple[LeviWeight, int], ...]

    def multiplicity(self, w: LeviWeight) -> int:
        for lw, c in self.components:
            if lw == w:
                return c
        return 0

    def support(self) -> frozenset:
        return frozenset(lw for lw, _ in self.components)

    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for _, c in self.components)

    def total_dimension(self) -> int:
        return sum(c * levi_dim(lw) for lw, c in self.components)

    def __len__(self):
        return len(self.components)


def dominant_dim(w: DominantWeight) -> int:
    """Dimension of the irreducible representation of highest weight w."""
    return prod(
        lr.dim_irrep(w.at(oi, pos))
        for oi, o in enumerate(w.datum.orbits)
        for pos in range(o.e)
    )


def levi_dim(w: LeviWeight) -> int:
    return prod(
        lr.dim_irrep(b)
        for oi, o in enumerate(w.datum.orbits)
        for pos in range(o.e)
        for b in w.at(oi, pos)
    )


def restrict_to_levi(w: DominantWeight) -> LRDecomposition:
    """Branch w to the slope centralizer, embedding by embedding.

    Per embedding this is the iterated two-block LR restriction to the
    visible slope blocks; the per-embedding decompositions combine by
    Cartesian product with multiplied multiplicities.
    """
    datum = w.datum
    for o in datum.orbits:
        levi_shape(o)  # reject unsupported self-dual shapes before any work

    slots = datum.embeddings()
    per_slot = []
    for oi, pos in slots:
        sizes = visible_block_sizes(datum, oi, pos)
        per_slot.append(sorted(lr.restrict_to_blocks(w.at(oi, pos), sizes).items()))

    acc: dict = {}
    for combo in itertools.product(*per_slot):
        mult = prod(c for _, c in combo)
        nested: list[list] = [[None] * o.e for o in datum.orbits]
        for (oi, pos), (blocks, _) in zip(slots, combo):
            nested[oi][pos] = blocks
        key = LeviWeight(datum, tuple(tuple(per) for per in nested))
        acc[key] = acc.get(key, 0) + mult
    components = tuple(sorted(acc.items(), key=lambda kv: kv[0].sort_key()))
    return LRDecomposition(weight=w, components=components)


def is_multiplicity_free(w: DominantWeight) -> bool:
    return restrict_to_levi(w).is_multiplicity_free()


def weights_coprime(w1: DominantWeight, w2: DominantWeight) -> bool:
    """Whether the restriction multisets of two positive weights are disjoint.

    Weights of different total degree are coprime outright; otherwise the
    supports of the two decompositions are intersected.
    """
    if w1.datum != w2.datum:
        raise ShapeMismatch("weights live over different data")
    r1, r2 = classify(w1), classify(w2)
    if not (r1.positive and r2.positive):
        raise InvalidWeight("coprimality is defined for positive weights")
    if r1.total_degree != r2.total_degree:
        return True
    return not (restrict_to_levi(w1).support() & restrict_to_levi(w2).support())


# --- simple weights ----------------------------------------------------------


def orbit_supported(datum: PELDatum, oi: int) -> bool:
    """Whether the orbit's type avoids 0 and n everywhere (the orbits at
    which simple weights may be nonzero)."""
    o = datum.orbits[oi]
    return all(0 < x < o.n for x in o.f)


def free_block_position(datum: PELDatum, oi: int, pos: int, free_block: str) -> int:
    """Index, within the visible block list, of the one unconstrained block."""
    indices = visible_block_indices(datum, oi, pos)
    if free_block == FREE_BLOCK_HIGH:
        return 0
    if free_block == FREE_BLOCK_LOW:
        return len(indices) - 1
    raise ValueError(f"unknown free-block convention {free_block!r}")


def simple_report(w: LeviWeight, free_block: str = FREE_BLOCK_HIGH):
    """(is_simple, failure descriptions) for a Levi weight.

    Simple means: symmetric, zero on every orbit whose type touches 0 or n,
    and elsewhere zero outside the free block.  `free_block` selects which
    block is left unconstrained ("high" = highest slope, the default).
    """
    datum = w.datum
    failures = []
    if not classify_levi(w).symmetric:
        failures.append("weight is not symmetric")
    for oi, o in enumerate(datum.orbits):
        supported = orbit_supported(datum, oi)
        for pos in range(o.e):
            blocks = w.at(oi, pos)
            if not supported:
                if any(any(x != 0 for x in b) for b in blocks):
                    failures.append(
                        f"orbit {datum.labels[oi]} touches type 0 or n but carries "
                        f"a nonzero block at position {pos}"
                    )
                continue
            free = free_block_position(datum, oi, pos, free_block)
            for bi, b in enumerate(blocks):
                if bi != free and any(x != 0 for x in b):
                    failures.append(
                        f"orbit {datum.labels[oi]} position {pos}: block {bi} "
                        f"must vanish (free block is {free})"
                    )
    return (not failures, failures)


def is_simple(w: LeviWeight, free_block: str = FREE_BLOCK_HIGH) -> bool:
    ok, _ = simple_report(w, free_block)
    return ok


def free_block_entries(w: LeviWeight, oi: int, free_block: str = FREE_BLOCK_HIGH) -> tuple[int, ...]:
    """Entries of the free block at every embedding of one orbit, flattened
    in Frobenius order.  These drive the multiplicative coordinates."""
    o = w.datum.orbits[oi]
    out = []
    for pos in range(o.e):
        free = free_block_position(w.datum, oi, pos, free_block)
        out.extend(w.at(oi, pos)[free])
    return tuple(out)


# --- torus-character congruences ---------------------------------------------


def exponents_congruent(e1, e2, m: int, p: int) -> bool:
    """g^{e1} = g^{e2} mod p^m for every tuple of units g, via the order
    p^{m-1}(p-1) of the unit group mod p^m."""
    e1, e2 = tuple(e1), tuple(e2)
    if len(e1) != len(e2):
        raise ShapeMismatch("exponent vectors differ in length")
    if m < 1:
        raise ValueError("congruence exponent must be at least 1")
    order = p ** (m - 1) * (p - 1)
    return all((a - b) % order == 0 for a, b in zip(e1, e2))


def char_congruent(w1, w2, m: int) -> bool:
    """Whether two weights agree as characters on diagonal unit tuples mod p^m."""
    if w1.datum != w2.datum:
        raise ShapeMismatch("weights live over different data")
    return exponents_congruent(w1.flat(), w2.flat(), m, w1.datum.p)


# --- hypotheses of the operator congruence -----------------------------------


@dataclass(frozen=True)
class ThetaHypothesesReport:
    ok: bool
    failures: tuple[str, ...]


def theta_hypotheses(
    w1: LeviWeight,
    w2: LeviWeight,
    m: int,
    free_block: str = FREE_BLOCK_HIGH,
) -> ThetaHypothesesReport:
    """Check the three hypothesis families of the operator congruence.

    Both weights must be simple.  The families: entrywise congruence mod
    p^m(p-1); adjacent differences exceeding m wherever the two weights
    disagree on them (the i+1 difference is used on both sides); and last
    entries exceeding m wherever they differ.
    """
    if w1.datum != w2.datum:
        raise ShapeMismatch("weights live over different data")
    for name, w in (("first", w1), ("second", w2)):
        ok, why = simple_report(w, free_block)
        if not ok:
            raise NotSimple(f"{name} weight is not simple: " + "; ".join(why))
    datum = w1.datum
    p = datum.p
    modulus = p ** m * (p - 1)
    failures = []
    for oi, o in enumerate(datum.orbits):
        for pos in range(o.e):
            t1, t2 = w1.concat(oi, pos), w2.concat(oi, pos)
            label = f"{datum.labels[oi]}[{pos}]"
            for i, (a, b) in enumerate(zip(t1, t2), start=1):
                if (a - b) % modulus != 0:
                    failures.append(
                        f"{label} entry {i}: {a} and {b} differ mod p^m(p-1) = {modulus}"
                    )
            for i in range(len(t1) - 1):
                d1 = t1[i] - t1[i + 1]
                d2 = t2[i] - t2[i + 1]
                if d1 != d2 and min(d1, d2) <= m:
                    failures.append(
                        f"{label} entries {i + 1},{i + 2}: differences {d1} vs {d2} "
                        f"disagree and min is not > {m}"
                    )
            if t1 and t1[-1] != t2[-1] and min(t1[-1], t2[-1]) <= m:
                failures.append(
                    f"{label} last entry: {t1[-1]} vs {t2[-1]} differ and min is not > {m}"
                )
    return ThetaHypothesesReport(ok=not failures, failures=tuple(failures))
