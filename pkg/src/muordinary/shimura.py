"""PEL data at p and the combinatorics of the generic Newton stratum.

An Orbit packages one Frobenius orbit of p-adic embeddings: its size e, the
crystal rank n, and the multiplicative type f (one value per embedding, in
Frobenius order).  Everything downstream -- Newton polygons, block shapes
of the slope centralizer, graded ranks, the deformation-space inventory --
is computed from these integers alone.

Slopes are kept in the integer normalization 0 <= slope <= e (multiply by
1/e for the isocrystal slopes).
"""

from dataclasses import dataclass, field
from math import lcm
from typing import Optional

from .errors import DatumError, OddSlopeCount, SlopeEHalf
from .padics import is_odd_prime


@dataclass(frozen=True)
class Orbit:
    """One Frobenius orbit: size e, rank n, multiplicative type f."""

    e: int
    n: int
    f: tuple[int, ...]
    self_dual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(self.f))
        if self.e < 1:
            raise DatumError("orbit size e must be at least 1")
        if self.n < 1:
            raise DatumError("rank n must be at least 1")
        if len(self.f) != self.e:
            raise DatumError(
                f"multiplicative type has {len(self.f)} entries, expected e={self.e}"
            )
        if any(not (0 <= x <= self.n) for x in self.f):
            raise DatumError(f"multiplicative type entries must lie in [0, {self.n}]")
        if self.self_dual and self.dual_rotation() is None:
            raise DatumError(
                "orbit marked self-dual but no rotation aligns f with its dual type n-f"
            )

    def dual_rotation(self) -> Optional[int]:
        """Smallest k with f[(i+k) % e] == n - f[i] for all i, if any.

        Conjugation commutes with Frobenius, so on a self-dual orbit it acts
        as a rotation of the embeddings.
        """
        for k in range(self.e):
            if all(self.f[(i + k) % self.e] == self.n - self.f[i] for i in range(self.e)):
                return k
        return None


@dataclass(frozen=True)
class NewtonPolygon:
    """Strictly increasing (integer slope, multiplicity) pairs."""

    slopes: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "slopes", tuple((int(a), int(m)) for a, m in self.slopes)
        )
        if any(m < 1 for _, m in self.slopes):
            raise DatumError("slope multiplicities must be positive")
        vals = [a for a, _ in self.slopes]
        if any(x >= y for x, y in zip(vals, vals[1:])):
            raise DatumError("slopes must be strictly increasing")

    @classmethod
    def from_multiset(cls, values) -> "NewtonPolygon":
        counts: dict[int, int] = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        return cls(tuple(sorted(counts.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.slopes)

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.slopes)

    def distinct(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.slopes)


def newton_slopes(o: Orbit) -> NewtonPolygon:
    """Newton polygon by direct counting: the j-th slope is
    #{embeddings with f > n - j}, for j = 1..n."""
    return NewtonPolygon.from_multiset(
        sum(1 for x in o.f if x > o.n - j) for j in range(1, o.n + 1)
    )


@dataclass(frozen=True)
class SlopeDecomposition:
    """The structured form of the polygon: distinct type values
    F_0 = n > F_1 > ... > F_s > F_{s+1} = 0, with d_i embeddings of type F_i,
    slopes lambda_i = d_0 + ... + d_i of multiplicity m_i = F_i - F_{i+1}."""

    F: tuple[int, ...]
    d: tuple[int, ...]
    lambdas: tuple[int, ...]
    mults: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.lambdas) - 1


def slope_decomposition(o: Orbit) -> SlopeDecomposition:
    inner = sorted({x for x in o.f if 1 <= x <= o.n - 1}, reverse=True)
    F = (o.n,) + tuple(inner) + (0,)
    d = tuple(sum(1 for x in o.f if x == v) for v in F)
    lambdas = []
    acc = 0
    for i in range(len(F) - 1):
        acc += d[i]
        lambdas.append(acc)
    mults = tuple(F[i] - F[i + 1] for i in range(len(F) - 1))
    return SlopeDecomposition(F, d, tuple(lambdas), mults)


def newton_from_multtype(o: Orbit) -> NewtonPolygon:
    """Newton polygon via the slope decomposition (partial sums of the d_i
    with multiplicities F_i - F_{i+1}), dropping multiplicity-zero entries."""
    dec = slope_decomposition(o)
    return NewtonPolygon(
        tuple(
            (lam, m) for lam, m in zip(dec.lambdas, dec.mults) if m > 0
        )
    )


def dual_orbit(o: Orbit) -> Orbit:
    """The conjugate orbit, with multiplicative type n - f.

    Its polygon is the image of o's under slope -> e - slope, with the same
    multiplicities.
    """
    return Orbit(o.e, o.n, tuple(o.n - x for x in o.f), self_dual=o.self_dual)


def _check_self_dual_blocks(o: Orbit, dec: SlopeDecomposition) -> int:
    """Return the first block index kept in the self-dual case, or raise."""
    if any(2 * lam == o.e for lam in dec.lambdas):
        raise SlopeEHalf(
            f"self-dual orbit has the middle slope {o.e}/2; "
            "the block decomposition excludes this case"
        )
    count = dec.s + 1
    if count % 2 != 0:
        raise OddSlopeCount(
            f"self-dual orbit without middle slope must have an even number "
            f"of distinct slopes, got {count}"
        )
    return count // 2  # blocks s, s-1, ..., (s+1)/2 survive


def levi_shape(o: Orbit) -> tuple[int, ...]:
    """Block sizes of the slope centralizer, in decreasing slope order.

    Non-self-dual orbits keep every slope block (m_s, ..., m_0); self-dual
    orbits keep only the upper half, and the middle slope e/2 is rejected.
    """
    dec = slope_decomposition(o)
    if not o.self_dual:
        return tuple(reversed(dec.mults))
    first_kept = _check_self_dual_blocks(o, dec)
    return tuple(dec.mults[t] for t in range(dec.s, first_kept - 1, -1))


def gr_ranks(o: Orbit) -> dict[tuple[int, int], int]:
    """Ranks of the graded pieces of the square of the Hodge bundle.

    Indexed by pairs of slope indices (i, j): zero when i <= j, and
    m_i * m_j * (lambda_i - lambda_j) when j < i.
    """
    dec = slope_decomposition(o)
    out = {}
    for i in range(dec.s + 1):
        for j in range(dec.s + 1):
            if j < i:
                out[(i, j)] = dec.mults[i] * dec.mults[j] * (dec.lambdas[i] - dec.lambdas[j])
            else:
                out[(i, j)] = 0
    return out


def moonen_parameter_count(o: Orbit) -> int:
    """Number of free canonical local parameters: sum of f(n - f) over the
    orbit's embeddings."""
    return sum(x * (o.n - x) for x in o.f)


def is_ordinary(o: Orbit) -> bool:
    """Whether the polygon is ordinary, i.e. all slopes lie in {0, e}."""
    return all(lam in (0, o.e) for lam in newton_slopes(o).distinct())


KIND_MULTIPLICATIVE = "multiplicative"
KIND_LUBIN_TATE = "lubin_tate"
KIND_GENERAL = "general"
KIND_SELF_DUAL_DIAGONAL = "self_dual_diagonal"


@dataclass(frozen=True)
class CascadePiece:
    """One building block of the deformation cascade.

    Connects the slope pair (slope_high, slope_low); the underlying group is
    isoclinic of dimension slope_high - slope_low and height e, taken with
    multiplicity m_i * m_j.
    """

    orbit_index: int
    slope_high: int
    slope_low: int
    dimension: int
    height: int
    multiplicity: int
    kind: str


def _piece_kind(o: Orbit, hi: int, lo: int, diagonal: bool) -> str:
    if diagonal:
        return KIND_SELF_DUAL_DIAGONAL
    if (lo, hi) == (0, o.e):
        return KIND_MULTIPLICATIVE
    if hi == lo + 1:
        return KIND_LUBIN_TATE
    return KIND_GENERAL


def cascade(o: Orbit, orbit_index: int = 0) -> tuple[CascadePiece, ...]:
    """Inventory of cascade pieces for one orbit.

    Non-self-dual: one piece per pair of distinct slopes.  Self-dual: pairs
    within the upper half of the polygon, plus one diagonal piece per slope
    pair exchanged by duality (these carry only a sub-module structure and
    are flagged as such).
    """
    dec = slope_decomposition(o)
    s = dec.s
    pairs: list[tuple[int, int, bool]] = []
    if not o.self_dual:
        pairs = [(i, j, False) for i in range(s + 1) for j in range(i)]
    else:
        _check_self_dual_blocks(o, dec)
        half = s // 2  # s is odd here; indices <= half lie strictly below e/2
        pairs = [(i, j, False) for i in range(half + 1) for j in range(i)]
        pairs += [(s - j, j, True) for j in range(half + 1)]
    out = []
    for i, j, diagonal in pairs:
        hi, lo = dec.lambdas[i], dec.lambdas[j]
        out.append(
            CascadePiece(
                orbit_index=orbit_index,
                slope_high=hi,
                slope_low=lo,
                dimension=hi - lo,
                height=o.e,
                multiplicity=dec.mults[i] * dec.mults[j],
                kind=_piece_kind(o, hi, lo, diagonal),
            )
        )
    out.sort(key=lambda piece: (piece.slope_high, piece.slope_low))
    return tuple(out)


@dataclass(frozen=True)
class PELDatum:
    """An odd prime together with its orbits and their duality pairing.

    Non-self-dual orbits must come in registered dual pairs (dual_of gives
    the partner index both ways); the pairing is validated, not inferred.
    The set of chosen representatives consists of the self-dual orbits plus
    the first-listed orbit of each dual pair.
    """

    p: int
    orbits: tuple[Orbit, ...]
    dual_of: tuple[Optional[int], ...] = field(default=None)
    labels: tuple[str, ...] = field(default=None)

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise DatumError(f"p must be an odd prime, got {self.p}")
        object.__setattr__(self, "orbits", tuple(self.orbits))
        if self.dual_of is None:
            if not all(o.self_dual for o in self.orbits):
                raise DatumError("non-self-dual orbits require a dual_of pairing")
            object.__setattr__(self, "dual_of", (None,) * len(self.orbits))
        object.__setattr__(self, "dual_of", tuple(self.dual_of))
        if self.labels is None:
            object.__setattr__(
                self, "labels", tuple(f"o{i}" for i in range(len(self.orbits)))
            )
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != len(self.orbits):
            raise DatumError("one label per orbit required")
        if len(set(self.labels)) != len(self.labels):
            raise DatumError("orbit labels must be distinct")
        if len(self.dual_of) != len(self.orbits):
            raise DatumError("one dual_of entry per orbit required")
        for i, o in enumerate(self.orbits):
            j = self.dual_of[i]
            if o.self_dual:
                if j is not None:
                    raise DatumError(f"self-dual orbit {self.labels[i]} cannot name a dual partner")
                continue
            if j is None:
                raise DatumError(f"orbit {self.labels[i]} is not self-dual and names no dual partner")
            if not (0 <= j < len(self.orbits)) or j == i:
                raise DatumError(f"orbit {self.labels[i]} has invalid dual partner index {j}")
            partner = self.orbits[j]
            if self.dual_of[j] != i:
                raise DatumError(
                    f"duality pairing between {self.labels[i]} and {self.labels[j]} is not mutual"
                )
            if partner.self_dual:
                raise DatumError(f"dual partner of {self.labels[i]} is marked self-dual")
            if (partner.e, partner.n) != (o.e, o.n):
                raise DatumError(
                    f"dual partner of {self.labels[i]} must share its size and rank"
                )
            if partner.f != tuple(o.n - x for x in o.f):
                raise DatumError(
                    f"dual partner of {self.labels[i]} must have multiplicative type n - f"
                )

    def orbit_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise DatumError(f"no orbit labeled {label!r}") from None

    def representatives(self) -> tuple[int, ...]:
        """Indices of the chosen orbit representatives (one per dual pair)."""
        return tuple(
            i
            for i, o in enumerate(self.orbits)
            if o.self_dual or self.dual_of[i] > i
        )

    def embeddings(self) -> tuple[tuple[int, int], ...]:
        """All (orbit index, position) pairs, in datum order."""
        return tuple(
            (i, t) for i, o in enumerate(self.orbits) for t in range(o.e)
        )

    def signature(self, oi: int, pos: int) -> tuple[int, int]:
        """(a_plus, a_minus) at the given embedding."""
        o = self.orbits[oi]
        return o.f[pos], o.n - o.f[pos]

    def conjugate(self, oi: int, pos: int) -> tuple[int, int]:
        """The embedding paired with (oi, pos) under conjugation."""
        o = self.orbits[oi]
        if o.self_dual:
            return oi, (pos + o.dual_rotation()) % o.e
        return self.dual_of[oi], pos


def hasse_weight(datum: PELDatum) -> int:
    """Weight of the section cutting out the generic Newton stratum:
    lcm over orbits of p^e - 1."""
    return lcm(*(datum.p ** o.e - 1 for o in datum.orbits))


def cascade_inventory(datum: PELDatum) -> tuple[CascadePiece, ...]:
    """Cascade pieces of every representative orbit, tagged by orbit index."""
    out = []
    for i in datum.representatives():
        out.extend(cascade(datum.orbits[i], orbit_index=i))
    return tuple(out)
