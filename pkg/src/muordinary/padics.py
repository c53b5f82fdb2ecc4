"""Exact truncated arithmetic over Z/p^M.

Multivariate power series are truncated at a total degree bound and carry
coefficients in Z/p^M, stored sparsely as a map from exponent vectors to
residues.  The binomial basis (1+u)^a is kept as its own type because the
differential operators act diagonally on it.

No floats anywhere: every statement checked downstream is an exact
congruence.
"""

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .errors import ContextMismatch, PrecisionError, UnknownCoordinate


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision: odd prime p, coefficients mod p^prec, total degree
    at most `degree`, in the named coordinates."""

    p: int
    prec: int
    degree: int
    coords: tuple[str, ...]

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.prec < 1:
            raise ValueError("coefficient precision must be at least 1")
        if self.degree < 0:
            raise ValueError("degree bound must be nonnegative")
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(set(self.coords)) != len(self.coords):
            raise ValueError("coordinate labels must be distinct")

    @property
    def modulus(self) -> int:
        return self.p ** self.prec

    @property
    def ncoords(self) -> int:
        return len(self.coords)

    def axis(self, label: str) -> int:
        try:
            return self.coords.index(label)
        except ValueError:
            raise UnknownCoordinate(f"no coordinate named {label!r}") from None


def _check_same_context(f: "UExpansion", g: "UExpansion") -> None:
    if f.ctx != g.ctx:
        raise ContextMismatch("series built over different contexts")


class UExpansion:
    """A degree-truncated multivariate series with residue coefficients.

    Instances are immutable by convention: all arithmetic returns fresh
    objects, and the coefficient map is never exposed for mutation.
    """

    __slots__ = ("ctx", "_coeffs")

    def __init__(self, ctx: PrecisionContext, coeffs: Mapping[tuple, int] = ()):
        self.ctx = ctx
        reduced = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != ctx.ncoords:
                raise ValueError(f"exponent vector {exps} has wrong length")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if sum(exps) > ctx.degree:
                raise ValueError(f"monomial {exps} exceeds degree bound {ctx.degree}")
            c %= ctx.modulus
            if c:
                reduced[exps] = (reduced.get(exps, 0) + c) % ctx.modulus
        self._coeffs = {k: v for k, v in reduced.items() if v}

    @classmethod
    def zero(cls, ctx: PrecisionContext) -> "UExpansion":
        return cls(ctx)

    @classmethod
    def one(cls, ctx: PrecisionContext) -> "UExpansion":
        return cls.constant(ctx, 1)

    @classmethod
    def constant(cls, ctx: PrecisionContext, c: int) -> "UExpansion":
        return cls(ctx, {(0,) * ctx.ncoords: c})

    @classmethod
    def monomial(cls, ctx: PrecisionContext, exps: Iterable[int], c: int = 1) -> "UExpansion":
        return cls(ctx, {tuple(exps): c})

    @classmethod
    def coordinate(cls, ctx: PrecisionContext, label: str) -> "UExpansion":
        i = ctx.axis(label)
        exps = tuple(1 if j == i else 0 for j in range(ctx.ncoords))
        return cls.monomial(ctx, exps)

    def coefficient(self, exps: Iterable[int]) -> int:
        return self._coeffs.get(tuple(exps), 0)

    def items(self):
        return self._coeffs.items()

    def is_zero(self) -> bool:
        return not self._coeffs

    def support_degree(self) -> int:
        """Largest total degree of a stored monomial (0 for the zero series)."""
        return max((sum(k) for k in self._coeffs), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UExpansion):
            return NotImplemented
        return self.ctx == other.ctx and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.ctx, tuple(sorted(self._coeffs.items()))))

    def __add__(self, other: "UExpansion") -> "UExpansion":
        return series_add(self, other)

    def __sub__(self, other: "UExpansion") -> "UExpansion":
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other: "UExpansion") -> "UExpansion":
        return series_mul(self, other)

    def __repr__(self):
        if not self._coeffs:
            return "UExpansion(0)"
        parts = []
        for exps in sorted(self._coeffs):
            c = self._coeffs[exps]
            mono = "·".join(
                f"{lbl}^{e}" if e > 1 else lbl
                for lbl, e in zip(self.ctx.coords, exps)
                if e
            )
            parts.append(f"{c}·{mono}" if mono else f"{c}")
        return "UExpansion(" + " + ".join(parts) + ")"


def series_add(f: UExpansion, g: UExpansion) -> UExpansion:
    """Coefficientwise sum, reduced mod p^prec."""
    _check_same_context(f, g)
    out = dict(f.items())
    mod = f.ctx.modulus
    for exps, c in g.items():
        v = (out.get(exps, 0) + c) % mod
        if v:
            out[exps] = v
        else:
            out.pop(exps, None)
    res = UExpansion.zero(f.ctx)
    res._coeffs.update(out)
    return res


def series_scale(f: UExpansion, c: int) -> UExpansion:
    mod = f.ctx.modulus
    c %= mod
    res = UExpansion.zero(f.ctx)
    for exps, v in f.items():
        w = (v * c) % mod
        if w:
            res._coeffs[exps] = w
    return res


def series_mul(f: UExpansion, g: UExpansion) -> UExpansion:
    """Cauchy product truncated at the total degree bound."""
    _check_same_context(f, g)
    ctx = f.ctx
    mod = ctx.modulus
    out: dict[tuple, int] = {}
    for ef, cf in f.items():
        df = sum(ef)
        for eg, cg in g.items():
            if df + sum(eg) > ctx.degree:
                continue
            key = tuple(a + b for a, b in zip(ef, eg))
            out[key] = (out.get(key, 0) + cf * cg) % mod
    res = UExpansion.zero(ctx)
    res._coeffs.update({k: v for k, v in out.items() if v})
    return res


def series_congruent(f: UExpansion, g: UExpansion, m: int) -> bool:
    """Whether every coefficient of f-g vanishes mod p^m.

    Requires m <= prec: residues mod p^prec cannot witness a finer
    congruence.
    """
    _check_same_context(f, g)
    if m < 0:
        raise ValueError("congruence exponent must be nonnegative")
    if m > f.ctx.prec:
        raise PrecisionError(
            f"congruence mod p^{m} requested but coefficients live mod p^{f.ctx.prec}"
        )
    pm = f.ctx.p ** m
    keys = set(f._coeffs) | set(g._coeffs)
    return all((f.coefficient(k) - g.coefficient(k)) % pm == 0 for k in keys)


class BinomialVector:
    """A finite combination sum_t c_t * prod_c (1+u_c)^{a_{t,c}}.

    Exponents are nonnegative integers; they are kept unreduced because the
    expansion coefficients C(a, k) mod p^prec depend on more than a mod
    p^prec.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: PrecisionContext, terms: Iterable[tuple[int, Iterable[int]]]):
        self.ctx = ctx
        mod = ctx.modulus
        collected: dict[tuple, int] = {}
        for c, exps in terms:
            exps = tuple(exps)
            if len(exps) != ctx.ncoords:
                raise ValueError(f"exponent tuple {exps} has wrong length")
            if any(a < 0 for a in exps):
                raise ValueError(f"negative binomial exponent in {exps}")
            collected[exps] = (collected.get(exps, 0) + c) % mod
        self.terms = tuple(
            (c, exps) for exps, c in sorted(collected.items()) if c
        )

    def scaled_exponents(self, factors: Mapping[tuple, int]) -> "BinomialVector":
        """Multiply the coefficient of each term by factors[exponents]."""
        return BinomialVector(
            self.ctx, [(c * factors.get(a, 1), a) for c, a in self.terms]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinomialVector):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, self.terms))

    def __repr__(self):
        body = " + ".join(
            f"{c}·" + "".join(f"(1+{lbl})^{a}" for lbl, a in zip(self.ctx.coords, exps))
            for c, exps in self.terms
        )
        return f"BinomialVector({body or '0'})"


def _monomials_up_to(ncoords: int, bound: int):
    """All exponent vectors of the given length with total degree <= bound."""
    if ncoords == 0:
        yield ()
        return
    for head in range(bound + 1):
        for tail in _monomials_up_to(ncoords - 1, bound - head):
            yield (head,) + tail


def binomial_to_series(v: BinomialVector) -> UExpansion:
    """Expand each (1+u)^a by the binomial theorem, truncate and reduce."""
    ctx = v.ctx
    mod = ctx.modulus
    out: dict[tuple, int] = {}
    for c, a in v.terms:
        for k in _monomials_up_to(ctx.ncoords, ctx.degree):
            w = c
            for ac, kc in zip(a, k):
                w = (w * comb(ac, kc)) % mod
                if w == 0:
                    break
            if w:
                out[k] = (out.get(k, 0) + w) % mod
    res = UExpansion.zero(ctx)
    res._coeffs.update({k: w for k, w in out.items() if w})
    return res
