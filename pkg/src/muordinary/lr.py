"""Littlewood-Richardson combinatorics for general linear groups.

Provides the LR coefficient by exhaustive enumeration of ballot fillings of
skew shapes, the Weyl dimension formula, and the restriction of a GL_N
highest weight to a block Levi GL_{b_1} x ... x GL_{b_k}.

The filling enumeration doubles as its own oracle at desk scale: it is the
definition, not a rewrite of it.
"""

from math import prod

from .errors import CompositionError


def is_weakly_decreasing(seq) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:]))


def dim_irrep(w) -> int:
    """Dimension of the irreducible GL_N representation of highest weight w.

    Weyl dimension formula: prod_{i<j} (w_i - w_j + j - i) / (j - i).
    Entries may be negative; the result is an exact positive integer.
    """
    w = tuple(w)
    if not is_weakly_decreasing(w):
        raise ValueError(f"{w} is not a dominant weight")
    n = len(w)
    num = prod(w[i] - w[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    assert num % den == 0
    return num // den


def _strip(seq) -> tuple:
    """Drop trailing zeros: (2, 1, 0, 0) -> (2, 1)."""
    seq = tuple(seq)
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def _pad(seq, length: int) -> tuple:
    seq = tuple(seq)
    return seq + (0,) * (length - len(seq))


def partitions_of(total: int, max_len: int, max_part: int = None):
    """All partitions of `total` with at most max_len parts, parts <= max_part."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, max_len - 1, first):
            yield (first,) + rest


def lr_coefficient(lam, mu, nu) -> int:
    """The multiplicity c^lam_{mu,nu}, counted as ballot skew tableaux.

    A filling of the skew shape lam/mu with content nu counts when rows
    weakly increase left to right, columns strictly increase top to bottom,
    and the reverse reading word (right to left, top to bottom) is a lattice
    word.  Returns 0 whenever |mu| + |nu| != |lam| or the shapes do not
    nest.
    """
    lam, mu, nu = _strip(lam), _strip(mu), _strip(nu)
    for part in (lam, mu, nu):
        if not is_weakly_decreasing(part) or any(x < 0 for x in part):
            raise ValueError(f"{part} is not a partition")
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    if len(mu) > len(lam):
        return 0
    mu = _pad(mu, len(lam))
    if any(m > l for m, l in zip(mu, lam)):
        return 0
    if not nu:
        return 1  # empty skew shape, empty content

    nrows = len(lam)
    nvals = len(nu)
    # Cells in reverse reading order (rows top to bottom, columns right to
    # left), so the lattice condition can be enforced as values are placed.
    cells = [
        (r, c)
        for r in range(nrows)
        for c in range(lam[r] - 1, mu[r] - 1, -1)
    ]
    filling = {}
    counts = [0] * (nvals + 1)
    total = 0

    def place(idx: int):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        above = filling.get((r - 1, c))
        right = filling.get((r, c + 1))
        lo = 1 if above is None else above + 1
        hi = nvals if right is None else right
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            place(idx + 1)
            counts[v] -= 1
        filling.pop((r, c), None)

    place(0)
    return total


def _subpartitions_within(lam, max_len: int):
    """All partitions mu contained in lam with at most max_len parts."""
    rows = _strip(lam)[:max_len]

    def build(i: int, prev: int, acc: tuple):
        if i == len(rows):
            yield _strip(acc)
            return
        for v in range(min(rows[i], prev), -1, -1):
            yield from build(i + 1, v, acc + (v,))

    yield from build(0, rows[0] if rows else 0, ())


def _two_block_restriction(w, a: int, b: int) -> dict:
    """Branch the partition w, viewed in GL_{a+b}, to GL_a x GL_b.

    Returns {(mu, nu): multiplicity} with mu, nu zero-padded to lengths a
    and b.
    """
    w = _strip(w)
    out = {}
    total = sum(w)
    maxpart = w[0] if w else 0
    for mu in _subpartitions_within(w, a):
        rest = total - sum(mu)
        for nu in partitions_of(rest, b, maxpart):
            c = lr_coefficient(w, mu, nu)
            if c:
                out[(_pad(mu, a), _pad(nu, b))] = c
    return out


def restrict_to_blocks(w, blocks) -> dict:
    """Restrict the GL_N weight w to the Levi with the given block sizes.

    `w` is any non-increasing integer tuple of length N = sum(blocks);
    negative entries are handled by twisting with a power of the
    determinant, which commutes with restriction.  Returns a map from
    tuples of per-block weights (each zero-padded to its block size) to
    multiplicities, the iterated two-block LR restriction.
    """
    w = tuple(w)
    blocks = tuple(blocks)
    if not is_weakly_decreasing(w):
        raise ValueError(f"{w} is not a dominant weight")
    if any(b < 1 for b in blocks):
        raise CompositionError(f"block sizes must be positive, got {blocks}")
    if sum(blocks) != len(w):
        raise CompositionError(
            f"blocks {blocks} do not compose the weight length {len(w)}"
        )
    if not blocks:
        return {(): 1}  # empty weight in the trivial group

    shift = max(0, -min(w, default=0))
    shifted = _strip(tuple(x + shift for x in w))

    # states: (tuple of finished block weights, remaining partition) -> mult
    states = {((), shifted): 1}
    for i, b in enumerate(blocks[:-1]):
        tail = sum(blocks[i + 1:])
        nxt = {}
        for (prefix, rem), mult in states.items():
            for (mu, nu), c in _two_block_restriction(rem, b, tail).items():
                key = (prefix + (mu,), _strip(nu))
                nxt[key] = nxt.get(key, 0) + mult * c
        states = nxt

    out = {}
    last = blocks[-1]
    for (prefix, rem), mult in states.items():
        key = prefix + (_pad(rem, last),)
        out[key] = out.get(key, 0) + mult

    if shift:
        out = {
            tuple(tuple(x - shift for x in blk) for blk in key): mult
            for key, mult in out.items()
        }
    return out
