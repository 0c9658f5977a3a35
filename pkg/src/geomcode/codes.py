"""Reference prefix codes: unary, balanced (truncated binary), and Golomb.

Also houses the bunch-size parameter m for a geometric success
probability p: the smallest integer with p^m + p^(m+1) <= 1, which makes
the bunch survival probability p^m as close as possible to one half.
"""

import math
from dataclasses import dataclass

from .bitio import BitReader, Codeword

__all__ = [
    "ceil_lg",
    "compute_m",
    "BalancedParams",
    "balanced_params",
    "GolombParams",
    "golomb_params",
    "unary_encode",
    "unary_decode",
    "balanced_encode",
    "balanced_decode",
    "golomb_encode",
    "golomb_decode",
    "golomb_codeword_length",
    "golomb_expected_length_bounded",
]


def ceil_lg(x: int) -> int:
    """Ceiling of log2 for a positive integer."""
    if x < 1:
        raise ValueError("x must be >= 1")
    return (x - 1).bit_length()


def _check_p(p: float) -> None:
    if not 0.5 <= p < 1.0:
        raise ValueError("p must satisfy 0.5 <= p < 1, got %r" % (p,))


def _fits(p: float, ell: int) -> bool:
    """Whether p^ell + p^(ell+1) <= 1, exact at floating-point boundaries."""
    v = p ** ell * (1.0 + p)
    if abs(v - 1.0) > 1e-9:
        return v <= 1.0
    # too close to call in double precision; rerun at 50 digits
    import mpmath

    with mpmath.workdps(50):
        mp = mpmath.mpf(p)
        return mp ** ell * (1 + mp) <= 1


def compute_m(p: float) -> int:
    """Smallest positive integer m with p^m + p^(m+1) <= 1.

    Starts from the closed form ceil(lg(1+p) / -lg(p)) and fixes up by a
    minimality scan, since the ceiling sits on a knife's edge when p^m
    is near one half.
    """
    _check_p(p)
    if p == 0.5:
        return 1
    est = math.ceil(math.log2(1.0 + p) / -math.log2(p))
    ell = max(1, est - 1)
    while not _fits(p, ell):
        ell += 1
    while ell > 1 and _fits(p, ell - 1):
        ell -= 1
    return ell


@dataclass(frozen=True)
class BalancedParams:
    """Shape of the truncated binary code over a universe of N values."""

    N: int
    h: int  # ceil(lg N); codeword lengths are h-1 and h
    s: int  # number of shorter codewords, 2^h - N

    @property
    def short_len(self) -> int:
        return self.h - 1 if self.N > 1 else 0


def balanced_params(N: int) -> BalancedParams:
    if N < 1:
        raise ValueError("universe size must be >= 1")
    h = ceil_lg(N)
    return BalancedParams(N=N, h=h, s=(1 << h) - N)


def balanced_encode(v: int, N: int) -> Codeword:
    """Truncated binary codeword for v in a universe of N values.

    Values below s take h-1 bits; the rest take h bits with the
    canonical +s shift, which keeps the code prefix-free.
    """
    bp = balanced_params(N)
    if not 0 <= v < N:
        raise ValueError("value %d outside universe [0, %d)" % (v, N))
    if N == 1:
        return Codeword(0, 0, 0)
    if v < bp.s:
        return Codeword(0, v, bp.h - 1)
    return Codeword(0, v + bp.s, bp.h)


def balanced_decode(r: BitReader, N: int) -> int:
    bp = balanced_params(N)
    if N == 1:
        return 0
    v = r.read_bits(bp.h - 1)
    if v < bp.s:
        return v
    bit = r.read_bits(1)
    return ((v << 1) | bit) - bp.s


def unary_encode(i: int, bound: int | None = None) -> Codeword:
    """i one-bits plus a terminating zero, dropped when i equals the bound."""
    if i < 0:
        raise ValueError("value must be non-negative")
    if bound is not None:
        if i > bound:
            raise ValueError("value %d exceeds bound %d" % (i, bound))
        if i == bound:
            return Codeword(i, 0, 0)
    return Codeword(i, 0, 1)


def unary_decode(r: BitReader, bound: int | None = None) -> int:
    if bound is None:
        i = r.count_ones()
        r.read_bits(1)
        return i
    i = r.count_ones_capped(bound)
    if i < bound:
        r.read_bits(1)
    return i


@dataclass(frozen=True)
class GolombParams:
    """Bunch size m with the balanced sub-code shape for offsets."""

    m: int
    bunch: BalancedParams


def golomb_params(m: int) -> GolombParams:
    if m < 1:
        raise ValueError("m must be >= 1")
    return GolombParams(m=m, bunch=balanced_params(m))


def golomb_encode(i: int, m: int) -> Codeword:
    """Unary bunch number, a zero edge, then the balanced offset code."""
    gp = golomb_params(m)
    if i < 0:
        raise ValueError("value must be non-negative")
    q, r = divmod(i, m)
    off = balanced_encode(r, m)
    # leading zero edge folds into the pattern: off.pattern < 2^off.pattern_len
    return Codeword(q, off.pattern, off.pattern_len + 1)


def golomb_decode(r: BitReader, m: int) -> int:
    if m < 1:
        raise ValueError("m must be >= 1")
    q = r.count_ones()
    r.read_bits(1)  # the zero edge
    return q * m + balanced_decode(r, m)


def golomb_codeword_length(i: int, m: int) -> int:
    gp = golomb_params(m)
    q, off = divmod(i, m)
    return q + 1 + (gp.bunch.h - 1 if off < gp.bunch.s else gp.bunch.h)


def golomb_expected_length_bounded(p: float, n: int, m: int) -> float:
    """Expected Golomb codeword length under the geometric distribution
    truncated at n, with the boundary value n keeping its ordinary
    unbounded codeword.

    Evaluated bunch by bunch with geometric partial sums, so cost is
    O(n/m) rather than O(n).
    """
    _check_p(p)
    if n < 0:
        raise ValueError("n must be >= 0")
    gp = golomb_params(m)
    h, s = gp.bunch.h, gp.bunch.s
    total = p ** n * golomb_codeword_length(n, m)
    k = 0
    while k * m < n:
        lo = k * m
        hi = min(lo + m, n)
        cut = min(lo + s, hi)
        plo, pcut, phi = p ** lo, p ** cut, p ** hi
        total += (k + h) * (plo - pcut) + (k + h + 1) * (pcut - phi)
        k += 1
    return total
