"""Branch-free 32-bit primitives and a straight-line encoder.

Truth values are masks: all-ones (0xFFFFFFFF) for true, zero for false,
obtained by smearing the sign bit of a two's-complement word.  Case
selection is done with mask arithmetic instead of data-dependent
conditionals; every path is computed and the unwanted results are masked
away.  Words are simulated by masking with 2^32 - 1, so the contracts
are on values, not machine representation.
"""

from .bitio import Codeword
from .bounded import CodeLayout

__all__ = [
    "M32",
    "mask32",
    "is_neg",
    "is_gt",
    "is_nonzero",
    "is_eq",
    "if_then_else",
    "ceil_lg32",
    "encode_branchfree",
]

M32 = 0xFFFFFFFF


def mask32(x: int) -> int:
    return x & M32


def is_neg(x: int) -> int:
    """All-ones iff x, read as a signed 32-bit word, is negative."""
    return mask32(-((x & M32) >> 31))


def is_gt(x: int, y: int) -> int:
    """All-ones iff x > y, for operands below 2^31."""
    return is_neg(y - x)


def is_nonzero(x: int) -> int:
    """All-ones iff the 32-bit word x is nonzero."""
    x &= M32
    return is_neg(x | mask32(-x))


def is_eq(x: int, y: int) -> int:
    return mask32(~is_nonzero(x ^ y))


def if_then_else(c: int, a: int, b: int) -> int:
    """a if the mask c is all-ones, else b."""
    return mask32((a & c) | (b & ~c))


def ceil_lg32(x: int) -> int:
    """Ceiling log2 via five fixed most-significant-half tests on x - 1."""
    if x < 1:
        raise ValueError("x must be >= 1")
    t = mask32(x - 1)
    r = 0
    for k in (16, 8, 4, 2, 1):
        c = is_nonzero(t >> k)
        r += k & c
        t = if_then_else(c, t >> k, t)
    return r + t  # t is 0 or 1 here


def encode_branchfree(lay: CodeLayout, i: int) -> Codeword:
    """Same codeword as bounded.encode, with all case selection done by
    mask arithmetic.  Layout fields are assumed precomputed; values and
    layout integers must fit in 31 bits."""
    if not 0 <= i <= lay.n:
        raise ValueError("value %d outside [0, %d]" % (i, lay.n))
    m, d_t, s, h = lay.m, lay.d_t, lay.s, lay.h
    s1, h1, e_n = lay.s1, lay.h1, lay.e_n
    dm = d_t * m
    q, r = divmod(i, m)
    in_bunch = is_gt(dm, i)
    at_top = is_eq(i, lay.n)
    in_tail = mask32(~(in_bunch | at_top))
    # bunch codeword: q ones, zero edge folded into an h- or (h+1)-bit pattern
    short_b = is_gt(s, r)
    pat_b = if_then_else(short_b, r, mask32(r + s))
    len_b = if_then_else(short_b, h, h + 1)
    # tail codeword: d_t ones, then j in h'-1 bits or j + s' in h' bits
    j = mask32(i - dm)
    short_t = is_neg(j - s1)
    pat_t = if_then_else(short_t, j, mask32(j + s1))
    len_t = if_then_else(short_t, mask32(h1 - 1), h1)
    ones = (q & in_bunch) | ((d_t + e_n) & at_top) | (d_t & in_tail)
    pattern = (pat_b & in_bunch) | (pat_t & in_tail)
    plen = (len_b & in_bunch) | (len_t & in_tail)
    return Codeword(ones, pattern, plen)
