"""Prefix code for geometric run-lengths bounded by a known integer n.

The code tree is Golomb-shaped: a run of size-m bunches hanging off the
rightmost path, with a tail subtree at the bottom holding the last m'
values plus the boundary leaf n.  The tail threshold m'' decides whether
leaf n sits at local depth 1 or 2 inside the tail.

Encoding and decoding split into three phases: derive (m, m'') from p,
lay out all integer parameters once n is known, then per-value encode
and decode using only integer arithmetic.
"""

import logging
import math
from dataclasses import dataclass

from .bitio import BitReader, BitWriter, Codeword
from .codes import balanced_decode, ceil_lg, compute_m

__all__ = [
    "GeometricParams",
    "CodeLayout",
    "derive_params",
    "make_layout",
    "layout",
    "encode",
    "encode_into",
    "decode",
    "codeword_length",
    "expected_length",
    "enumerate_codewords",
    "ENUM_LIMIT",
]

log = logging.getLogger(__name__)

# lg(1/(lg 3 - 1) + 1), the tail-split threshold numerator
TAIL_SPLIT = 1.4380

ENUM_LIMIT = 10 ** 6


@dataclass(frozen=True)
class GeometricParams:
    """Integer code parameters derived from the success probability p."""

    p: float
    m: int   # bunch size
    m2: int  # tail threshold m'', in (m, 2m]


@dataclass(frozen=True)
class CodeLayout:
    """Everything needed to encode or decode for a fixed (m, m'', n)."""

    n: int
    m: int
    m2: int
    m1: int   # tail width m' = min(m + n mod m, n)
    d_t: int  # tail depth, number of full bunches above the tail
    h: int    # ceil(lg m)
    s: int    # 2^h - m, shorter offsets per bunch
    h1: int   # tail height h'
    s1: int   # shorter codewords in the tail, s'
    e_n: int  # local depth of leaf n inside the tail (1 or 2; 0 when n=0)


def derive_params(p: float) -> GeometricParams:
    """Phase 1: bunch size m and tail threshold m'' from p alone."""
    m = compute_m(p)  # validates p
    m2 = math.ceil(TAIL_SPLIT / -math.log2(p)) if p > 0.5 else 2
    if m2 <= m:
        log.debug("tail threshold %d clamped up for p=%r (m=%d)", m2, p, m)
        m2 = m + 1
    elif m2 > 2 * m:
        log.debug("tail threshold %d clamped down for p=%r (m=%d)", m2, p, m)
        m2 = 2 * m
    return GeometricParams(p=p, m=m, m2=m2)


def make_layout(m: int, m2: int, n: int) -> CodeLayout:
    """Phase 2: integer layout for a given bound n."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if not m < m2 <= 2 * m:
        raise ValueError("m'' must lie in (m, 2m], got m=%d m''=%d" % (m, m2))
    if n < 0:
        raise ValueError("n must be >= 0")
    h = ceil_lg(m)
    s = (1 << h) - m
    if n == 0:
        return CodeLayout(n=0, m=m, m2=m2, m1=0, d_t=0, h=h, s=s, h1=0, s1=0, e_n=0)
    m1 = min(m + n % m, n)
    d_t = (n - m1) // m
    if m1 < m2:
        e_n = 1
        h1 = ceil_lg(m1) + 1
        s1 = (1 << (h1 - 1)) - m1
    else:
        e_n = 2
        h1 = ceil_lg((4 * m1 + 2) // 3)  # ceil(lg(4m'/3))
        s1 = 3 * (1 << (h1 - 2)) - m1
    return CodeLayout(n=n, m=m, m2=m2, m1=m1, d_t=d_t, h=h, s=s, h1=h1, s1=s1, e_n=e_n)


def layout(params: GeometricParams, n: int) -> CodeLayout:
    return make_layout(params.m, params.m2, n)


def _check_value(lay: CodeLayout, i: int) -> None:
    if not 0 <= i <= lay.n:
        raise ValueError("value %d outside [0, %d]" % (i, lay.n))


def encode(lay: CodeLayout, i: int) -> Codeword:
    """Phase 3: codeword for value i.

    Bunch values get the Golomb codeword (unary bunch number, zero edge,
    balanced offset).  Tail values below n get d_t ones plus a balanced
    code over the m' tail slots; n itself is d_t + e_n ones.
    """
    _check_value(lay, i)
    if lay.n == 0:
        return Codeword(0, 0, 0)
    if i < lay.d_t * lay.m:
        q, r = divmod(i, lay.m)
        if r < lay.s:
            return Codeword(q, r, lay.h)  # zero edge + (h-1)-bit offset
        return Codeword(q, r + lay.s, lay.h + 1)
    if i < lay.n:
        j = i - lay.d_t * lay.m
        if j < lay.s1:
            return Codeword(lay.d_t, j, lay.h1 - 1)
        return Codeword(lay.d_t, j + lay.s1, lay.h1)
    return Codeword(lay.d_t + lay.e_n, 0, 0)


def encode_into(lay: CodeLayout, i: int, w: BitWriter) -> None:
    encode(lay, i).write_to(w)


def decode(lay: CodeLayout, r: BitReader) -> int:
    """Inverse of encode; reads exactly one codeword from the stream.

    May peek past the end of the stream (zero-filled), but never
    consumes more bits than the encoder wrote.
    """
    if lay.n == 0:
        return 0
    d = r.count_ones_capped(lay.d_t)
    if d < lay.d_t:
        r.read_bits(1)  # zero edge
        return d * lay.m + balanced_decode(r, lay.m)
    j = r.peek_bits(lay.h1)
    if j >> (lay.h1 - lay.e_n) == (1 << lay.e_n) - 1:
        r.read_bits(lay.e_n)
        return lay.n
    if j < 2 * lay.s1:
        r.read_bits(lay.h1 - 1)
        return lay.m * lay.d_t + j // 2
    r.read_bits(lay.h1)
    return lay.m * lay.d_t + j - lay.s1


def codeword_length(lay: CodeLayout, i: int) -> int:
    """Closed-form codeword length; agrees bit-for-bit with encode."""
    _check_value(lay, i)
    if lay.n == 0:
        return 0
    if i < lay.d_t * lay.m:
        q, r = divmod(i, lay.m)
        return q + (lay.h if r < lay.s else lay.h + 1)
    if i < lay.n:
        j = i - lay.d_t * lay.m
        return lay.d_t + (lay.h1 - 1 if j < lay.s1 else lay.h1)
    return lay.d_t + lay.e_n


def expected_length(p: float, lay: CodeLayout) -> float:
    """Expected codeword length L(p, n) under the bounded geometric
    distribution, via geometric partial sums per bunch (O(d_t) time)."""
    if lay.n == 0:
        return 0.0
    total = 0.0
    for k in range(lay.d_t):
        lo = k * lay.m
        plo = p ** lo
        pcut = p ** (lo + lay.s)
        phi = p ** (lo + lay.m)
        total += (k + lay.h) * (plo - pcut) + (k + lay.h + 1) * (pcut - phi)
    dm = lay.d_t * lay.m
    a = p ** dm
    b = p ** (dm + lay.s1)
    c = p ** lay.n
    total += (lay.d_t + lay.h1 - 1) * (a - b) + (lay.d_t + lay.h1) * (b - c)
    total += (lay.d_t + lay.e_n) * c
    return total


def enumerate_codewords(lay: CodeLayout) -> list[tuple[int, Codeword]]:
    """Full code table in value order."""
    if lay.n + 1 > ENUM_LIMIT:
        raise ValueError("code table with %d entries exceeds limit %d" % (lay.n + 1, ENUM_LIMIT))
    return [(i, encode(lay, i)) for i in range(lay.n + 1)]
