import random

import pytest

from geomcode.bounded import derive_params, encode, layout
from geomcode.branchfree import (
    M32,
    ceil_lg32,
    encode_branchfree,
    if_then_else,
    is_eq,
    is_gt,
    is_neg,
    is_nonzero,
)


def test_is_neg():
    assert is_neg(-1) == M32
    assert is_neg(0) == 0
    assert is_neg(2 ** 31 - 1) == 0
    assert is_neg(2 ** 31) == M32  # sign bit set as a 32-bit word


def test_is_gt():
    assert is_gt(3, 2) == M32
    assert is_gt(2, 2) == 0
    assert is_gt(0, 2 ** 31 - 1) == 0
    assert is_gt(2 ** 31 - 1, 0) == M32


def test_if_then_else():
    assert if_then_else(M32, 7, 9) == 7
    assert if_then_else(0, 7, 9) == 9
    rng = random.Random(2)
    for _ in range(100):
        x = rng.getrandbits(32)
        assert if_then_else(M32, x, x) == x
        assert if_then_else(0, x, x) == x


def test_masks_are_all_or_nothing():
    rng = random.Random(3)
    for _ in range(5000):
        x = rng.getrandbits(32)
        y = rng.getrandbits(31)
        z = rng.getrandbits(31)
        assert is_neg(x) in (0, M32)
        assert is_nonzero(x) in (0, M32)
        assert is_gt(y, z) in (0, M32)
        assert is_eq(y, z) in (0, M32)
        assert (is_gt(y, z) == M32) == (y > z)
        assert (is_eq(y, z) == M32) == (y == z)


def test_ceil_lg32_examples():
    assert ceil_lg32(1) == 0
    assert ceil_lg32(7) == 3
    for k in range(32):
        assert ceil_lg32(2 ** k) == k
    with pytest.raises(ValueError):
        ceil_lg32(0)


def test_ceil_lg32_against_reference():
    for x in range(1, 2 ** 12):
        assert ceil_lg32(x) == (x - 1).bit_length()
    for k in range(1, 33):
        for x in (2 ** k - 1, 2 ** k):
            if 1 <= x <= 2 ** 32 - 1:
                assert ceil_lg32(x) == (x - 1).bit_length()


def test_encode_equivalence_examples():
    pr = derive_params(0.9)
    lay = layout(pr, 20)
    assert encode_branchfree(lay, 10).bits() == "10011"
    assert encode_branchfree(lay, 20).bits() == "111"
    lay2 = layout(derive_params(0.5), 2)
    assert encode_branchfree(lay2, 0).bits() == "0"


def test_encode_equivalence_grid():
    for j in range(20):
        p = 0.5 + j * (0.499 / 19)
        pr = derive_params(p)
        for n in range(0, 3 * pr.m + 3, max(1, pr.m // 3)):
            lay = layout(pr, n)
            for i in range(n + 1):
                assert encode_branchfree(lay, i) == encode(lay, i), (p, n, i)


def test_encode_equivalence_random():
    rng = random.Random(12345)
    for _ in range(20_000):
        p = 0.5 + 0.4999 * rng.random()
        pr = derive_params(p)
        n = rng.randrange(0, 10 ** 4)
        lay = layout(pr, n)
        i = rng.randrange(0, n + 1)
        assert encode_branchfree(lay, i) == encode(lay, i), (p, n, i)


def test_encode_branchfree_contract():
    lay = layout(derive_params(0.9), 20)
    with pytest.raises(ValueError):
        encode_branchfree(lay, 21)
