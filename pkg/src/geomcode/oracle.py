"""Verification oracles: entropy, Huffman expected length, the top-down
weight-balanced baseline, and the Horibe worst-case bound.

These are independent of the encoder implementation and serve as ground
truth in tests and in the evaluation harness.
"""

import heapq
import math
from bisect import insort
from dataclasses import dataclass
from fractions import Fraction

from .codes import ceil_lg, compute_m, golomb_codeword_length

__all__ = [
    "BoundedGeometric",
    "entropy",
    "huffman_expected_length",
    "huffman_length_multiset",
    "huffman_value_depths",
    "weight_balanced_expected_length",
    "horibe_bound",
    "reconstruct_bunches",
]


def _check_p(p: float) -> None:
    if not 0.5 <= p < 1.0:
        raise ValueError("p must satisfy 0.5 <= p < 1, got %r" % (p,))


@dataclass(frozen=True)
class BoundedGeometric:
    """Geometric distribution with all mass at or above n lumped into n."""

    p: float
    n: int

    def prob(self, i: int) -> float:
        if not 0 <= i <= self.n:
            return 0.0
        if i == self.n:
            return self.p ** self.n
        return self.p ** i * (1.0 - self.p)

    def probs(self) -> list[float]:
        return [self.prob(i) for i in range(self.n + 1)]


def entropy(p: float, n: int) -> float:
    """Entropy H(p, n) of the bounded geometric distribution.

    The value is determined by at most n win/loss trials stopped at the
    first loss, so H equals the per-trial binary entropy times the
    expected number of trials, which is numerically stable for p near 1.
    """
    _check_p(p)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0.0
    q = 1.0 - p
    hb = -(p * math.log2(p) + q * math.log2(q))
    expected_trials = -math.expm1(n * math.log(p)) / q  # (1 - p^n) / (1 - p)
    return hb * expected_trials


def _ascending_leaves(p: float, n: int) -> list[float]:
    """Leaf probabilities sorted ascending: p^i (1-p) for i = n-1..0 with
    p^n inserted where it belongs."""
    q = 1.0 - p
    desc = []
    w = q
    for _ in range(n):
        desc.append(w)
        w *= p
    desc.reverse()  # now ascending in probability
    insort(desc, p ** n)
    return desc


def huffman_expected_length(p: float, n: int) -> float:
    """Optimal expected codeword length L_H(p, n), by the two-queue
    linear-time Huffman construction over the pre-sorted leaves.

    The expected length is the sum of all internal node weights and is
    independent of tie-breaking.
    """
    _check_p(p)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0.0
    q1 = _ascending_leaves(p, n)
    n1 = len(q1)
    q2 = []
    i1 = i2 = 0
    total = 0.0
    for _ in range(n1 - 1):
        if i1 < n1 and (i2 >= len(q2) or q1[i1] <= q2[i2]):
            a = q1[i1]
            i1 += 1
        else:
            a = q2[i2]
            i2 += 1
        if i1 < n1 and (i2 >= len(q2) or q1[i1] <= q2[i2]):
            b = q1[i1]
            i1 += 1
        else:
            b = q2[i2]
            i2 += 1
        w = a + b
        total += w
        q2.append(w)
    return total


def _huffman_depths(p: float, n: int) -> tuple[list[int], int]:
    """Leaf depths of a Huffman tree: (depths of values 0..n-1 in value
    order, depth of the boundary leaf n)."""
    _check_p(p)
    if n == 0:
        return [], 0
    dist = BoundedGeometric(p, n)
    parent = [0] * (2 * n + 1)
    nodes = n + 1  # next internal node id
    heap = [(dist.prob(i), i) for i in range(n + 1)]
    heapq.heapify(heap)
    while len(heap) > 1:
        wa, a = heapq.heappop(heap)
        wb, b = heapq.heappop(heap)
        node = nodes
        nodes += 1
        parent[a] = node
        parent[b] = node
        heapq.heappush(heap, (wa + wb, node))
    root = heap[0][1]
    # node ids only grow during merging, so a single reverse sweep
    # assigns every node's depth from its parent
    depth = [0] * nodes
    for x in range(nodes - 2, -1, -1):
        depth[x] = depth[parent[x]] + 1
    leaf_depths = depth[: n + 1]
    # probabilities decrease with the value, so depths of 0..n-1 are
    # non-decreasing after canonical reordering
    body = sorted(leaf_depths[:n])
    return body, leaf_depths[n]


def huffman_value_depths(p: float, n: int) -> list[int]:
    """Optimal codeword lengths in value order, with leaf n rightmost."""
    body, dn = _huffman_depths(p, n)
    return body + [dn]


def huffman_length_multiset(p: float, n: int) -> list[int]:
    """Sorted multiset of optimal codeword lengths."""
    body, dn = _huffman_depths(p, n)
    return sorted(body + [dn])


def weight_balanced_expected_length(p: float, n: int) -> float:
    """Expected length of the top-down weight-balanced baseline tree:
    full size-m Golomb bunches, then a final node with leaf n as right
    child and a balanced code over the remaining m_1 values as left
    subtree."""
    _check_p(p)
    if n < 2:
        raise ValueError("n must be >= 2")
    m = compute_m(p)
    d1 = (n - 1) // m
    m1 = n - d1 * m  # in [1, m]
    h1 = ceil_lg(m1)
    s1 = (1 << h1) - m1
    dist = BoundedGeometric(p, n)
    total = 0.0
    for i in range(d1 * m):
        total += dist.prob(i) * golomb_codeword_length(i, m)
    for i in range(n - m1, n):
        idx = i - (n - m1)
        extra = 0 if m1 == 1 else (h1 - 1 if idx < s1 else h1)
        total += dist.prob(i) * (d1 + 1 + extra)
    total += dist.prob(n) * (d1 + 1)
    return total


def horibe_bound(p: float, n: int) -> float:
    """Worst-case bound H(p, n) + 2 - (n+1) p^(n-1) (1-p)."""
    _check_p(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    return entropy(p, n) + 2.0 - (n + 1) * p ** (n - 1) * (1.0 - p)


def reconstruct_bunches(value_depths: list[int]) -> tuple[list[int], int] | None:
    """Split value-ordered leaf depths into Golomb-style bunches.

    Bunch k is the left subtree at depth k+1 off the rightmost path, so
    its leaves carry Kraft mass exactly 2^-(k+1).  Returns (bunch sizes,
    tail size) or None if the depths do not fit that shape.  Diagnostic
    helper for comparing optimal tree shapes against bunch structure.
    """
    groups: list[int] = []
    acc = Fraction(0)
    size = 0
    total = Fraction(0)
    for d in value_depths:
        total += Fraction(1, 2 ** d)
    if total != 1:
        return None
    remaining = Fraction(1)
    for d in value_depths:
        acc += Fraction(1, 2 ** d)
        size += 1
        target = Fraction(1, 2 ** (len(groups) + 1))
        if acc == target and remaining - acc > 0:
            groups.append(size)
            remaining -= acc
            acc = Fraction(0)
            size = 0
        elif acc > target:
            # leftover forms the tail; must absorb everything remaining
            break
    # whatever was not grouped is the tail (includes leaf n)
    tail = len(value_depths) - sum(groups)
    if tail <= 0:
        return None
    return groups, tail
