"""Exact combinatorial scalars and dense integer polynomials.

Everything here is computed over Python's arbitrary-precision integers (and
``fractions.Fraction`` where a ratio is needed), so results never overflow
and equality is always exact.  Polynomials are plain coefficient lists in
ascending degree order; sets of naturals are sorted, duplicate-free tuples.
"""

from __future__ import annotations

import math
import threading
from typing import Iterable

__all__ = [
    "binomial",
    "stirling2",
    "star_coefficient",
    "nat_set",
    "product_set",
    "comtet_first_kind",
    "poly_mul",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero whenever k > n."""
    return math.comb(n, k)


# Triangular memo table; row n holds {n brace 0} .. {n brace n}.  Rows are
# appended fully built and never mutated afterwards, so unlocked reads are
# safe; the lock only serializes growth.
_stirling_rows: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: partitions of an n-set into k blocks."""
    if k < 0 or k > n:
        return 0
    if len(_stirling_rows) <= n:
        with _stirling_lock:
            while len(_stirling_rows) <= n:
                r = len(_stirling_rows)
                prev = _stirling_rows[r - 1]
                row = [0] * (r + 1)
                row[r] = 1
                for j in range(1, r):
                    row[j] = j * prev[j] + prev[j - 1]
                _stirling_rows.append(row)
    return _stirling_rows[n][k]


def star_coefficient(p: int, i: int, k: int) -> int:
    """Weight of the (i, k) double-star count in the order-p degree-power edge sum.

    Equals i!·k!·{p+1 brace i+1}·{p+1 brace k+1}; for p = 0 this collapses to
    1 at (0, 0) and 0 elsewhere, so the order-0 sum is just the edge count.
    """
    return (
        math.factorial(i)
        * math.factorial(k)
        * stirling2(p + 1, i + 1)
        * stirling2(p + 1, k + 1)
    )


def nat_set(values: Iterable[int]) -> tuple[int, ...]:
    """Normalize an iterable of naturals to a sorted, duplicate-free tuple."""
    out = tuple(sorted(set(values)))
    if out and out[0] < 0:
        raise ValueError(f"set elements must be nonnegative, got {out[0]}")
    return out


def product_set(n: int) -> tuple[int, ...]:
    """All pairwise products i·j with 0 <= i, j <= n, as a sorted set."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return nat_set(i * j for i in range(n + 1) for j in range(i, n + 1))


def comtet_first_kind(s: Iterable[int]) -> list[int]:
    """Coefficients of prod_{e in s}(z - e), ascending in degree.

    Entry i is the generalized first-kind coefficient of the set s (for
    s = {0, ..., n-1} these are the signed Stirling numbers of the first
    kind).  The leading coefficient is always 1, and the constant term is 0
    exactly when 0 is a member.  Built by multiplying in one factor (z - e)
    at a time.
    """
    coeffs = [1]
    for e in nat_set(s):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= e * c
        coeffs = nxt
    return coeffs


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    """Dense product of two coefficient lists (ascending degree).

    The empty list is the zero polynomial and annihilates.
    """
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
