"""Brute-force reference implementations, used only for verification.

Each function recomputes a quantity by a deliberately different route from
the production code (literal enumeration instead of binomial products,
power-series long division instead of convolution, reverse-order expansion
instead of incremental) so the two can be compared exactly on small inputs.
The production modules never import this one.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .graphs import Graph

__all__ = [
    "star_count_enumerate",
    "series_divide",
    "comtet_expand_naive",
]


def star_count_enumerate(g: Graph, a: int, b: int) -> int:
    """Count double-star configurations by listing leaf subsets explicitly.

    For every edge {u, v}, enumerate the pairs (A, B) with A a size-a subset
    of N(u)\\{v} and B a size-b subset of N(v)\\{u}; both center assignments
    count when a != b.  A and B may intersect as vertex sets, which is
    exactly what the production binomial products count.  Exponential in
    a and b; intended for graphs with at most ~10 vertices.
    """
    total = 0
    for u, v in g.edges:
        around_u = [w for w in g.adjacency[u] if w != v]
        around_v = [w for w in g.adjacency[v] if w != u]
        total += sum(1 for _ in combinations(around_u, a)
                     for _ in combinations(around_v, b))
        if a != b:
            total += sum(1 for _ in combinations(around_u, b)
                         for _ in combinations(around_v, a))
    return total


def series_divide(numerator: Sequence[int], denominator: Sequence[int],
                  terms: int) -> list[int]:
    """First `terms` coefficients of the power-series quotient, by long division.

    The denominator's constant term must be 1 so every quotient coefficient
    is an integer.
    """
    if not denominator or denominator[0] == 0:
        raise ValueError("denominator has zero constant term")
    if denominator[0] != 1:
        raise ValueError("denominator constant term must be 1")
    out: list[int] = []
    for k in range(terms):
        acc = numerator[k] if k < len(numerator) else 0
        for i in range(1, min(k, len(denominator) - 1) + 1):
            acc -= denominator[i] * out[k - i]
        out.append(acc)
    return out


def comtet_expand_naive(s: Iterable[int]) -> list[int]:
    """Expand prod (z - e) by schoolbook multiplication in reverse element order.

    Same coefficients as the incremental production routine, computed in a
    different evaluation order.
    """
    coeffs = [1]
    for e in sorted(set(s), reverse=True):
        factor = [-e, 1]
        prod = [0] * (len(coeffs) + 1)
        for i, x in enumerate(coeffs):
            for j, y in enumerate(factor):
                prod[i + j] += x * y
        coeffs = prod
    return coeffs
