"""End-to-end identity checks runnable on arbitrary graphs.

This is the engine behind the service /verify endpoint and the CLI verify
command: it recomputes every identity (triangle inversion both ways, the
three index evaluation routes, handshake and inverse-degree sums, the
generating-function series, numerator vanishing, and the linear recurrence)
and reports one pass/fail line per check, aggregated over all input graphs.
Check order is fixed by name so reports are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import oracle
from .graphs import Graph, encode_graph6, isolated_count
from .starseq import (
    StarTriangle,
    frequency_from_star,
    frequency_sequence,
    handshake_sum,
    inverse_degree_sum,
    star_from_frequency,
    star_sequence,
)
from .zagreb import (
    generating_function,
    m2_direct,
    m2_from_frequency,
    m2_from_star,
    recurrence_check,
)

__all__ = ["CheckOutcome", "VerificationReport", "run_verification"]

# Only graphs this small get the exponential enumeration cross-check.
_ENUMERATION_LIMIT = 8


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    graphs_checked: int
    checks: tuple[CheckOutcome, ...]
    failing_graphs: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _corrupted(star: StarTriangle) -> StarTriangle:
    """Deliberately break one entry (test hook for the failure path)."""
    if star.n < 2:
        return StarTriangle(max(star.n, 2), ((1,),))
    rows = [list(r) for r in star.rows]
    rows[0][0] += 1
    return StarTriangle(star.n, tuple(tuple(r) for r in rows))


def _verify_one(g: Graph, p_max: int | None, fault: bool) -> dict[str, str | None]:
    """Run every check on one graph; map check name -> failure detail (None = pass)."""
    results: dict[str, str | None] = {}
    star = star_sequence(g)
    freq = frequency_sequence(g)
    if fault:
        star = _corrupted(star)

    results["inversion_star_from_frequency"] = (
        None if star_from_frequency(freq) == star
        else "transformed frequency triangle does not match the count triangle"
    )
    results["inversion_frequency_from_star"] = (
        None if frequency_from_star(star) == freq
        else "transformed count triangle does not match the frequency triangle"
    )

    hs = handshake_sum(freq)
    results["handshake_sum"] = (
        None if hs == g.m else f"sum of frequencies {hs} != m = {g.m}"
    )
    ids = inverse_degree_sum(freq)
    expected = g.n - isolated_count(g)
    results["inverse_degree_sum"] = (
        None if ids == expected else f"got {ids}, expected {expected}"
    )

    bad_p = [
        p for p in range(7)
        if not (m2_direct(g, p) == m2_from_frequency(freq, p) == m2_from_star(star, p))
    ]
    results["zagreb_three_routes"] = (
        None if not bad_p else f"routes disagree at p={bad_p}"
    )

    if g.n >= 1:
        gf = generating_function(g)
        order = len(gf.denominator_roots)
        p_hi = max(p_max, 2 * order) if p_max is not None else 2 * order
        series = oracle.series_divide(gf.numerator, gf.denominator_poly(), p_hi + 1)
        bad_p = [p for p in range(p_hi + 1) if series[p] != m2_direct(g, p)]
        results["gf_series_matches_direct"] = (
            None if not bad_p else f"series mismatch at p={bad_p}"
        )

        den = gf.denominator_poly()
        values = [m2_direct(g, p) for p in range(p_hi + 1)]
        tail = [
            (p, sum(den[i] * values[p - i] for i in range(len(den)) if p - i >= 0))
            for p in range(order, p_hi + 1)
        ]
        nonzero = [(p, a) for p, a in tail if a != 0]
        results["gf_numerator_vanishing"] = (
            None if not nonzero else f"convolution coefficient nonzero at {nonzero[:3]}"
        )

        report = recurrence_check(g, p_hi)
        results["recurrence_instances"] = (
            None if report.passed
            else f"violated at (p, residual) = {report.violations[:3]}"
        )

    if g.n <= _ENUMERATION_LIMIT:
        mismatched = [
            (a, b) for a, b, v in star.items()
            if oracle.star_count_enumerate(g, a, b) != v
        ]
        results["star_counts_match_enumeration"] = (
            None if not mismatched else f"enumeration differs at {mismatched[:3]}"
        )

    return results


def run_verification(graphs: Iterable[Graph], p_max: int | None = None,
                     inject_fault: bool = False) -> VerificationReport:
    """Aggregate the full check suite over a corpus of graphs.

    With `inject_fault`, the first graph's count triangle is corrupted before
    checking, which must make the report fail (self-test of the harness).
    """
    per_check: dict[str, list[str]] = {}
    failing: list[str] = []
    count = 0
    for idx, g in enumerate(graphs):
        outcome = _verify_one(g, p_max, fault=inject_fault and idx == 0)
        bad = False
        for name, detail in outcome.items():
            per_check.setdefault(name, [])
            if detail is not None:
                per_check[name].append(f"graph {encode_graph6(g)}: {detail}")
                bad = True
        if bad:
            failing.append(encode_graph6(g))
        count += 1
    checks = tuple(
        CheckOutcome(name, not fails, "; ".join(fails[:3]))
        for name, fails in sorted(per_check.items())
    )
    return VerificationReport(count, checks, tuple(failing))
