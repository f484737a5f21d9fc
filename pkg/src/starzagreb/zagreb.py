"""General second Zagreb indices, their generating function, and recurrences.

The order-p index is the sum of (d_u·d_v)^p over all edges.  It can be
evaluated three ways: directly from degrees, from the frequency triangle, or
from the double-star triangle with Stirling-number weights.  Because every
edge degree product lies in the product set C_{n-1} = {i·j : 0 <= i, j <= n-1},
the sequence of indices is rational with denominator prod_{c in C_{n-1}}(1 - c·t)
and therefore satisfies a constant-coefficient linear recurrence whose
coefficients are the first-kind coefficients of C_{n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import comtet_first_kind, product_set, star_coefficient
from .graphs import Graph, degrees
from .starseq import StarTriangle

__all__ = [
    "m2_direct",
    "m2_from_frequency",
    "m2_from_star",
    "RationalGF",
    "generating_function",
    "recurrence_coefficients",
    "RecurrenceReport",
    "recurrence_check",
]


def _check_order(p: int) -> None:
    if p < 0:
        raise ValueError(f"order p must be a nonnegative integer, got {p}")


def m2_direct(g: Graph, p: int) -> int:
    """Sum of (d_u·d_v)^p over all edges; p = 0 gives the edge count."""
    _check_order(p)
    degs = degrees(g)
    return sum((degs[u] * degs[v]) ** p for u, v in g.edges)


def m2_from_frequency(freq: StarTriangle, p: int) -> int:
    """Evaluate the index from the frequency triangle: sum ((i+1)(j+1))^p f_{i,j}."""
    _check_order(p)
    return sum(((i + 1) * (j + 1)) ** p * f for i, j, f in freq.items() if f)


def m2_from_star(star: StarTriangle, p: int) -> int:
    """Evaluate the index from the double-star triangle with Stirling weights."""
    _check_order(p)
    return sum(
        star_coefficient(p, i, k) * s for i, k, s in star.items() if s
    )


@dataclass(frozen=True)
class RationalGF:
    """Rational ordinary generating function sum_p M2^(p)·t^p.

    `numerator` lists the coefficients of t^0..t^(r-1) where r is the number
    of denominator roots; `denominator_roots` is the product set C_{n-1},
    each root c contributing a factor (1 - c·t).  The root 0 contributes the
    constant factor 1 but is kept for cardinality bookkeeping.
    """

    numerator: tuple[int, ...]
    denominator_roots: tuple[int, ...]

    def denominator_poly(self) -> list[int]:
        """Expanded denominator prod (1 - c·t), ascending in t.

        This is the first-kind coefficient list of the root set reversed:
        coefficient of t^j is the degree-(r-j) coefficient of prod (z - c).
        """
        return list(reversed(comtet_first_kind(self.denominator_roots)))

    def series(self, terms: int) -> list[int]:
        """First `terms` coefficients of the formal power series, by long division."""
        den = self.denominator_poly()
        out: list[int] = []
        for k in range(terms):
            acc = self.numerator[k] if k < len(self.numerator) else 0
            for i in range(1, min(k, len(den) - 1) + 1):
                acc -= den[i] * out[k - i]
            out.append(acc)
        return out

    def to_json_dict(self) -> dict:
        return {
            "numerator": [str(c) for c in self.numerator],
            "denominator_roots": list(self.denominator_roots),
        }

    def to_latex(self) -> str:
        """Displayed fraction: numerator polynomial over the product of (1 - c t)."""
        terms = []
        for k, c in enumerate(self.numerator):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                coeff = "" if mag == 1 else f"{mag}\\,"
                body = f"{coeff}t" if k == 1 else f"{coeff}t^{{{k}}}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            num = "0"
        else:
            sign, body = terms[0]
            num = ("-" if sign == "-" else "") + body
            for sign, body in terms[1:]:
                num += f" {sign} {body}"
        factors = "".join(
            "(1 - t)" if c == 1 else f"(1 - {c}t)"
            for c in self.denominator_roots
            if c != 0
        )
        den = factors if factors else "1"
        return rf"\frac{{{num}}}{{{den}}}"


def generating_function(g: Graph) -> RationalGF:
    """Rational generating function of the index sequence of a graph (n >= 1).

    The numerator is the convolution of the expanded denominator with the
    index sequence, truncated below the denominator degree; all higher
    convolution coefficients vanish identically, which is what makes the
    series rational.
    """
    if g.n < 1:
        raise ValueError("generating function needs at least one vertex")
    roots = product_set(g.n - 1)
    r = len(roots)
    den = list(reversed(comtet_first_kind(roots)))
    values = [m2_direct(g, p) for p in range(r)]
    numerator = tuple(
        sum(den[i] * values[k - i] for i in range(k + 1)) for k in range(r)
    )
    return RationalGF(numerator, roots)


def recurrence_coefficients(n: int) -> list[int]:
    """First-kind coefficient list of the product set C_{n-1} (n >= 1).

    These are the coefficients of the linear recurrence satisfied by the
    index sequence of every graph on n vertices.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    return comtet_first_kind(product_set(n - 1))


@dataclass(frozen=True)
class RecurrenceReport:
    """Residuals of the recurrence checked on one graph.

    `base_residual` is the order-r instance written with the leading and
    trailing coefficients eliminated: M2^(r) + sum_{i=1}^{r-1} c_i·M2^(i).
    `shifted_residuals` holds (p, residual) for the general form
    sum_{i=0}^{r} c_i·M2^(p-r+i) at every r <= p <= p_max.
    """

    order: int
    coefficients: tuple[int, ...]
    base_residual: int
    shifted_residuals: tuple[tuple[int, int], ...]

    @property
    def violations(self) -> list[tuple[int, int]]:
        out = [(self.order, self.base_residual)] if self.base_residual else []
        out += [(p, res) for p, res in self.shifted_residuals if res]
        return out

    @property
    def passed(self) -> bool:
        return not self.violations


def recurrence_check(g: Graph, p_max: int) -> RecurrenceReport:
    """Verify the linear recurrence on a graph for all orders up to p_max.

    Requires p_max >= r where r is the size of the product set C_{n-1}; the
    report lists, per order p, the exact residual (zero when the identity
    holds).
    """
    coeffs = recurrence_coefficients(g.n)
    r = len(coeffs) - 1
    if p_max < r:
        raise ValueError(f"p_max must be at least {r} for n={g.n}")
    values = [m2_direct(g, p) for p in range(p_max + 1)]
    base = values[r] + sum(coeffs[i] * values[i] for i in range(1, r))
    shifted = tuple(
        (p, sum(coeffs[i] * values[p - r + i] for i in range(r + 1)))
        for p in range(r, p_max + 1)
    )
    return RecurrenceReport(r, tuple(coeffs), base, shifted)
