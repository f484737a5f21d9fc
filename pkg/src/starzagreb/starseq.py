"""Double-star sequences, frequency sequences, and the transforms between them.

Every edge {u, v} of a simple graph is the center edge of double stars: the
count S_{a,b} sums C(d_u-1, a)·C(d_v-1, b) (both center assignments when
a != b) over all edges, while the frequency f_{a,b} counts the edges whose
endpoint degrees are exactly a+1 and b+1.  The two triangles determine each
other through a binomial inverse pair, implemented here as standalone linear
maps on triangles so they can be tested on arbitrary integer tables, not
just graph-realizable ones.
"""

from __future__ import annotations

import io
import csv as _csv
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .exactnum import binomial
from .graphs import Graph, degrees

__all__ = [
    "StarTriangle",
    "star_sequence",
    "frequency_sequence",
    "star_from_frequency",
    "frequency_from_star",
    "handshake_sum",
    "inverse_degree_sum",
]


@dataclass(frozen=True)
class StarTriangle:
    """Upper-triangular integer table indexed by (a, b) with 0 <= a <= b <= n-2.

    `n` is the vertex count of the originating graph; for n <= 1 the triangle
    is empty.  Entries may be negative: the inverse transforms are linear and
    accept tables that no graph realizes.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]  # rows[a][b - a]

    def __post_init__(self) -> None:
        size = max(self.n - 1, 0)
        if len(self.rows) != size:
            raise ValueError(f"expected {size} rows for n={self.n}, got {len(self.rows)}")
        for a, row in enumerate(self.rows):
            if len(row) != size - a:
                raise ValueError(f"row {a} must have {size - a} entries, got {len(row)}")

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], int]) -> "StarTriangle":
        size = max(n - 1, 0)
        return cls(n, tuple(
            tuple(fn(a, b) for b in range(a, size)) for a in range(size)
        ))

    @classmethod
    def from_entries(cls, n: int, entries: dict[tuple[int, int], int]) -> "StarTriangle":
        """Build from a sparse (a, b) -> value mapping; missing entries are 0."""
        size = max(n - 1, 0)
        for a, b in entries:
            if not (0 <= a <= b < size):
                raise ValueError(f"index ({a}, {b}) outside triangle for n={n}")
        return cls.from_function(n, lambda a, b: entries.get((a, b), 0))

    def get(self, a: int, b: int) -> int:
        """Entry at (a, b); symmetric in its arguments, 0 outside the range."""
        if a > b:
            a, b = b, a
        if a < 0 or b > self.n - 2:
            return 0
        return self.rows[a][b - a]

    def items(self) -> Iterator[tuple[int, int, int]]:
        """Yield (a, b, value) in row order: a ascending, then b."""
        for a, row in enumerate(self.rows):
            for off, value in enumerate(row):
                yield a, a + off, value

    def total(self) -> int:
        return sum(v for _, _, v in self.items())

    def to_json_dict(self) -> dict:
        """JSON form with decimal strings so consumers never lose precision."""
        return {"n": self.n, "entries": [[a, b, str(v)] for a, b, v in self.items()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "StarTriangle":
        entries = {(int(a), int(b)): int(v) for a, b, v in data["entries"]}
        return cls.from_entries(int(data["n"]), entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(["a", "b", "value"])
        for a, b, v in self.items():
            writer.writerow([a, b, v])
        return buf.getvalue()

    def to_latex(self) -> str:
        """Triangle as a LaTeX array, one row per first index."""
        size = max(self.n - 1, 0)
        if size == 0:
            return r"\begin{array}{c}\varnothing\end{array}"
        lines = []
        for a, row in enumerate(self.rows):
            cells = [""] * a + [str(v) for v in row]
            lines.append(" & ".join(cells))
        colspec = "r" * size
        body = r" \\ ".join(lines)
        return rf"\begin{{array}}{{{colspec}}} {body} \end{{array}}"


def star_sequence(g: Graph) -> StarTriangle:
    """Full triangle of double-star counts; entry (0, 0) is the edge count."""
    degs = degrees(g)
    size = max(g.n - 1, 0)
    rows = [[0] * (size - a) for a in range(size)]
    for u, v in g.edges:
        bu = [binomial(degs[u] - 1, a) for a in range(size)]
        bv = [binomial(degs[v] - 1, a) for a in range(size)]
        for a in range(size):
            row = rows[a]
            row[0] += bu[a] * bv[a]
            for b in range(a + 1, size):
                row[b - a] += bu[a] * bv[b] + bu[b] * bv[a]
    return StarTriangle(g.n, tuple(tuple(r) for r in rows))


def frequency_sequence(g: Graph) -> StarTriangle:
    """Triangle counting edges by their endpoint degree pair (minus one each)."""
    degs = degrees(g)
    counts: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        i, j = sorted((degs[u] - 1, degs[v] - 1))
        counts[(i, j)] = counts.get((i, j), 0) + 1
    return StarTriangle.from_entries(g.n, counts)


def star_from_frequency(freq: StarTriangle) -> StarTriangle:
    """Forward transform: recover the double-star triangle from frequencies."""
    items = [(i, j, f) for i, j, f in freq.items() if f != 0]

    def entry(a: int, b: int) -> int:
        if a == b:
            return sum(binomial(i, a) * binomial(j, a) * f for i, j, f in items)
        return sum(
            (binomial(i, a) * binomial(j, b) + binomial(i, b) * binomial(j, a)) * f
            for i, j, f in items
        )

    return StarTriangle.from_function(freq.n, entry)


def frequency_from_star(star: StarTriangle) -> StarTriangle:
    """Inverse transform: alternating binomial sums over the count triangle."""
    items = [(i, j, s) for i, j, s in star.items() if s != 0]

    def entry(a: int, b: int) -> int:
        if a == b:
            return sum(
                (-1) ** (i + j) * binomial(i, a) * binomial(j, a) * s
                for i, j, s in items
            )
        return sum(
            (-1) ** (a + b + i + j)
            * (binomial(i, a) * binomial(j, b) + binomial(i, b) * binomial(j, a))
            * s
            for i, j, s in items
        )

    return StarTriangle.from_function(star.n, entry)


def handshake_sum(freq: StarTriangle) -> int:
    """Total of all frequency entries: equals the edge count for genuine graphs."""
    return freq.total()


def inverse_degree_sum(freq: StarTriangle) -> Fraction:
    """Exact sum of 1/(i+1) + 1/(j+1) over entries, weighted by frequency.

    For the frequency triangle of a graph this equals n minus the number of
    isolated vertices.
    """
    total = Fraction(0)
    for i, j, f in freq.items():
        if f:
            total += (Fraction(1, i + 1) + Fraction(1, j + 1)) * f
    return total
