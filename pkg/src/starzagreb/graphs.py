"""Simple undirected graphs: representation, parsers, and standard families.

Vertices are labelled 0..n-1 and isolated vertices are allowed, so the
vertex count is always explicit (a bare edge list cannot express degree-zero
vertices, and several identities depend on them).  Edges are kept as a
sorted tuple of (u, v) pairs with u < v, which fixes the iteration order of
every downstream computation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "Graph",
    "GraphFormatError",
    "parse_edge_list",
    "parse_graph6",
    "encode_graph6",
    "degrees",
    "isolated_count",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "double_star",
    "make_family",
    "family_from_spec",
    "random_graph",
]


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input."""


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1; no loops, no multi-edges."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor list per vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)


def degrees(g: Graph) -> list[int]:
    """Degree of every vertex; isolated vertices report 0."""
    return [len(a) for a in g.adjacency]


def isolated_count(g: Graph) -> int:
    """Number of degree-zero vertices."""
    return sum(1 for a in g.adjacency if not a)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    The first non-comment line must be ``n <count>``; every following line is
    ``u v`` with 0-based labels.  ``#`` starts a comment, blank lines are
    skipped, duplicate edge lines collapse to a single edge.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise GraphFormatError(f"line {lineno}: vertex count must be nonnegative")
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex label") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop on vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: label outside 0..{n - 1}")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    return Graph(n, tuple(edges))


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 line (McKay's format).

    Short form (header byte 63+n, n < 63) and the 3-byte long form
    (63 <= n <= 258047) are accepted; the optional ``>>graph6<<`` prefix is
    stripped.  The body packs the upper-triangle adjacency bits column by
    column, 6 bits per byte, each byte offset by 63.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError:
            raise GraphFormatError("graph6 data is not ASCII") from None
    else:
        text = data
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise GraphFormatError("empty graph6 string")
    vals = [ord(c) - 63 for c in text]
    if any(v < 0 or v > 63 for v in vals):
        raise GraphFormatError("graph6 byte outside 63..126")
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    else:
        if len(vals) >= 2 and vals[1] == 63:
            raise GraphFormatError("vertex counts above 258047 not supported")
        if len(vals) < 4:
            raise GraphFormatError("truncated long-form vertex count")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits: list[int] = []
    for v in body:
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, tuple(edges))


def encode_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 string (inverse of :func:`parse_graph6`)."""
    n = g.n
    if n < 63:
        head = chr(63 + n)
    elif n <= 258047:
        head = "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    else:
        raise ValueError("graph6 supports at most 258047 vertices here")
    present = set(g.edges)
    bits = [1 if (u, v) in present else 0 for v in range(1, n) for u in range(v)]
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3
                  | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]))
        for i in range(0, len(bits), 6)
    )
    return head + body


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete graph needs n >= 0")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def star_graph(leaves: int) -> Graph:
    """Hub vertex 0 joined to `leaves` pendant vertices."""
    if leaves < 0:
        raise ValueError("star needs leaves >= 0")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def double_star(a: int, b: int) -> Graph:
    """Two adjacent centers (vertices 0 and 1) with a and b pendant leaves.

    Has a+b+2 vertices and degree sequence a+1, b+1, 1, ..., 1.
    """
    if a < 0 or b < 0:
        raise ValueError("double star needs a, b >= 0")
    edges = [(0, 1)]
    edges += [(0, w) for w in range(2, a + 2)]
    edges += [(1, w) for w in range(a + 2, a + b + 2)]
    return Graph(a + b + 2, tuple(edges))


_FAMILIES = {
    "complete": (complete_graph, 1),
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "star": (star_graph, 1),
    "double_star": (double_star, 2),
}


def make_family(kind: str, params: tuple[int, ...]) -> Graph:
    """Construct a named family member; kind accepts '-' or '_' separators."""
    key = kind.replace("-", "_")
    if key not in _FAMILIES:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(_FAMILIES)}")
    builder, arity = _FAMILIES[key]
    if len(params) != arity:
        raise ValueError(f"family {kind!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def family_from_spec(spec: str) -> Graph:
    """Build a graph from a 'name:params' string, e.g. 'complete:4' or 'double-star:1,2'."""
    name, sep, rest = spec.partition(":")
    if not sep or not rest:
        raise ValueError(f"family spec must look like 'name:params', got {spec!r}")
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise ValueError(f"non-integer parameter in family spec {spec!r}") from None
    return make_family(name, params)


def random_graph(n: int, rng: random.Random) -> Graph:
    """Uniform model: each of the C(n, 2) edges present independently with probability 1/2.

    Pair order is fixed (u ascending, then v), so a seeded generator yields a
    reproducible graph.
    """
    edges = tuple(
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.getrandbits(1)
    )
    return Graph(n, edges)
