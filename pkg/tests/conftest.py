"""Shared corpora, strategies, and service helpers for the test suite."""

from __future__ import annotations

import asyncio
import random
from itertools import combinations

import httpx
import pytest
from hypothesis import strategies as st

from starzagreb.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    double_star,
    path_graph,
    random_graph,
    star_graph,
)
from starzagreb.starseq import StarTriangle

CORPUS_SEED = 20250810


def book_graph(n: int) -> Graph:
    """Two adjacent hubs joined to every other vertex: degrees n-1, n-1, 2, ..., 2."""
    edges = [(0, 1)] + [(h, w) for w in range(2, n) for h in (0, 1)]
    return Graph(n, tuple(edges))


def family_graphs(max_n: int) -> list[Graph]:
    """Every family constructor instance on at most max_n vertices."""
    graphs: list[Graph] = []
    graphs += [complete_graph(n) for n in range(0, max_n + 1)]
    graphs += [path_graph(n) for n in range(1, max_n + 1)]
    graphs += [cycle_graph(n) for n in range(3, max_n + 1)]
    graphs += [star_graph(k) for k in range(0, max_n)]
    graphs += [
        double_star(a, b)
        for a in range(0, max_n - 1)
        for b in range(a, max_n - 1)
        if a + b + 2 <= max_n
    ]
    return graphs


def random_graphs(count: int, max_n: int, seed: int = CORPUS_SEED) -> list[Graph]:
    """Seeded mix of random graphs with 1..max_n vertices."""
    rng = random.Random(seed)
    return [random_graph(1 + i % max_n, rng) for i in range(count)]


def sparse_graphs(max_n: int) -> list[Graph]:
    """Edgeless graphs and graphs with isolated vertices."""
    graphs = [Graph(n) for n in range(0, max_n + 1)]
    graphs += [Graph(n, ((0, 1),)) for n in range(2, max_n + 1)]
    return graphs


def all_graphs_up_to(max_n: int) -> list[Graph]:
    """Every labelled graph on 0..max_n vertices (feasible for max_n <= 5)."""
    out: list[Graph] = []
    for n in range(max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            out.append(Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1)))
    return out


def triangle_strategy(n: int, bound: int = 9, signed: bool = False):
    """Hypothesis strategy for arbitrary integer triangles with the given n."""
    size = max(n - 1, 0)
    lo = -bound if signed else 0
    rows = st.tuples(*[
        st.tuples(*[st.integers(lo, bound)] * (size - a)) for a in range(size)
    ])
    return rows.map(lambda r: StarTriangle(n, r))


@pytest.fixture(scope="session")
def corpus():
    """The acceptance corpus: all families on <= 7 vertices plus 500 seeded
    random graphs, plus edgeless/isolated-vertex graphs."""
    return family_graphs(7) + sparse_graphs(7) + random_graphs(500, 7)


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Corpus members a generating function is defined for (1 <= n <= 6)."""
    return [g for g in corpus if 1 <= g.n <= 6]


class ServiceClient:
    """Minimal synchronous wrapper over the ASGI app for tests."""

    def __init__(self, app) -> None:
        self._app = app

    def post(self, route: str, payload: dict) -> httpx.Response:
        async def _run() -> httpx.Response:
            transport = httpx.ASGITransport(app=self._app)
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://testserver") as client:
                return await client.post(route, json=payload)

        return asyncio.run(_run())

    def get(self, route: str) -> httpx.Response:
        async def _run() -> httpx.Response:
            transport = httpx.ASGITransport(app=self._app)
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://testserver") as client:
                return await client.get(route)

        return asyncio.run(_run())


@pytest.fixture(scope="session")
def client():
    from starzagreb.service.app import create_app

    return ServiceClient(create_app())
