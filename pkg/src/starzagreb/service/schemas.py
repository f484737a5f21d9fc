"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator


class GraphInput(BaseModel):
    """One graph, given as exactly one of: edge-list text, graph6, family spec."""

    edge_list: str | None = None
    graph6: str | None = None
    family: str | None = Field(
        default=None, description="'name:params', e.g. 'complete:4' or 'double-star:1,2'"
    )

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "GraphInput":
        given = [s for s in (self.edge_list, self.graph6, self.family) if s is not None]
        if len(given) != 1:
            raise ValueError("provide exactly one of edge_list, graph6, family")
        return self


class RandomSpec(BaseModel):
    """Seeded batch of uniform random graphs (each edge present with probability 1/2)."""

    n: int = Field(ge=0)
    count: int = Field(ge=1)
    seed: int


class InfoRequest(BaseModel):
    graph: GraphInput


class InfoResponse(BaseModel):
    n: int
    m: int
    degrees: list[int]
    isolated_vertices: int


class TrianglePayload(BaseModel):
    """Triangle serialization: entry values are decimal strings, exact at any size."""

    n: int
    entries: list[tuple[int, int, str]]


class TrianglesRequest(BaseModel):
    graph: GraphInput
    which: Literal["star", "freq", "both"] = "both"
    render: Literal["csv", "latex"] | None = None


class TrianglesResponse(BaseModel):
    star: TrianglePayload | None = None
    freq: TrianglePayload | None = None
    round_trip_ok: bool | None = None
    rendered: str | None = None


class ZagrebRequest(BaseModel):
    graph: GraphInput
    powers: list[int] = Field(min_length=1)
    cross_check: bool = False

    @model_validator(mode="after")
    def _nonnegative_powers(self) -> "ZagrebRequest":
        if any(p < 0 for p in self.powers):
            raise ValueError("powers must be nonnegative integers")
        return self


class ZagrebValue(BaseModel):
    p: int
    value: str
    direct: str | None = None
    from_frequency: str | None = None
    from_star: str | None = None
    agree: bool | None = None


class ZagrebResponse(BaseModel):
    values: list[ZagrebValue]


class GFRequest(BaseModel):
    graph: GraphInput
    terms: int = Field(default=0, ge=0, description="series preview length")
    latex: bool = False


class GFResponse(BaseModel):
    numerator: list[str]
    denominator_roots: list[int]
    series: list[str] | None = None
    latex: str | None = None


class VerifyRequest(BaseModel):
    graph: GraphInput | None = None
    random: RandomSpec | None = None
    p_max: int | None = Field(default=None, ge=0)
    inject_fault: bool = False

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "VerifyRequest":
        if (self.graph is None) == (self.random is None):
            raise ValueError("provide exactly one of graph, random")
        return self


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    passed: bool
    graphs_checked: int
    checks: list[CheckModel]
    failing_graphs: list[str]


class ServiceInfo(BaseModel):
    name: str
    version: str
