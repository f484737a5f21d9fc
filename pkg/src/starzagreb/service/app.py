"""FastAPI application exposing the calculators as a JSON API.

All computation happens server-side; the CLI is a thin client of these
endpoints.  Exact integers travel as decimal strings so no consumer can
lose precision.
"""

from __future__ import annotations

import random

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..graphs import (
    Graph,
    GraphFormatError,
    degrees,
    family_from_spec,
    isolated_count,
    parse_edge_list,
    parse_graph6,
    random_graph,
)
from ..starseq import (
    StarTriangle,
    frequency_from_star,
    frequency_sequence,
    star_from_frequency,
    star_sequence,
)
from ..verify import run_verification
from ..zagreb import generating_function, m2_direct, m2_from_frequency, m2_from_star
from .schemas import (
    CheckModel,
    GFRequest,
    GFResponse,
    GraphInput,
    InfoRequest,
    InfoResponse,
    ServiceInfo,
    TrianglePayload,
    TrianglesRequest,
    TrianglesResponse,
    VerifyRequest,
    VerifyResponse,
    ZagrebRequest,
    ZagrebResponse,
    ZagrebValue,
)


def build_graph(spec: GraphInput) -> Graph:
    """Materialize a request's graph; bad input maps to HTTP 400."""
    try:
        if spec.edge_list is not None:
            return parse_edge_list(spec.edge_list)
        if spec.graph6 is not None:
            return parse_graph6(spec.graph6)
        return family_from_spec(spec.family)  # type: ignore[arg-type]
    except (GraphFormatError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _payload(t: StarTriangle) -> TrianglePayload:
    return TrianglePayload(**t.to_json_dict())


def create_app() -> FastAPI:
    app = FastAPI(
        title="starzagreb",
        version=__version__,
        description="Exact double-star sequences, frequency sequences, and "
                    "general second Zagreb indices of simple graphs.",
    )

    @app.get("/", response_model=ServiceInfo)
    def root() -> ServiceInfo:
        return ServiceInfo(name="starzagreb", version=__version__)

    @app.post("/info", response_model=InfoResponse)
    def info(req: InfoRequest) -> InfoResponse:
        g = build_graph(req.graph)
        return InfoResponse(
            n=g.n, m=g.m, degrees=degrees(g), isolated_vertices=isolated_count(g)
        )

    @app.post("/triangles", response_model=TrianglesResponse,
              response_model_exclude_none=True)
    def triangles(req: TrianglesRequest) -> TrianglesResponse:
        g = build_graph(req.graph)
        resp = TrianglesResponse()
        star = star_sequence(g) if req.which in ("star", "both") else None
        freq = frequency_sequence(g) if req.which in ("freq", "both") else None
        if star is not None:
            resp.star = _payload(star)
        if freq is not None:
            resp.freq = _payload(freq)
        if star is not None and freq is not None:
            resp.round_trip_ok = (
                star_from_frequency(freq) == star
                and frequency_from_star(star) == freq
            )
        if req.render is not None:
            parts = []
            for label, tri in (("star", star), ("freq", freq)):
                if tri is None:
                    continue
                text = tri.to_csv() if req.render == "csv" else tri.to_latex()
                parts.append(f"# {label}\n{text}" if req.which == "both" else text)
            resp.rendered = "\n".join(parts)
        return resp

    @app.post("/zagreb", response_model=ZagrebResponse,
              response_model_exclude_none=True)
    def zagreb(req: ZagrebRequest) -> ZagrebResponse:
        g = build_graph(req.graph)
        values = []
        star = star_sequence(g) if req.cross_check else None
        freq = frequency_sequence(g) if req.cross_check else None
        for p in req.powers:
            direct = m2_direct(g, p)
            if req.cross_check:
                via_f = m2_from_frequency(freq, p)  # type: ignore[arg-type]
                via_s = m2_from_star(star, p)  # type: ignore[arg-type]
                values.append(ZagrebValue(
                    p=p, value=str(direct), direct=str(direct),
                    from_frequency=str(via_f), from_star=str(via_s),
                    agree=direct == via_f == via_s,
                ))
            else:
                values.append(ZagrebValue(p=p, value=str(direct)))
        return ZagrebResponse(values=values)

    @app.post("/gf", response_model=GFResponse,
              response_model_exclude_none=True)
    def gf(req: GFRequest) -> GFResponse:
        g = build_graph(req.graph)
        if g.n < 1:
            raise HTTPException(status_code=400, detail="need at least one vertex")
        fn = generating_function(g)
        resp = GFResponse(**fn.to_json_dict())
        if req.terms:
            resp.series = [str(c) for c in fn.series(req.terms)]
        if req.latex:
            resp.latex = fn.to_latex()
        return resp

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        if req.graph is not None:
            graphs = [build_graph(req.graph)]
        else:
            assert req.random is not None
            rng = random.Random(req.random.seed)
            graphs = [random_graph(req.random.n, rng) for _ in range(req.random.count)]
        report = run_verification(graphs, p_max=req.p_max,
                                  inject_fault=req.inject_fault)
        return VerifyResponse(
            passed=report.passed,
            graphs_checked=report.graphs_checked,
            checks=[CheckModel(name=c.name, passed=c.passed, detail=c.detail)
                    for c in report.checks],
            failing_graphs=list(report.failing_graphs),
        )

    return app


app = create_app()
