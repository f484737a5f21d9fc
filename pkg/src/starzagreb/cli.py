"""Command-line client for the calculator service.

Every command builds a JSON request and sends it to the HTTP API: either a
remote server given with --server, or an in-process instance of the service
(the default, so no server needs to be running).  Exit codes: 0 success,
1 verification or cross-check failure, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import re
import sys

import httpx

from . import __version__

_EDGE_LIST_HEADER = re.compile(r"^n\s+\d+\s*$")


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _detect_format(text: str) -> str:
    """Edge lists always start with an 'n <count>' header; graph6 never does."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        return "edgelist" if _EDGE_LIST_HEADER.match(line) else "graph6"
    return "graph6"


def _graph_payload(args: argparse.Namespace, parser: argparse.ArgumentParser) -> dict:
    path = getattr(args, "path", None)
    if (args.family is None) == (path is None):
        parser.error("provide exactly one graph source: a path ('-' for stdin) or --family")
    if args.family is not None:
        return {"family": args.family}
    try:
        text = _read_source(path)
    except OSError as exc:
        parser.error(f"cannot read {path!r}: {exc}")
    fmt = args.format if args.format != "auto" else _detect_format(text)
    if fmt == "edgelist":
        return {"edge_list": text}
    return {"graph6": text.strip()}


def _parse_powers(text: str, parser: argparse.ArgumentParser) -> list[int]:
    """Accept '3', '0,2,5', '0..6', or mixes of those."""
    powers: list[int] = []
    try:
        for chunk in text.split(","):
            chunk = chunk.strip()
            if ".." in chunk:
                lo, hi = chunk.split("..", 1)
                powers.extend(range(int(lo), int(hi) + 1))
            else:
                powers.append(int(chunk))
    except ValueError:
        parser.error(f"bad power list {text!r}")
    if not powers or any(p < 0 for p in powers):
        parser.error("powers must be nonnegative integers")
    return powers


def _parse_random(tokens: list[str], parser: argparse.ArgumentParser) -> dict:
    spec: dict[str, int] = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep or key not in ("n", "count", "seed") or key in spec:
            parser.error(f"--random takes n=<N> count=<C> seed=<S>, got {tok!r}")
        try:
            spec[key] = int(val)
        except ValueError:
            parser.error(f"--random value must be an integer: {tok!r}")
    if set(spec) != {"n", "count", "seed"}:
        parser.error("--random needs all of n=, count=, seed=")
    return spec


def _json_of(resp: httpx.Response) -> dict:
    try:
        return resp.json()
    except ValueError:
        return {"detail": resp.text.strip() or f"HTTP {resp.status_code}"}


def _call(server: str | None, route: str, payload: dict) -> tuple[int, dict]:
    if server:
        resp = httpx.post(server.rstrip("/") + route, json=payload, timeout=120.0)
        return resp.status_code, _json_of(resp)

    async def _inproc() -> tuple[int, dict]:
        from .service.app import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://service") as client:
            resp = await client.post(route, json=payload)
            return resp.status_code, _json_of(resp)

    return asyncio.run(_inproc())


def _request(args: argparse.Namespace, route: str, payload: dict) -> dict:
    try:
        status, body = _call(args.server, route, payload)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        raise SystemExit(2)
    if status != 200:
        detail = body.get("detail", body)
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(2)
    return body


def _emit_json(data: dict) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _status_word(passed: bool) -> str:
    word = "PASS" if passed else "FAIL"
    if sys.stdout.isatty() and not os.environ.get("NO_COLOR"):
        return f"\x1b[{'32' if passed else '31'}m{word}\x1b[0m"
    return word


def _triangle_plain(payload: dict) -> str:
    """Right-justified triangle rows, one per first index."""
    size = max(payload["n"] - 1, 0)
    if size == 0:
        return "(empty triangle)"
    grid = {(a, b): v for a, b, v in payload["entries"]}
    widths = [max(len(grid[(a, b)]) for a in range(b + 1)) for b in range(size)]
    lines = []
    for a in range(size):
        cells = [" " * widths[b] if b < a else grid[(a, b)].rjust(widths[b])
                 for b in range(size)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def cmd_info(args, parser) -> int:
    body = _request(args, "/info", {"graph": _graph_payload(args, parser)})
    if args.output == "json":
        _emit_json(body)
    elif args.output == "plain":
        print(f"n = {body['n']}")
        print(f"m = {body['m']}")
        print("degrees =", " ".join(str(d) for d in body["degrees"]))
        print(f"isolated vertices = {body['isolated_vertices']}")
    else:
        parser.error(f"info does not support --output {args.output}")
    return 0


def cmd_triangles(args, parser) -> int:
    payload = {"graph": _graph_payload(args, parser), "which": args.which}
    if args.output in ("csv", "latex"):
        payload["render"] = args.output
    body = _request(args, "/triangles", payload)
    if args.output == "json":
        _emit_json(body)
    elif args.output in ("csv", "latex"):
        print(body["rendered"], end="" if body["rendered"].endswith("\n") else "\n")
    else:
        for label in ("star", "freq"):
            if body.get(label) is None:
                continue
            if args.which == "both":
                print(f"{label}:")
            print(_triangle_plain(body[label]))
        if body.get("round_trip_ok") is not None:
            print(f"round trip: {_status_word(body['round_trip_ok'])}")
    return 0


def cmd_zagreb(args, parser) -> int:
    powers = _parse_powers(args.powers, parser)
    payload = {
        "graph": _graph_payload(args, parser),
        "powers": powers,
        "cross_check": args.cross_check,
    }
    body = _request(args, "/zagreb", payload)
    disagree = [v for v in body["values"] if v.get("agree") is False]
    if args.output == "json":
        _emit_json(body)
    elif args.output == "csv":
        if args.cross_check:
            print("p,direct,from_frequency,from_star,agree")
            for v in body["values"]:
                print(f"{v['p']},{v['direct']},{v['from_frequency']},"
                      f"{v['from_star']},{str(v['agree']).lower()}")
        else:
            print("p,value")
            for v in body["values"]:
                print(f"{v['p']},{v['value']}")
    elif args.output == "plain":
        for v in body["values"]:
            if args.cross_check:
                mark = "ok" if v["agree"] else "MISMATCH"
                print(f"M2^({v['p']}) = {v['value']}   "
                      f"[direct={v['direct']} freq={v['from_frequency']} "
                      f"star={v['from_star']} {mark}]")
            else:
                print(f"M2^({v['p']}) = {v['value']}")
    else:
        parser.error(f"zagreb does not support --output {args.output}")
    if disagree:
        print("error: evaluation routes disagree", file=sys.stderr)
        return 1
    return 0


def cmd_gf(args, parser) -> int:
    payload = {
        "graph": _graph_payload(args, parser),
        "terms": args.terms,
        "latex": args.output == "latex",
    }
    body = _request(args, "/gf", payload)
    if args.output == "json":
        _emit_json(body)
    elif args.output == "latex":
        print(body["latex"])
        if body.get("series"):
            print("% series:", " ".join(body["series"]))
    elif args.output == "plain":
        print("numerator:", " ".join(body["numerator"]))
        print("denominator roots:", " ".join(str(c) for c in body["denominator_roots"]))
        if body.get("series"):
            print("series:", " ".join(body["series"]))
    else:
        parser.error(f"gf does not support --output {args.output}")
    return 0


def cmd_verify(args, parser) -> int:
    payload: dict = {"p_max": args.pmax, "inject_fault": args.inject_fault}
    if args.random is not None:
        if args.family is not None or getattr(args, "path", None) is not None:
            parser.error("--random excludes other graph sources")
        payload["random"] = _parse_random(args.random, parser)
    else:
        payload["graph"] = _graph_payload(args, parser)
    body = _request(args, "/verify", payload)
    if args.output == "json":
        _emit_json(body)
    elif args.output == "plain":
        for check in body["checks"]:
            dots = "." * max(1, 44 - len(check["name"]))
            line = f"{check['name']} {dots} {_status_word(check['passed'])}"
            if not check["passed"] and check["detail"]:
                line += f"  ({check['detail']})"
            print(line)
        print(f"graphs checked: {body['graphs_checked']}")
        if body["failing_graphs"]:
            print("failing graphs (graph6):", " ".join(body["failing_graphs"]))
        print(f"overall: {_status_word(body['passed'])}")
    else:
        parser.error(f"verify does not support --output {args.output}")
    return 0 if body["passed"] else 1


def cmd_serve(args, parser) -> int:
    import uvicorn

    uvicorn.run("starzagreb.service.app:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starzagreb",
        description="Double-star sequences and general second Zagreb indices "
                    "of simple graphs, computed exactly.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--family", metavar="NAME:PARAMS",
                        help="construct a graph, e.g. complete:4, path:5, "
                             "cycle:6, star:4, double-star:1,2")
    parser.add_argument("--random", nargs=3, metavar=("n=N", "count=C", "seed=S"),
                        help="verify only: seeded batch of random graphs")
    parser.add_argument("--format", choices=("auto", "edgelist", "graph6"),
                        default="auto", help="input format for file/stdin sources")
    parser.add_argument("--output", choices=("json", "csv", "latex", "plain"),
                        default="json", help="output format (default json)")
    parser.add_argument("--server", metavar="URL",
                        help="use a running service instead of computing in-process")

    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("path", nargs="?",
                       help="graph file, or '-' for standard input")

    p = sub.add_parser("info", help="vertex/edge counts, degrees, isolated vertices")
    add_source(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("triangles", help="double-star and frequency triangles")
    add_source(p)
    p.add_argument("--which", choices=("star", "freq", "both"), default="both")
    p.set_defaults(func=cmd_triangles)

    p = sub.add_parser("zagreb", help="general second Zagreb indices")
    add_source(p)
    p.add_argument("-p", "--powers", required=True, metavar="LIST",
                   help="orders to evaluate: '1', '0,2,5', or '0..6'")
    p.add_argument("--cross-check", action="store_true",
                   help="evaluate by all three routes and compare")
    p.set_defaults(func=cmd_zagreb)

    p = sub.add_parser("gf", help="rational generating function of the index sequence")
    add_source(p)
    p.add_argument("--terms", type=int, default=0, metavar="K",
                   help="also expand the first K series coefficients")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="run the full identity suite")
    add_source(p)
    p.add_argument("--pmax", type=int, default=None,
                   help="check recurrences at least up to this order")
    p.add_argument("--inject-fault", action="store_true",
                   help="corrupt one triangle first (harness self-test)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
