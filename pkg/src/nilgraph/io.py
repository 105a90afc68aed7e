"""Graph file formats: the plain edge list and a JSON form carrying family metadata."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .graph import Graph, format_edge_list, parse_edge_list

JSON_FORMAT = "nilgraph-graph"
JSON_VERSION = 1


def graph_to_json(g: Graph, family: str | None = None, params: dict | None = None) -> str:
    doc = {"format": JSON_FORMAT, "version": JSON_VERSION, "q": g.q, "edges": [list(e) for e in g.edges]}
    if family is not None:
        doc["family"] = {"name": family, "params": dict(params or {})}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def graph_from_json(text: str) -> tuple[Graph, dict | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or doc.get("format") != JSON_FORMAT:
        raise ParseError(f"not a {JSON_FORMAT} document")
    if doc.get("version") != JSON_VERSION:
        raise ParseError(f"unsupported {JSON_FORMAT} version {doc.get('version')!r}")
    try:
        q = int(doc["q"])
        edges = tuple((int(i), int(j)) for i, j in doc["edges"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("expected integer 'q' and a list of [i, j] pairs in 'edges'") from None
    for k, (i, j) in enumerate(edges):
        if i == j:
            raise ParseError(f"self-loop {i} {j} in edge {k + 1}")
    return Graph(q, edges), doc.get("family")


def detect_format(path: str | Path) -> str:
    return "json" if str(path).lower().endswith(".json") else "edges"


def read_graph(path: str | Path, fmt: str = "auto") -> tuple[Graph, dict | None]:
    text = Path(path).read_text(encoding="utf-8")
    if fmt == "auto":
        fmt = detect_format(path)
    if fmt == "json":
        return graph_from_json(text)
    if fmt == "edges":
        return parse_edge_list(text), None
    raise ValueError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, fmt: str = "edges", family: str | None = None, params: dict | None = None) -> str:
    if fmt == "json":
        return graph_to_json(g, family, params)
    return format_edge_list(g)
