"""Reading and writing the two shared graph file formats.

Format (a), text edge list::

    n m
    u v
    ...

Format (b), JSON object::

    {"n": 8, "edges": [[0, 1], ...], "labels": {"0": "x1"}}

Parsers reject loops and duplicate edges with the offending position.
"""

from __future__ import annotations

import json
from typing import Optional

from .graph import Graph, GraphError


class GraphFormatError(GraphError):
    """Malformed graph input; the message carries the position."""


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    header = None
    header_no = 0
    for i, raw in enumerate(lines, start=1):
        if raw.strip() and not raw.lstrip().startswith("#"):
            header, header_no = raw, i
            break
    if header is None:
        raise GraphFormatError("empty input: expected a header line 'n m'")
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {header_no}: expected header 'n m', got {header.strip()!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {header_no}: header values must be integers") from None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for i, raw in enumerate(lines[header_no:], start=header_no + 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {i}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {i}: edge endpoints must be integers") from None
        if u == v:
            raise GraphFormatError(f"line {i}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {i}: vertex id out of range 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {i}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        raise GraphFormatError(f"header announced {m} edges but {len(edges)} were given")
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(obj, dict):
        raise GraphFormatError("top-level JSON value must be an object")
    for field in ("n", "edges"):
        if field not in obj:
            raise GraphFormatError(f"missing required field {field!r}")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphFormatError("'n' must be a non-negative integer")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for idx, pair in enumerate(obj["edges"]):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
            raise GraphFormatError(f"edges[{idx}]: expected a pair of integers, got {pair!r}")
        u, v = pair
        if u == v:
            raise GraphFormatError(f"edges[{idx}]: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edges[{idx}]: vertex id out of range 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"edges[{idx}]: duplicate edge [{u}, {v}]")
        seen.add(key)
        edges.append((u, v))
    labels = {}
    for k, lab in (obj.get("labels") or {}).items():
        try:
            v = int(k)
        except ValueError:
            raise GraphFormatError(f"labels: key {k!r} is not a vertex id") from None
        if not (0 <= v < n):
            raise GraphFormatError(f"labels: vertex id {v} out of range 0..{n - 1}")
        labels[v] = str(lab)
    return Graph(n, edges, labels)


def write_graph_json(g: Graph) -> str:
    obj = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    labels = g.labels
    if labels:
        obj["labels"] = {str(v): lab for v, lab in sorted(labels.items())}
    return json.dumps(obj, sort_keys=True) + "\n"


def parse_graph(text: str, fmt: Optional[str] = None) -> Graph:
    """Parse either format; sniffs JSON by a leading '{' when fmt is None."""
    if fmt is None:
        stripped = text.lstrip()
        fmt = "json" if stripped.startswith("{") else "edgelist"
    if fmt == "json":
        return parse_graph_json(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "json":
        return write_graph_json(g)
    if fmt == "edgelist":
        return write_edge_list(g)
    raise GraphFormatError(f"unknown graph format {fmt!r}")
