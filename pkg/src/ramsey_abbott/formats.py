"""Byte-level graph serialization.

Three formats, all bit-exact round trips:

``bits``
    ASCII order, newline, then C(n,2) '0'/'1' characters in lexicographic
    pair order, newline.
``dimacs``
    ``p edge n m`` header followed by ``e u v`` lines, 1-indexed. ``c``
    comment lines are skipped when reading.
``json``
    ``{"order": n, "bits": "<upper triangle>"}``. On input a full
    ``"matrix"`` (list of 0/1 rows) is also accepted and must be symmetric.
"""

from __future__ import annotations

import json

from .errors import GraphFormatError, GraphValidationError
from .graph import Graph, pair_count

FORMATS = ("bits", "dimacs", "json")
_ALIASES = {"adjacency-bits": "bits"}


def _norm(fmt: str) -> str:
    fmt = _ALIASES.get(fmt, fmt)
    if fmt not in FORMATS:
        raise ValueError(f"unknown graph format {fmt!r}; choose from {', '.join(FORMATS)}")
    return fmt


def encode(g: Graph, fmt: str = "bits") -> bytes:
    fmt = _norm(fmt)
    if fmt == "bits":
        return f"{g.order}\n{g.edge_string()}\n".encode("ascii")
    if fmt == "dimacs":
        edges = g.edges()
        lines = [f"p edge {g.order} {len(edges)}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
        return ("\n".join(lines) + "\n").encode("ascii")
    doc = {"order": g.order, "bits": g.edge_string()}
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode("ascii")


def decode(data: bytes, fmt: str = "bits") -> Graph:
    fmt = _norm(fmt)
    if isinstance(data, str):
        data = data.encode()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as e:
        raise GraphFormatError("non-ASCII byte", e.start) from None
    if fmt == "bits":
        return _decode_bits(text)
    if fmt == "dimacs":
        return _decode_dimacs(text)
    return _decode_json(text)


def _parse_order(token: str, offset: int) -> int:
    if not token.isdigit():
        raise GraphFormatError(f"expected a vertex count, got {token!r}", offset)
    n = int(token)
    if n < 1:
        raise GraphFormatError("vertex count must be positive", offset)
    return n


def _decode_bits(text: str) -> Graph:
    nl = text.find("\n")
    if nl < 0:
        raise GraphFormatError("missing newline after vertex count", len(text))
    n = _parse_order(text[:nl].strip(), 0)
    start = nl + 1
    want = pair_count(n)
    body = text[start:]
    if body.endswith("\n"):
        body = body[:-1]
    for i, ch in enumerate(body):
        if ch not in "01":
            raise GraphFormatError(f"unexpected character {ch!r} in edge string", start + i)
    if len(body) != want:
        raise GraphFormatError(
            f"edge string has {len(body)} characters, expected {want}", start + min(len(body), want)
        )
    return Graph.from_edge_string(n, body)


def _decode_dimacs(text: str) -> Graph:
    n = None
    declared = 0
    edges = set()
    offset = 0
    for line in text.splitlines(keepends=True):
        here = offset
        offset += len(line)
        fields = line.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", here)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise GraphFormatError("problem line must read 'p edge <n> <m>'", here)
            n = _parse_order(fields[2], here)
            if not fields[3].isdigit():
                raise GraphFormatError(f"bad edge count {fields[3]!r}", here)
            declared = int(fields[3])
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", here)
            if len(fields) != 3 or not (fields[1].isdigit() and fields[2].isdigit()):
                raise GraphFormatError("edge line must read 'e <u> <v>'", here)
            u, v = int(fields[1]), int(fields[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"edge ({u}, {v}) outside 1..{n}", here)
            if u == v:
                raise GraphFormatError(f"self-loop on vertex {u}", here)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", here)
    if n is None:
        raise GraphFormatError("no problem line", 0)
    if len(edges) != declared:
        raise GraphFormatError(f"header declares {declared} edges, found {len(edges)}", len(text))
    return Graph.from_edges(n, sorted(edges))


def _decode_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"invalid JSON: {e.msg}", e.pos) from None
    if not isinstance(doc, dict):
        raise GraphFormatError("top-level JSON value must be an object", 0)
    if "matrix" in doc:
        matrix = doc["matrix"]
        if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
            raise GraphValidationError("'matrix' must be a list of rows")
        g = Graph.from_matrix(matrix)
        if "order" in doc and doc["order"] != g.order:
            raise GraphValidationError(f"'order' is {doc['order']} but matrix has {g.order} rows")
        return g
    order = doc.get("order")
    bits = doc.get("bits")
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise GraphValidationError("'order' must be a positive integer")
    if not isinstance(bits, str):
        raise GraphValidationError("'bits' must be a string of 0/1 characters")
    if len(bits) != pair_count(order) or set(bits) - {"0", "1"}:
        raise GraphValidationError(
            f"'bits' must be {pair_count(order)} characters of 0/1 for order {order}"
        )
    return Graph.from_edge_string(order, bits)


def read_graph(path, fmt: str = "bits") -> Graph:
    with open(path, "rb") as f:
        return decode(f.read(), fmt)


def write_graph(g: Graph, path, fmt: str = "bits") -> None:
    with open(path, "wb") as f:
        f.write(encode(g, fmt))
