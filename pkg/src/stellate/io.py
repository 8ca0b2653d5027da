"""graph6 and JSON graph serialisation.

graph6: a size header (one byte ``n + 63`` for ``n <= 62``, otherwise ``~``
followed by three 6-bit groups) and then the upper triangle of the adjacency
matrix in column-major order (``(0,1), (0,2), (1,2), (0,3), ...``), packed
into 6-bit big-endian groups each offset by 63.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, TextIO

from .errors import GraphParseError
from .graph import MAX_VERTICES, Graph, to_mask

HEADER = ">>graph6<<"


def _groups(data: str, start: int, count: int) -> list[int]:
    out = []
    for k in range(count):
        pos = start + k
        if pos >= len(data):
            raise GraphParseError("truncated graph6 string", pos)
        c = ord(data[pos])
        if not 63 <= c <= 126:
            raise GraphParseError(f"byte {c} outside graph6 range 63..126", pos)
        out.append(c - 63)
    return out


def parse_graph6(text: str) -> Graph:
    data = text.strip("\r\n")
    offset = 0
    if data.startswith(HEADER):
        offset = len(HEADER)
    if offset >= len(data):
        raise GraphParseError("empty graph6 string", offset)
    (first,) = _groups(data, offset, 1)
    if first < 63:
        n = first
        offset += 1
    else:
        if data[offset + 1: offset + 2] == "~":
            raise GraphParseError("graphs with more than 258047 vertices are not supported", offset + 1)
        a, b, c = _groups(data, offset + 1, 3)
        n = (a << 12) | (b << 6) | c
        offset += 4
    if n > MAX_VERTICES:
        raise GraphParseError(f"n = {n} exceeds the {MAX_VERTICES}-vertex envelope", offset)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    groups = _groups(data, offset, nbytes)
    if len(data) > offset + nbytes:
        raise GraphParseError("trailing garbage after graph6 string", offset + nbytes)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            g, r = divmod(k, 6)
            if groups[g] >> (5 - r) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = nbytes * 6 - nbits
    if pad and groups and groups[-1] & ((1 << pad) - 1):
        raise GraphParseError("non-zero padding bits", offset + nbytes - 1)
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    acc = nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return (HEADER if header else "") + "".join(out)


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a newline-delimited graph6 stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# -- JSON graph format: {"n": int, "edges": [[u, v], ...]} with 1-based vertices

def graph_to_json(g: Graph) -> dict:
    obj = {"n": g.n, "edges": [[u + 1, v + 1] for u, v in g.edges()]}
    if g.labels is not None:
        obj["labels"] = list(g.labels)
    return obj


def graph_from_json(obj) -> Graph:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(obj, dict) or not isinstance(obj.get("n"), int):
        raise GraphParseError("JSON graph needs an integer field 'n'")
    n = obj["n"]
    if not 0 <= n <= MAX_VERTICES:
        raise GraphParseError(f"n = {n} outside 0..{MAX_VERTICES}")
    edges = []
    for e in obj.get("edges", []):
        if (not isinstance(e, (list, tuple)) or len(e) != 2
                or not all(isinstance(x, int) and 1 <= x <= n for x in e) or e[0] == e[1]):
            raise GraphParseError(f"bad edge {e!r}")
        edges.append((e[0] - 1, e[1] - 1))
    labels = obj.get("labels")
    return Graph.from_edges(n, edges, labels)


def read_graphs(stream: TextIO) -> Iterator[Graph]:
    """Read graphs from a stream holding either JSON objects (one per line, or
    one document) or graph6 lines."""
    text = stream.read()
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError:
            for line in text.splitlines():
                if line.strip():
                    yield graph_from_json(line)
            return
        for obj in doc if isinstance(doc, list) else [doc]:
            yield graph_from_json(obj)
        return
    yield from read_graph6_stream(text.splitlines())


def vertex_list(mask: int) -> list[int]:
    """1-based sorted vertex list of a bitset, the report convention."""
    return [v + 1 for v in range(mask.bit_length()) if mask >> v & 1]


def mask_from_list(vs: Iterable[int]) -> int:
    return to_mask(v - 1 for v in vs)
