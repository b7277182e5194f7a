#!/usr/bin/env python3
"""
Edge-list and graph6 readers/writers.

Edge-list format: first line "n m", then m lines "u v" (0-based). Blank
lines and lines starting with '#' are ignored.

graph6: the standard printable 6-bit encoding of the upper triangle,
column by column, with an optional ">>graph6<<" header.
"""

from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from .errors import GraphError, GraphFormatError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
EDGELIST = "edgelist"
GRAPH6 = "graph6"
FORMATS = (EDGELIST, GRAPH6)


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            lines.append((number, stripped))
    return lines


def _parse_ints(line: str, count: int, number: int, what: str) -> List[int]:
    fields = line.split()
    if len(fields) != count:
        raise GraphFormatError(
            f"expected {what} ({count} integers), got {len(fields)} fields", number
        )
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphFormatError(f"non-integer field in {what}: '{line}'", number)


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse edge-list text.

    Raises:
        GraphFormatError: with the offending line number.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty input, expected header 'n m'", 1)

    header_line, header = lines[0]
    n, m = _parse_ints(header, 2, header_line, "header 'n m'")
    if n < 1:
        raise GraphFormatError(f"vertex count must be at least 1, got {n}", header_line)
    if m < 0:
        raise GraphFormatError(f"edge count must be non-negative, got {m}", header_line)

    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}", last)

    adj = np.zeros((n, n), dtype=bool)
    for number, line in body:
        u, v = _parse_ints(line, 2, number, "edge 'u v'")
        for endpoint in (u, v):
            if not 0 <= endpoint < n:
                raise GraphFormatError(
                    f"endpoint {endpoint} is outside 0..{n - 1}", number
                )
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", number)
        adj[u, v] = adj[v, u] = True
    return Graph(n, adj, name=name)


def format_edge_list(g: Graph) -> str:
    """Edge-list text with edges in lexicographic order."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(
        chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0)
    )


def _six_bit_values(data: str) -> List[int]:
    values = []
    for ch in data:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
        values.append(code)
    return values


def _decode_order(data: str) -> Tuple[int, str]:
    if data.startswith("~~"):
        width, body = 6, data[2:]
    elif data.startswith("~"):
        width, body = 3, data[1:]
    else:
        width, body = 1, data
    if len(body) < width:
        raise GraphFormatError("truncated graph6 order field")
    n = 0
    for value in _six_bit_values(body[:width]):
        n = (n << 6) | value
    return n, body[width:]


def encode_graph6(g: Graph, header: bool = False) -> str:
    """graph6 string of g (no trailing newline)."""
    bits = [
        1 if g.adjacency[i, j] else 0 for j in range(1, g.n) for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    chars = [
        chr(int("".join(map(str, bits[k : k + 6])), 2) + 63)
        for k in range(0, len(bits), 6)
    ]
    prefix = GRAPH6_HEADER if header else ""
    return prefix + _encode_order(g.n) + "".join(chars)


def decode_graph6(text: str, name: str = "") -> Graph:
    """Graph from one graph6 string; the header is optional.

    Raises:
        GraphFormatError: bad characters, wrong length, nonzero padding.
    """
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    if not data:
        raise GraphFormatError("empty graph6 string")

    n, body = _decode_order(data)
    if n < 1:
        raise GraphFormatError("graph6 order must be at least 1")

    bit_count = n * (n - 1) // 2
    expected = -(-bit_count // 6)
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 body has {len(body)} characters, expected {expected} for n={n}"
        )

    bits: List[int] = []
    for value in _six_bit_values(body):
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[bit_count:]):
        raise GraphFormatError("nonzero graph6 padding bits")

    adj = np.zeros((n, n), dtype=bool)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i, j] = adj[j, i] = True
            k += 1
    try:
        return Graph(n, adj, name=name)
    except GraphError as e:
        raise GraphFormatError(str(e)) from e


def detect_format(text: str, path: Optional[Path] = None) -> str:
    """Guess the format: '.g6' suffix, graph6 header, or a single-token line."""
    if path is not None and path.suffix.lower() == ".g6":
        return GRAPH6
    lines = _content_lines(text)
    if lines and (
        lines[0][1].startswith(GRAPH6_HEADER) or len(lines[0][1].split()) == 1
    ):
        return GRAPH6
    return EDGELIST


def parse_graph(text: str, fmt: Optional[str] = None, name: str = "") -> Graph:
    """Parse text in the given (or detected) format."""
    fmt = fmt or detect_format(text)
    if fmt == GRAPH6:
        lines = _content_lines(text)
        if not lines:
            raise GraphFormatError("empty input, expected a graph6 string", 1)
        if len(lines) > 1:
            raise GraphFormatError("expected one graph6 string per file", lines[1][0])
        number, line = lines[0]
        try:
            return decode_graph6(line, name=name)
        except GraphFormatError as e:
            if e.line is not None:
                raise
            raise GraphFormatError(str(e), number) from e
    if fmt == EDGELIST:
        return parse_edge_list(text, name=name)
    raise ValueError(f"unknown graph format: {fmt}")


def read_graph(path: Union[str, Path], fmt: Optional[str] = None) -> Graph:
    """Read a graph file; the graph is named after the file stem."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_graph(text, fmt or detect_format(text, path), name=path.stem)


def format_graph(g: Graph, fmt: str = EDGELIST) -> str:
    if fmt == GRAPH6:
        return encode_graph6(g) + "\n"
    if fmt == EDGELIST:
        return format_edge_list(g)
    raise ValueError(f"unknown graph format: {fmt}")


def write_graph(g: Graph, path: Union[str, Path], fmt: str = EDGELIST) -> None:
    Path(path).write_text(format_graph(g, fmt), encoding="utf-8")


def format_mapping(forward: Iterable[int]) -> str:
    """One line per vertex: 'v phi(v)'."""
    return "".join(f"{v} {image}\n" for v, image in enumerate(forward))
