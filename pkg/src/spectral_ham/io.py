"""graph6 and plain edge-list readers/writers.

graph6 follows the format described in the nauty documentation: a size header
(one byte for n <= 62, ``~`` plus three bytes up to n = 258047) followed by the
upper triangle of the adjacency matrix, column by column, six bits per byte.

The edge-list format is one edge per line, two whitespace-separated 0-based
endpoints.  ``#`` starts a comment.  A comment of the form ``# n = 7`` fixes
the vertex count, which is otherwise one more than the largest endpoint.
"""

from __future__ import annotations

import re
from typing import Iterator

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
_MAX_SHORT = 62
_MAX_LONG = 258047
_N_PRAGMA = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _encode_n(n: int) -> str:
    if n <= _MAX_SHORT:
        return chr(n + 63)
    if n <= _MAX_LONG:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    raise ValueError(f"graph6 writer supports n <= {_MAX_LONG}, got {n}")


def write_graph6(G: Graph, header: bool = False) -> str:
    adj = G.adjacency_bits
    bits = [adj[i] >> j & 1 for j in range(1, G.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[p : p + 6])), 2)) for p in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else "") + _encode_n(G.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) >= 2 and s[1] == "~":
            raise GraphFormatError("8-byte graph6 size header is not supported")
        if len(s) < 4:
            raise GraphFormatError("truncated graph6 size header")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= _MAX_SHORT:
            raise GraphFormatError(f"long size header used for small n={n}")
        pos = 4
    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    data = s[pos:]
    if len(data) != expected:
        raise GraphFormatError(
            f"bit-length mismatch: n={n} needs {expected} data bytes, got {len(data)}"
        )
    value = 0
    for ch in data:
        value = (value << 6) | (ord(ch) - 63)
    pad = expected * 6 - nbits
    if value & ((1 << pad) - 1):
        raise GraphFormatError("non-zero padding bits")
    value >>= pad
    edges = []
    idx = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> idx & 1:
                edges.append((i, j))
            idx -= 1
    return Graph(n, edges)


def iter_graph6(text: str) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every non-blank line; errors carry the line."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except GraphFormatError as exc:
            raise GraphFormatError(str(exc), line=lineno) from None


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    edges = []
    seen = set()
    declared = n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        pragma = _N_PRAGMA.match(raw.strip())
        if pragma and declared is None:
            declared = int(pragma.group(1))
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two endpoints, got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"negative endpoint in {line!r}", line=lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", line=lineno)
        seen.add(key)
        edges.append(key)
    top = max((v for e in edges for v in e), default=-1) + 1
    if declared is None:
        declared = top
    elif declared < top:
        raise GraphFormatError(f"declared n={declared} but endpoint {top - 1} present")
    return Graph(declared, edges)


def write_edge_list(G: Graph) -> str:
    lines = [f"# n = {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.sorted_edges())
    return "\n".join(lines) + "\n"
