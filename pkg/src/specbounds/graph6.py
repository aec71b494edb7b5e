"""graph6 reading and writing (single-byte size header, n <= 62)."""
from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .graph import Graph, GraphError

HEADER = ">>graph6<<"
MAX_N = 62


class Graph6Error(GraphError):
    pass


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty graph6 line")
    data = text.encode("ascii", errors="replace")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} at position {pos} outside 63..126")
    n = data[0] - 63
    if n > MAX_N:
        raise Graph6Error(f"multi-byte size header: only n <= {MAX_N} is supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise Graph6Error(f"n={n} needs {nbytes} data bytes, found {len(body)}")
    bits = 0
    for byte in body:
        bits = (bits << 6) | (byte - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad

    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_N:
        raise Graph6Error(f"graph6 writer supports n <= {MAX_N}")
    bits = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (g.adj[i] >> j & 1)
            nbits += 1
    pad = -nbits % 6
    bits <<= pad
    nbits += pad
    out = [chr(n + 63)]
    for shift in range(nbits - 6, -1, -6):
        out.append(chr(((bits >> shift) & 63) + 63))
    return "".join(out)


def read_graph6_file(path: str | Path) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for the nonblank lines of a graph6 file."""
    with open(path, encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            text = raw.strip()
            if text:
                yield lineno, text
