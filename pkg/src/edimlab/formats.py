"""Edge-list and graph6 text formats, reading and bit-exact writing.

Edge-list files: first meaningful line is "n m", followed by m lines "u v".
Blank lines and lines starting with '#' are ignored everywhere.

graph6: the standard printable-ASCII encoding.  The writer emits the size
field N(n) followed by the upper triangle of the adjacency matrix in
column-major order, packed MSB-first into 6-bit groups offset by 63, with
zero padding.  The reader accepts an optional ">>graph6<<" header and
rejects malformed input, naming the offending character position.
"""

from .errors import FormatError
from .graph import Graph, _graph_from_edges, build_graph

GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    if not lines:
        raise FormatError("empty input: expected a header line 'n m'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
        raise FormatError(f"line {lineno}: expected header 'n m', got {header!r}")
    n, m = int(parts[0]), int(parts[1])
    if m < 0:
        raise FormatError(f"line {lineno}: edge count {m} is negative")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, entry in body:
        parts = entry.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise FormatError(f"line {lineno}: expected edge 'u v', got {entry!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def _g6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    return bytes(
        [126, 126]
        + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)]
    )


def write_graph6(g: Graph) -> str:
    n = g.n
    out = bytearray(_g6_size(n))
    bit = 5
    acc = 0
    for j in range(1, n):
        col = g.adj_bits[j]
        for i in range(j):
            if col >> i & 1:
                acc |= 1 << bit
            bit -= 1
            if bit < 0:
                out.append(acc + 63)
                acc = 0
                bit = 5
    if bit != 5:
        out.append(acc + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):].strip()
    if not line:
        raise FormatError("empty graph6 input")
    data = line.encode("ascii", errors="replace")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise FormatError(f"graph6: invalid character {chr(byte)!r} at position {pos}")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise FormatError("graph6: truncated size field")
            vals = [b - 63 for b in data[2:8]]
            n = 0
            for v in vals:
                n = n << 6 | v
            body = data[8:]
        else:
            if len(data) < 4:
                raise FormatError("graph6: truncated size field")
            n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
            body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n < 1:
        raise FormatError(f"graph6: vertex count {n} out of range")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise FormatError(f"graph6: expected {need} data characters for n={n}, got {len(body)}")
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            group, offset = divmod(bit, 6)
            if (body[group] - 63) >> (5 - offset) & 1:
                edges.append((i, j))
            bit += 1
    while bit < need * 6:
        group, offset = divmod(bit, 6)
        if (body[group] - 63) >> (5 - offset) & 1:
            raise FormatError(f"graph6: nonzero padding bit at position {len(data) - len(body) + group}")
        bit += 1
    edges.sort()
    return _graph_from_edges(n, tuple(edges))


def parse_graph_text(text: str, fmt: str = "auto") -> Graph:
    """Parse either supported format; 'auto' sniffs by the first meaningful line."""
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt != "auto":
        raise FormatError(f"unknown format {fmt!r}")
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return parse_edge_list(text)
        return parse_graph6(text)
    raise FormatError("empty input")
