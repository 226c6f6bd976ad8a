"""Immutable simple graphs on vertex set {0..n-1} with BFS distance machinery.

Edges are stored canonically as (min, max) pairs sorted ascending, so two
graphs compare equal exactly when they have the same vertex count and edge
set.  Adjacency is kept both as sorted neighbour tuples and as per-vertex
bitmasks; the bitmasks are what the search kernels and BFS operate on.
"""

from dataclasses import dataclass, field

from .errors import (
    BadParamsError,
    DisconnectedError,
    DuplicateEdgeError,
    NotAnEdgeError,
    SameVertexError,
    SelfLoopError,
    VertexOutOfRangeError,
)

MAX_VERTICES = 4096


@dataclass(frozen=True, repr=False)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False)
    adj_bits: tuple[int, ...] = field(compare=False)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[int, ...], ...]


def bits_of(mask: int):
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _graph_from_edges(n: int, edges: tuple[tuple[int, int], ...]) -> Graph:
    # Trusted path: edges must already be canonical (u < v), sorted, duplicate-free.
    adj: list[list[int]] = [[] for _ in range(n)]
    adj_bits = [0] * n
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
        adj_bits[u] |= 1 << v
        adj_bits[v] |= 1 << u
    for row in adj:
        row.sort()
    return Graph(n, edges, tuple(tuple(row) for row in adj), tuple(adj_bits))


def build_graph(n: int, edge_pairs) -> Graph:
    """Validate and build a simple graph on vertices 0..n-1."""
    if not isinstance(n, int) or n < 1:
        raise BadParamsError(f"vertex count must be a positive integer, got {n!r}")
    if n > MAX_VERTICES:
        raise BadParamsError(f"vertex count {n} exceeds the cap of {MAX_VERTICES}")
    seen: set[tuple[int, int]] = set()
    canon: list[tuple[int, int]] = []
    for pair in edge_pairs:
        u, v = pair
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) uses a vertex outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        canon.append(key)
    canon.sort()
    return _graph_from_edges(n, tuple(canon))


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (vacuously for n = 1)."""
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    adj = g.adj_bits
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        if seen == full:
            return True
    return False


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; raises DisconnectedError if any pair is unreachable."""
    n = g.n
    adj = g.adj_bits
    full = (1 << n) - 1
    rows = []
    for src in range(n):
        dist = [0] * n
        seen = 1 << src
        frontier = seen
        level = 0
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            level += 1
            for v in bits_of(frontier):
                dist[v] = level
            seen |= frontier
        if seen != full:
            raise DisconnectedError(f"vertex {(seen ^ full).bit_length() - 1} unreachable from {src}")
        rows.append(tuple(dist))
    return DistanceMatrix(n, tuple(rows))


def diameter(g: Graph) -> int:
    dm = all_pairs_distances(g)
    return max(max(row) for row in dm.d)


def max_degree(g: Graph) -> int:
    return max((len(row) for row in g.adjacency), default=0)


def edge_vertex_distance(dm: DistanceMatrix, e: tuple[int, int], v: int) -> int:
    """Distance from edge e = {x, y} to vertex v: min(d(x, v), d(y, v))."""
    x, y = e
    if not (0 <= x < dm.n and 0 <= y < dm.n) or dm.d[x][y] != 1:
        raise NotAnEdgeError(f"({x}, {y}) is not an edge")
    if not 0 <= v < dm.n:
        raise VertexOutOfRangeError(f"vertex {v} outside 0..{dm.n - 1}")
    return min(dm.d[x][v], dm.d[y][v])


def non_mutual_neighbors(g: Graph, v1: int, v2: int) -> set[int]:
    """Symmetric difference of the two open neighbourhoods."""
    if not (0 <= v1 < g.n) or not (0 <= v2 < g.n):
        raise VertexOutOfRangeError(f"vertex pair ({v1}, {v2}) outside 0..{g.n - 1}")
    if v1 == v2:
        raise SameVertexError(f"need two distinct vertices, got {v1} twice")
    return set(bits_of(g.adj_bits[v1] ^ g.adj_bits[v2]))
