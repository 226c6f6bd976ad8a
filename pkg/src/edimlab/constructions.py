"""Builders for the graph families used by the theorem checkers.

Vertex labelings written out by the builders:

construct_F(k): vertices 0..k-1 are the clique B = {b_1..b_k} (b_i at index
i-1); vertices k..k+2^k-1 are the clique A = {a_S : S subseteq B}, where
a_S sits at index k + bitmask(S) with bit i-1 meaning b_i in S.  b_i and
a_S are adjacent exactly when b_i in S.

construct_H(k): F_k joined with a single extra vertex t at index k + 2^k.

cartesian_path(g, m): the Cartesian product of g with a path on m copies;
copy i (1-based) of vertex v sits at index (i-1)*n + v, labeled "v(i)".
"""

from dataclasses import dataclass

from .errors import BadParamsError, KOutOfRangeError, MTooSmallError, NoEdgesError
from .graph import MAX_VERTICES, Graph, _graph_from_edges, build_graph
from .resolver import min_joint_cover

MAX_FK_K = 11  # 2^k + k (+1 for H_k) must stay within MAX_VERTICES


@dataclass(frozen=True)
class LabeledConstruction:
    graph: Graph
    labels: tuple[str, ...]


def construct_F(k: int) -> LabeledConstruction:
    """Two glued cliques: B of size k and A of size 2^k indexed by subsets of B."""
    if not isinstance(k, int) or not 1 <= k <= MAX_FK_K:
        raise KOutOfRangeError(f"k must be in 1..{MAX_FK_K}, got {k!r}")
    n = k + (1 << k)
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            edges.append((i, j))
    for s in range(1 << k):
        for t in range(s + 1, 1 << k):
            edges.append((k + s, k + t))
        for i in range(k):
            if s >> i & 1:
                edges.append((i, k + s))
    labels = [f"b{i + 1}" for i in range(k)]
    for s in range(1 << k):
        members = ",".join(str(i + 1) for i in range(k) if s >> i & 1)
        labels.append("a{" + members + "}")
    edges.sort()
    return LabeledConstruction(_graph_from_edges(n, tuple(edges)), tuple(labels))


def construct_H(k: int) -> LabeledConstruction:
    """F_k plus one vertex t adjacent to everything."""
    if not isinstance(k, int) or not 1 <= k <= MAX_FK_K:
        raise KOutOfRangeError(f"k must be in 1..{MAX_FK_K}, got {k!r}")
    base = construct_F(k)
    n = base.graph.n + 1
    t = n - 1
    edges = list(base.graph.edges) + [(v, t) for v in range(t)]
    edges.sort()
    return LabeledConstruction(_graph_from_edges(n, tuple(edges)), base.labels + ("t",))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides; g2 shifts up by g1.n."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise BadParamsError(f"join would have {n} vertices, cap is {MAX_VERTICES}")
    shift = g1.n
    edges = list(g1.edges)
    edges.extend((u + shift, v + shift) for u, v in g2.edges)
    edges.extend((u, v + shift) for u in range(g1.n) for v in range(g2.n))
    edges.sort()
    return _graph_from_edges(n, tuple(edges))


def cartesian_path(g: Graph, m: int) -> LabeledConstruction:
    """Cartesian product of g with a path on m copies (m >= 2)."""
    if not isinstance(m, int) or m < 2:
        raise MTooSmallError(f"need at least 2 path copies, got {m!r}")
    n = g.n
    total = n * m
    if total > MAX_VERTICES:
        raise BadParamsError(f"product would have {total} vertices, cap is {MAX_VERTICES}")
    edges = []
    for i in range(m):
        base = i * n
        edges.extend((base + u, base + v) for u, v in g.edges)
        if i + 1 < m:
            edges.extend((base + v, base + n + v) for v in range(n))
    edges.sort()
    labels = tuple(f"{v}({i + 1})" for i in range(m) for v in range(n))
    return LabeledConstruction(_graph_from_edges(total, tuple(edges)), labels)


def product_upper_witness(g: Graph, m: int) -> set[int]:
    """Edge generator of size k+1 for the product of g with an m-copy path.

    Takes the joint-cover witness pair (S, T), puts M = S ∪ T in the first
    copy, and adds the last copy of t = min(M).
    """
    if not isinstance(m, int) or m < 2:
        raise MTooSmallError(f"need at least 2 path copies, got {m!r}")
    if g.m == 0:
        raise NoEdgesError("product witness requires at least one edge")
    _, (s, t) = min_joint_cover(g)
    merged = set(s) | set(t)
    anchor = min(merged)
    witness = set(merged)
    witness.add((m - 1) * g.n + anchor)
    return witness


_FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "complete_bipartite": 2,
    "grid": 2,
}


def standard_family(name: str, params) -> Graph:
    """Named small families: path n, cycle n, complete n, star leaves,
    complete_bipartite a b, grid rows cols."""
    params = tuple(params)
    arity = _FAMILY_ARITY.get(name)
    if arity is None:
        raise BadParamsError(f"unknown family {name!r}; choose from {sorted(_FAMILY_ARITY)}")
    if len(params) != arity or not all(isinstance(p, int) for p in params):
        raise BadParamsError(f"family {name!r} takes {arity} integer parameter(s), got {params!r}")
    if name == "path":
        (n,) = params
        if n < 1:
            raise BadParamsError("path needs n >= 1")
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if name == "cycle":
        (n,) = params
        if n < 3:
            raise BadParamsError("cycle needs n >= 3")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "complete":
        (n,) = params
        if n < 1:
            raise BadParamsError("complete needs n >= 1")
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if name == "star":
        (leaves,) = params
        if leaves < 1:
            raise BadParamsError("star needs at least 1 leaf")
        return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    if name == "complete_bipartite":
        a, b = params
        if a < 1 or b < 1:
            raise BadParamsError("complete_bipartite needs both sides nonempty")
        return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    rows, cols = params
    if rows < 1 or cols < 1:
        raise BadParamsError("grid needs positive dimensions")
    if rows * cols == 1:
        return build_graph(1, [])
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)
