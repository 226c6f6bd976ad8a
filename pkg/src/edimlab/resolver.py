"""Exact minimum resolving sets for vertices and for edges.

A landmark set S resolves the vertex set when the distance tuples to S are
pairwise distinct, and resolves the edge set when the edge-to-landmark
distance tuples are pairwise distinct.  The solver reduces both problems to
minimum set cover over object pairs: for each candidate landmark v we
precompute one big-integer bitset whose bit p is set exactly when v
separates the p-th object pair (pairs (i, j) with i < j, indexed
lexicographically).  A set S is a generator iff the union of its bitsets
covers every pair.

Search order contract: the reported witness is the lexicographically least
basis of minimum size, i.e. the first generator met when scanning subset
sizes ascending and combinations lexicographically within each size.  The
implementation reaches the same answer faster: a greedy cover gives an
upper bound, sizes are then refuted downward (generator existence is
monotone in size), and one lexicographic scan at the optimum recovers the
witness.  Suffix unions of the bitsets prune subtrees that cannot cover the
remaining pairs.
"""

from dataclasses import dataclass

from .errors import DisconnectedError, NoEdgesError, NotAnEdgeError
from .graph import DistanceMatrix, Graph, all_pairs_distances, is_connected


@dataclass(frozen=True)
class DimensionResult:
    value: int
    witness: tuple[int, ...]
    all_bases: tuple[tuple[int, ...], ...] | None = None


def vertex_signature(dm: DistanceMatrix, x: int, landmarks) -> tuple[int, ...]:
    """Distances from vertex x to the landmarks, in the given order."""
    return tuple(dm.d[x][v] for v in landmarks)


def edge_signature(dm: DistanceMatrix, e: tuple[int, int], landmarks) -> tuple[int, ...]:
    """Distances from edge e to the landmarks, in the given order."""
    x, y = e
    if not (0 <= x < dm.n and 0 <= y < dm.n) or dm.d[x][y] != 1:
        raise NotAnEdgeError(f"({x}, {y}) is not an edge")
    dx, dy = dm.d[x], dm.d[y]
    return tuple(min(dx[v], dy[v]) for v in landmarks)


def is_vertex_generator(g: Graph, s) -> bool:
    """True when the vertices of g have pairwise distinct signatures over s."""
    if not is_connected(g):
        raise DisconnectedError("generator check requires a connected graph")
    dm = all_pairs_distances(g)
    order = sorted(s)
    sigs = {vertex_signature(dm, x, order) for x in range(g.n)}
    return len(sigs) == g.n


def is_edge_generator(g: Graph, s) -> bool:
    """True when the edges of g have pairwise distinct signatures over s."""
    if not is_connected(g):
        raise DisconnectedError("generator check requires a connected graph")
    dm = all_pairs_distances(g)
    order = sorted(s)
    sigs = {edge_signature(dm, e, order) for e in g.edges}
    return len(sigs) == g.m


def _pair_offsets(n_obj: int) -> list[int]:
    # offsets[i] = index of pair (i, i+1) in the lexicographic pair ordering
    off = [0] * n_obj
    for i in range(1, n_obj):
        off[i] = off[i - 1] + n_obj - i
    return off


def _distinguishing_bitsets(rows, n_obj: int) -> tuple[list[int], int]:
    """rows[v][o] = distance of object o to landmark v.

    Returns per-landmark bitsets over object pairs plus the full-universe
    mask.  Bits are set for separated pairs; we build the complement (pairs
    with equal distance, grouped by value) because equal-distance groups
    are small.
    """
    npairs = n_obj * (n_obj - 1) // 2
    universe = (1 << npairs) - 1
    off = _pair_offsets(n_obj)
    bits = []
    for row in rows:
        buckets: dict[int, list[int]] = {}
        for obj, val in enumerate(row):
            buckets.setdefault(val, []).append(obj)
        same = 0
        for grp in buckets.values():
            if len(grp) < 2:
                continue
            for a in range(len(grp) - 1):
                i = grp[a]
                base = off[i] - i - 1
                for b in range(a + 1, len(grp)):
                    same |= 1 << (base + grp[b])
        bits.append(universe & ~same)
    return bits, universe


def _greedy_cover_size(bits: list[int], universe: int) -> int:
    cover = 0
    size = 0
    while cover != universe:
        best_gain = 0
        best = -1
        for v, b in enumerate(bits):
            gain = (b & ~cover).bit_count()
            if gain > best_gain:
                best_gain, best = gain, v
        cover |= bits[best]
        size += 1
    return size


def _first_cover(bits: list[int], suffix: list[int], universe: int, size: int):
    """Lexicographically least cover of exactly `size` landmarks, or None."""
    n = len(bits)
    chosen: list[int] = []

    def rec(start: int, cover: int, slots: int):
        if cover == universe:
            return tuple(chosen) + tuple(range(start, start + slots))
        if slots == 0:
            return None
        for v in range(start, n - slots + 1):
            # suffix unions shrink as v grows, so the first failure kills the rest
            if cover | suffix[v] != universe:
                return None
            chosen.append(v)
            got = rec(v + 1, cover | bits[v], slots - 1)
            chosen.pop()
            if got is not None:
                return got
        return None

    return rec(0, 0, size)


def _all_covers(bits: list[int], suffix: list[int], universe: int, size: int):
    n = len(bits)
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec(start: int, cover: int, slots: int):
        if slots == 0:
            if cover == universe:
                out.append(tuple(chosen))
            return
        for v in range(start, n - slots + 1):
            if cover | suffix[v] != universe:
                return
            chosen.append(v)
            rec(v + 1, cover | bits[v], slots - 1)
            chosen.pop()

    rec(0, 0, size)
    return out


def _minimum_cover(bits: list[int], universe: int, want_all: bool) -> DimensionResult:
    if universe == 0:
        return DimensionResult(0, (), ((),) if want_all else None)
    total = 0
    for b in bits:
        total |= b
    if total != universe:
        raise AssertionError("landmark bitsets cannot cover the pair universe")
    n = len(bits)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | bits[i]
    opt = _greedy_cover_size(bits, universe)
    witness = None
    s = opt - 1
    while s >= 1:
        found = _first_cover(bits, suffix, universe, s)
        if found is None:
            break
        witness, opt = found, s
        s -= 1
    if witness is None:
        witness = _first_cover(bits, suffix, universe, opt)
    all_bases = tuple(_all_covers(bits, suffix, universe, opt)) if want_all else None
    return DimensionResult(opt, witness, all_bases)


def metric_dimension(g: Graph, want_all_bases: bool = False) -> DimensionResult:
    """Minimum vertex set with pairwise distinct vertex signatures."""
    if not is_connected(g):
        raise DisconnectedError("metric dimension requires a connected graph")
    if g.n == 1:
        return DimensionResult(0, (), ((),) if want_all_bases else None)
    dm = all_pairs_distances(g)
    bits, universe = _distinguishing_bitsets(dm.d, g.n)
    return _minimum_cover(bits, universe, want_all_bases)


def edge_metric_dimension(g: Graph, want_all_bases: bool = False) -> DimensionResult:
    """Minimum vertex set with pairwise distinct edge signatures."""
    if not is_connected(g):
        raise DisconnectedError("edge metric dimension requires a connected graph")
    if g.m <= 1:
        return DimensionResult(0, (), ((),) if want_all_bases else None)
    dm = all_pairs_distances(g)
    edges = g.edges
    rows = [[min(drow[x], drow[y]) for x, y in edges] for drow in dm.d]
    bits, universe = _distinguishing_bitsets(rows, g.m)
    return _minimum_cover(bits, universe, want_all_bases)


def min_joint_cover(g: Graph) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Smallest |S ∪ T| over all minimum vertex bases S and edge bases T.

    Returns (k, (S, T)) with the lexicographically least achieving pair.
    """
    if not is_connected(g):
        raise DisconnectedError("joint cover requires a connected graph")
    if g.m == 0:
        raise NoEdgesError("joint cover requires at least one edge")
    vres = metric_dimension(g, want_all_bases=True)
    eres = edge_metric_dimension(g, want_all_bases=True)
    best = None
    for s in vres.all_bases:
        s_set = set(s)
        for t in eres.all_bases:
            key = (len(s_set | set(t)), s, t)
            if best is None or key < best:
                best = key
    return best[0], (best[1], best[2])
