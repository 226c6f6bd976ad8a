"""Exhaustive enumeration of small labeled connected graphs plus surveys.

Graphs on n vertices are encoded as adjacency bitmasks: pair (i, j) with
i < j gets bit p in the lexicographic pair ordering, and masks are visited
ascending, so every stream and every example graph is reproducible.
Surveys aggregate per-(dim, edim) counts with the lowest-mask example kept
as a graph6 string; aggregation is order-independent, so multi-process
runs merge to identical output.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._par import mask_blocks, run_blocks
from .errors import BadParamsError, NTooLargeError
from .formats import write_graph6
from .graph import Graph, _graph_from_edges, all_pairs_distances
from .resolver import edge_metric_dimension, metric_dimension

MAX_ENUM_N = 8


@dataclass(frozen=True)
class SurveyRow:
    n: int
    dim: int
    edim: int
    count: int
    example_graph6: str


def _check_enum_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise BadParamsError(f"need a positive vertex count, got {n!r}")
    if n > MAX_ENUM_N:
        raise NTooLargeError(f"exhaustive enumeration capped at n={MAX_ENUM_N}, got {n}")


def _connected_graph_from_mask(n: int, mask: int) -> Graph | None:
    edges = []
    adj_bits = [0] * n
    bit = 1
    for i in range(n):
        for j in range(i + 1, n):
            if mask & bit:
                edges.append((i, j))
                adj_bits[i] |= 1 << j
                adj_bits[j] |= 1 << i
            bit <<= 1
    if n > 1:
        full = (1 << n) - 1
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj_bits[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= frontier
        if seen != full:
            return None
    return _graph_from_edges(n, tuple(edges))


def enumerate_connected_graphs(n: int, distinct_only: bool = False):
    """Yield every labeled connected graph on n vertices in ascending mask order.

    distinct_only keeps only the first graph per (degree sequence, distance
    multiset) signature; this thins obvious relabelings, it is not an
    isomorphism quotient.
    """
    _check_enum_n(n)
    seen_sigs = set()
    for mask in range(1 << (n * (n - 1) // 2)):
        g = _connected_graph_from_mask(n, mask)
        if g is None:
            continue
        if distinct_only:
            dm = all_pairs_distances(g)
            sig = (
                tuple(sorted(len(row) for row in g.adjacency)),
                tuple(sorted(dm.d[i][j] for i in range(n) for j in range(i + 1, n))),
            )
            if sig in seen_sigs:
                continue
            seen_sigs.add(sig)
        yield g


def _survey_block(job) -> dict[tuple[int, int], tuple[int, int]]:
    n, lo, hi = job
    acc: dict[tuple[int, int], tuple[int, int]] = {}
    for mask in range(lo, hi):
        g = _connected_graph_from_mask(n, mask)
        if g is None:
            continue
        key = (metric_dimension(g).value, edge_metric_dimension(g).value)
        got = acc.get(key)
        if got is None:
            acc[key] = (1, mask)
        else:
            acc[key] = (got[0] + 1, got[1])
    return acc


def survey_triples(n: int, threads: int = 1) -> list[SurveyRow]:
    """(dim, edim) census over all labeled connected graphs on n vertices."""
    _check_enum_n(n)
    if n > 7:
        raise NTooLargeError(f"survey capped at n=7, got {n}")
    merged: dict[tuple[int, int], tuple[int, int]] = {}
    for block in run_blocks(_survey_block, mask_blocks(n, threads), threads):
        for key, (count, mask) in block.items():
            got = merged.get(key)
            if got is None:
                merged[key] = (count, mask)
            else:
                merged[key] = (got[0] + count, min(got[1], mask))
    rows = []
    for (dim, edim), (count, mask) in sorted(merged.items()):
        example = write_graph6(_connected_graph_from_mask(n, mask))
        rows.append(SurveyRow(n, dim, edim, count, example))
    return rows


def _ratio_block(job) -> tuple[Fraction, list[int]] | None:
    n, lo, hi = job
    best: Fraction | None = None
    masks: list[int] = []
    for mask in range(lo, hi):
        g = _connected_graph_from_mask(n, mask)
        if g is None:
            continue
        dim = metric_dimension(g).value
        if dim == 0:
            continue
        ratio = Fraction(edge_metric_dimension(g).value, dim)
        if best is None or ratio > best:
            best, masks = ratio, [mask]
        elif ratio == best:
            masks.append(mask)
    if best is None:
        return None
    return best, masks


def ratio_extremes(n: int, threads: int = 1) -> tuple[Fraction, list[str]]:
    """Maximum edim/dim over the n-vertex census, with every witness graph.

    Graphs with dim = 0 (the single-vertex graph) are excluded.  Returns the
    exact ratio and the graph6 encodings of all maximizing graphs.
    """
    _check_enum_n(n)
    if n > 7:
        raise NTooLargeError(f"ratio sweep capped at n=7, got {n}")
    best: Fraction | None = None
    masks: list[int] = []
    for block in run_blocks(_ratio_block, mask_blocks(n, threads), threads):
        if block is None:
            continue
        ratio, block_masks = block
        if best is None or ratio > best:
            best, masks = ratio, list(block_masks)
        elif ratio == best:
            masks.extend(block_masks)
    if best is None:
        raise BadParamsError(f"no graph with dim > 0 exists at n={n}")
    masks.sort()
    return best, [write_graph6(_connected_graph_from_mask(n, mask)) for mask in masks]
