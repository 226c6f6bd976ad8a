"""Executable checks for the structural results on edge metric dimension.

Every check returns a TheoremReport with verdict "holds", "fails", or
"not_applicable".  A fails verdict always carries a certificate with the
concrete numbers needed to re-check the violation independently;
not_applicable records which precondition excluded the instance.  Passing
instances keep the certificate empty.
"""

import json
from dataclasses import dataclass, field
from math import comb

from ._par import mask_blocks, run_blocks
from .constructions import cartesian_path, construct_F, construct_H, join, product_upper_witness
from .errors import (
    DisconnectedError,
    KOutOfRangeError,
    MTooSmallError,
    NoEdgesError,
    NTooLargeError,
)
from .formats import write_graph6
from .graph import Graph, bits_of, build_graph, diameter, is_connected, max_degree
from .resolver import edge_metric_dimension, is_edge_generator, metric_dimension, min_joint_cover

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not_applicable"

SWEEPABLE_THEOREMS = (
    "ncondition",
    "corollary",
    "vertex_bound",
    "edge_bound",
    "degree_lemmas",
    "join",
    "product",
)

# smallest n whose graphs a sweep should feed to each checker
SWEEP_MIN_N = {
    "ncondition": 3,
    "corollary": 3,
    "vertex_bound": 2,
    "edge_bound": 2,
    "degree_lemmas": 3,
    "join": 2,
    "product": 2,
}


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    graph: str
    verdict: str
    certificate: dict = field(default_factory=dict)

    def to_record(self) -> str:
        cert = json.dumps(self.certificate, sort_keys=True) if self.certificate else "{}"
        return f"{self.theorem_id}\t{self.graph}\t{self.verdict}\t{cert}"


def _graph_id(g: Graph, graph_id: str | None) -> str:
    return graph_id if graph_id is not None else write_graph6(g)


def full_edim_condition(g: Graph) -> tuple[bool, tuple[int, int] | None]:
    """Do all vertex pairs admit a hub neighbour?

    For vertices v1 != v2 a hub is a common neighbour u that is also
    adjacent to every non-mutual neighbour of v1 and v2.  Returns
    (True, None) or (False, first_pair_without_hub).
    """
    if not is_connected(g):
        raise DisconnectedError("condition check requires a connected graph")
    adj = g.adj_bits
    for v1 in range(g.n):
        a1 = adj[v1]
        for v2 in range(v1 + 1, g.n):
            need = a1 ^ adj[v2]
            hub_found = False
            for u in bits_of(a1 & adj[v2]):
                if need & ~adj[u] == 0:
                    hub_found = True
                    break
            if not hub_found:
                return False, (v1, v2)
    return True, None


def _na(theorem_id: str, gid: str, reason: str, **extra) -> TheoremReport:
    cert = {"reason": reason}
    cert.update(extra)
    return TheoremReport(theorem_id, gid, NOT_APPLICABLE, cert)


def check_ncondition_theorem(g: Graph, graph_id: str | None = None) -> TheoremReport:
    """edim = n-1 exactly when every vertex pair has a hub neighbour."""
    gid = _graph_id(g, graph_id)
    if g.n < 2 or g.m < 2:
        return _na("ncondition", gid, "needs n >= 2 and at least 2 edges", n=g.n, m=g.m)
    edim = edge_metric_dimension(g).value
    cond, pair = full_edim_condition(g)
    if (edim == g.n - 1) == cond:
        return TheoremReport("ncondition", gid, HOLDS)
    cert = {"n": g.n, "edim": edim, "condition": cond}
    if pair is not None:
        cert["pair_without_hub"] = list(pair)
    return TheoremReport("ncondition", gid, FAILS, cert)


def check_corollary_diam_triangle(g: Graph, graph_id: str | None = None) -> TheoremReport:
    """edim = n-1 forces diameter <= 2 and every edge inside a triangle."""
    gid = _graph_id(g, graph_id)
    if g.n < 2 or g.m < 2:
        return _na("corollary", gid, "needs n >= 2 and at least 2 edges", n=g.n, m=g.m)
    edim = edge_metric_dimension(g).value
    if edim != g.n - 1:
        return TheoremReport("corollary", gid, HOLDS)
    diam = diameter(g)
    if diam > 2:
        return TheoremReport(
            "corollary", gid, FAILS, {"n": g.n, "edim": edim, "diameter": diam}
        )
    for x, y in g.edges:
        if g.adj_bits[x] & g.adj_bits[y] == 0:
            return TheoremReport(
                "corollary", gid, FAILS,
                {"n": g.n, "edim": edim, "edge_outside_triangle": [x, y]},
            )
    return TheoremReport("corollary", gid, HOLDS)


def check_vertex_count_bound(g: Graph, graph_id: str | None = None) -> TheoremReport:
    """n <= dim + diameter^dim."""
    gid = _graph_id(g, graph_id)
    if g.n < 2:
        return _na("vertex_bound", gid, "needs n >= 2", n=g.n)
    dim = metric_dimension(g).value
    diam = diameter(g)
    bound = dim + diam**dim
    if g.n <= bound:
        return TheoremReport("vertex_bound", gid, HOLDS)
    return TheoremReport(
        "vertex_bound", gid, FAILS,
        {"n": g.n, "dim": dim, "diameter": diam, "bound": bound},
    )


def check_edge_count_bound(g: Graph, graph_id: str | None = None) -> TheoremReport:
    """m <= C(k, 2) + k * diameter^(k-1) + diameter^k with k = edim."""
    gid = _graph_id(g, graph_id)
    if g.m < 1:
        return _na("edge_bound", gid, "needs at least one edge", m=g.m)
    k = edge_metric_dimension(g).value
    diam = diameter(g)
    bound = comb(k, 2) + (k * diam ** (k - 1) if k >= 1 else 0) + diam**k
    if g.m <= bound:
        return TheoremReport("edge_bound", gid, HOLDS)
    return TheoremReport(
        "edge_bound", gid, FAILS,
        {"m": g.m, "edim": k, "diameter": diam, "bound": bound},
    )


def check_max_degree_lemmas(g: Graph, graph_id: str | None = None) -> TheoremReport:
    """A universal vertex forces edim >= n-2; two universal vertices force edim = n-1."""
    gid = _graph_id(g, graph_id)
    if g.n < 3:
        return _na("degree_lemmas", gid, "needs n >= 3", n=g.n)
    if max_degree(g) < g.n - 1:
        return TheoremReport("degree_lemmas", gid, HOLDS)
    edim = edge_metric_dimension(g).value
    universal = sum(1 for row in g.adjacency if len(row) == g.n - 1)
    if edim not in (g.n - 1, g.n - 2):
        return TheoremReport(
            "degree_lemmas", gid, FAILS,
            {"n": g.n, "edim": edim, "universal_vertices": universal},
        )
    if universal >= 2 and edim != g.n - 1:
        return TheoremReport(
            "degree_lemmas", gid, FAILS,
            {"n": g.n, "edim": edim, "universal_vertices": universal},
        )
    return TheoremReport("degree_lemmas", gid, HOLDS)


def check_Fk_theorem(k: int) -> TheoremReport:
    """dim(F_k) = k and edim(F_k) = k + 2^k - 2, by exhaustive solve."""
    if not isinstance(k, int) or not 1 <= k <= 4:
        raise KOutOfRangeError(f"full certification supports k in 1..4, got {k!r}")
    g = construct_F(k).graph
    gid = f"F_{k}"
    dim = metric_dimension(g).value
    edim = edge_metric_dimension(g).value
    want_dim, want_edim = k, k + (1 << k) - 2
    if (dim, edim) == (want_dim, want_edim):
        return TheoremReport("fk", gid, HOLDS)
    return TheoremReport(
        "fk", gid, FAILS,
        {"k": k, "dim": dim, "edim": edim, "expected_dim": want_dim, "expected_edim": want_edim},
    )


def check_Hk_theorem(k: int) -> TheoremReport:
    """dim(H_k) = k+1 and edim(H_k) = k + 2^k = n - 1, by exhaustive solve."""
    if not isinstance(k, int) or not 1 <= k <= 3:
        raise KOutOfRangeError(f"full certification supports k in 1..3, got {k!r}")
    g = construct_H(k).graph
    gid = f"H_{k}"
    dim = metric_dimension(g).value
    edim = edge_metric_dimension(g).value
    want_dim, want_edim = k + 1, k + (1 << k)
    if (dim, edim) == (want_dim, want_edim) and want_edim == g.n - 1:
        return TheoremReport("hk", gid, HOLDS)
    return TheoremReport(
        "hk", gid, FAILS,
        {"k": k, "n": g.n, "dim": dim, "edim": edim,
         "expected_dim": want_dim, "expected_edim": want_edim},
    )


def join_K1_predicate(g: Graph) -> bool:
    """For every x, some u is adjacent to every vertex outside N(x), x included."""
    if not is_connected(g):
        raise DisconnectedError("join predicate requires a connected graph")
    full = (1 << g.n) - 1
    adj = g.adj_bits
    for x in range(g.n):
        rest = full & ~adj[x]
        if not any(rest & ~adj[u] == 0 for u in range(g.n)):
            return False
    return True


def check_join_K1_theorem(g: Graph, graph_id: str | None = None) -> TheoremReport:
    """edim(g + K_1) is n when the neighbourhood-cover predicate holds, else n-1."""
    gid = _graph_id(g, graph_id)
    if g.n < 2:
        return _na("join", gid, "needs n >= 2", n=g.n)
    if not is_connected(g):
        raise DisconnectedError("join theorem requires a connected graph")
    predicate = join_K1_predicate(g)
    joined = join(g, build_graph(1, []))
    edim = edge_metric_dimension(joined).value
    expected = g.n if predicate else g.n - 1
    if edim == expected:
        return TheoremReport("join", gid, HOLDS)
    return TheoremReport(
        "join", gid, FAILS,
        {"n": g.n, "predicate": predicate, "edim_of_join": edim, "expected": expected},
    )


def check_product_theorem(g: Graph, m: int, graph_id: str | None = None) -> TheoremReport:
    """k <= edim(g x P_m) <= k+1 for the joint-cover number k, with the
    constructed upper witness actually generating."""
    if not isinstance(m, int) or m < 2:
        raise MTooSmallError(f"need at least 2 path copies, got {m!r}")
    gid = f"{_graph_id(g, graph_id)} m={m}"
    if g.m == 0:
        raise NoEdgesError("product theorem requires at least one edge")
    k, _ = min_joint_cover(g)
    product = cartesian_path(g, m).graph
    edim = edge_metric_dimension(product).value
    witness = product_upper_witness(g, m)
    witness_ok = is_edge_generator(product, witness)
    if k <= edim <= k + 1 and witness_ok:
        return TheoremReport("product", gid, HOLDS)
    return TheoremReport(
        "product", gid, FAILS,
        {"joint_k": k, "edim_of_product": edim, "m": m,
         "witness": sorted(witness), "witness_generates": witness_ok},
    )


@dataclass(frozen=True)
class SweepSummary:
    theorem_id: str
    n_values: tuple[int, ...]
    graphs: int
    holds: int
    fails: int
    not_applicable: int
    failures: tuple[TheoremReport, ...]
    per_n: tuple[tuple[int, int, int, int, int], ...]  # (n, graphs, holds, fails, na)

    @property
    def ok(self) -> bool:
        return self.fails == 0


def _sweep_block(job) -> tuple[int, int, int, int, list[TheoremReport]]:
    from .experiments import _connected_graph_from_mask

    (n, lo, hi), theorem_id, m = job
    graphs = holds = fails = na = 0
    failures: list[TheoremReport] = []
    for mask in range(lo, hi):
        g = _connected_graph_from_mask(n, mask)
        if g is None:
            continue
        graphs += 1
        if theorem_id == "ncondition":
            report = check_ncondition_theorem(g)
        elif theorem_id == "corollary":
            report = check_corollary_diam_triangle(g)
        elif theorem_id == "vertex_bound":
            report = check_vertex_count_bound(g)
        elif theorem_id == "edge_bound":
            report = check_edge_count_bound(g)
        elif theorem_id == "degree_lemmas":
            report = check_max_degree_lemmas(g)
        elif theorem_id == "join":
            report = check_join_K1_theorem(g)
        elif theorem_id == "product":
            if g.m == 0:
                report = _na("product", write_graph6(g), "needs at least one edge", m=0)
            else:
                report = check_product_theorem(g, m)
        else:
            raise KeyError(f"unknown sweepable theorem {theorem_id!r}")
        if report.verdict == HOLDS:
            holds += 1
        elif report.verdict == FAILS:
            fails += 1
            failures.append(report)
        else:
            na += 1
    return graphs, holds, fails, na, failures


def sweep_theorem(theorem_id: str, n_max: int, threads: int = 1, m: int = 2) -> SweepSummary:
    """Run one checker over every labeled connected graph with n up to n_max."""
    if theorem_id not in SWEEP_MIN_N:
        raise KeyError(f"unknown sweepable theorem {theorem_id!r}")
    if n_max > 7:
        raise NTooLargeError(f"theorem sweeps capped at n=7, got {n_max}")
    n_lo = SWEEP_MIN_N[theorem_id]
    totals = [0, 0, 0, 0]
    per_n = []
    failures: list[TheoremReport] = []
    n_values = [n for n in range(n_lo, n_max + 1)]
    for n in n_values:
        jobs = [(block, theorem_id, m) for block in mask_blocks(n, threads)]
        results = run_blocks(_sweep_block, jobs, threads)
        counts = [0, 0, 0, 0]
        for graphs, holds, fails, na, block_failures in results:
            counts[0] += graphs
            counts[1] += holds
            counts[2] += fails
            counts[3] += na
            failures.extend(block_failures)
        per_n.append((n, *counts))
        for i in range(4):
            totals[i] += counts[i]
    failures.sort(key=lambda r: r.graph)
    return SweepSummary(
        theorem_id, tuple(n_values), totals[0], totals[1], totals[2], totals[3],
        tuple(failures), tuple(per_n),
    )
