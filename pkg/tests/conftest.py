import collections

from hypothesis import strategies as st

from edimlab import build_graph, standard_family


def path(n):
    return standard_family("path", [n])


def cycle(n):
    return standard_family("cycle", [n])


def complete(n):
    return standard_family("complete", [n])


def star(leaves):
    return standard_family("star", [leaves])


def bfs_oracle(g):
    """Dict-based BFS, independent of the bitmask implementation under test."""
    dists = {}
    for src in range(g.n):
        dist = {src: 0}
        queue = collections.deque([src])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        dists[src] = dist
    return dists


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    """Random connected graph: a random spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        edges.add((j, i))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, sorted(edges | set(extra)))
