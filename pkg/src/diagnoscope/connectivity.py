"""Vertex connectivity, internally disjoint paths, and common-neighbor stats.

Local connectivity between a vertex pair is computed by unit-capacity
maximum flow on the vertex-split digraph (every vertex other than the
terminals becomes an in/out arc of capacity one).  Global connectivity
follows the standard reduction: flows from a fixed vertex to all of its
non-neighbors, then between non-adjacent pairs inside its neighborhood.
All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import List, Tuple

from .graphs import Graph, GraphError, bits_of, delete_vertices


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    delta: int
    maximally_connected: bool
    witness_cut: frozenset


@dataclass(frozen=True)
class DisjointPaths:
    count: int
    paths: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class CommonNeighbors:
    value: int
    pair: Tuple[int, int]


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    full = g.full_mask
    adj = g.adj_masks
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


class _SplitFlow:
    """Unit-vertex-capacity flow network between two terminals of a graph.

    Node 2v is the in-half of vertex v and node 2v+1 its out-half; the
    in-to-out arc has capacity 1 except at the terminals.
    """

    def __init__(self, g: Graph, s: int, t: int):
        self.n = g.n
        self.s_node = 2 * s + 1  # out-node of the source
        self.t_node = 2 * t  # in-node of the sink
        # arc record: [to, remaining capacity, index of reverse arc, original capacity]
        self.adj: List[List[List[int]]] = [[] for _ in range(2 * g.n)]
        big = g.n + 1
        for v in range(g.n):
            cap = big if v in (s, t) else 1
            self._add(2 * v, 2 * v + 1, cap)
        for u, v in g.edges:
            self._add(2 * u + 1, 2 * v, 1)
            self._add(2 * v + 1, 2 * u, 1)

    def _add(self, u: int, v: int, cap: int) -> None:
        self.adj[u].append([v, cap, len(self.adj[v]), cap])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1, 0])

    def max_flow(self) -> int:
        flow = 0
        while self._augment():
            flow += 1
        return flow

    def _augment(self) -> bool:
        parent = {self.s_node: None}
        queue = deque([self.s_node])
        while queue:
            u = queue.popleft()
            if u == self.t_node:
                break
            for idx, arc in enumerate(self.adj[u]):
                if arc[1] > 0 and arc[0] not in parent:
                    parent[arc[0]] = (u, idx)
                    queue.append(arc[0])
        if self.t_node not in parent:
            return False
        node = self.t_node
        while parent[node] is not None:
            u, idx = parent[node]
            arc = self.adj[u][idx]
            arc[1] -= 1
            self.adj[arc[0]][arc[2]][1] += 1
            node = u
        return True

    def flow_paths(self) -> List[Tuple[int, ...]]:
        """Decompose the current flow into internally disjoint terminal paths.

        Unit vertex capacities mean each non-terminal vertex carries at
        most one unit, so greedy walks from the source terminate and the
        walks are internally disjoint.
        """
        carrying = [dict() for _ in range(2 * self.n)]
        for u in range(2 * self.n):
            for arc in self.adj[u]:
                to, remaining, _rev, original = arc
                sent = original - remaining
                if original > 0 and sent > 0:
                    carrying[u][to] = sent
        paths = []
        while carrying[self.s_node]:
            path = [self.s_node // 2]
            node = self.s_node
            while node != self.t_node:
                to = min(carrying[node])
                carrying[node][to] -= 1
                if carrying[node][to] == 0:
                    del carrying[node][to]
                node = to
                if node % 2 == 0 and node != self.t_node:
                    path.append(node // 2)
                    # pass through the in->out arc of this vertex
                    nxt = node + 1
                    carrying[node][nxt] -= 1
                    if carrying[node][nxt] == 0:
                        del carrying[node][nxt]
                    node = nxt
            path.append(self.t_node // 2)
            paths.append(tuple(path))
        return paths


def _local_connectivity(g: Graph, u: int, v: int) -> int:
    return _SplitFlow(g, u, v).max_flow()


def internally_disjoint_paths(g: Graph, u: int, v: int) -> DisjointPaths:
    """Maximum family of pairwise internally disjoint u-v paths.

    The count is the Menger value; the returned family realizes it.
    """
    if u == v:
        raise GraphError("internally disjoint paths require two distinct vertices")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range for graph on {g.n} vertices")
    net = _SplitFlow(g, u, v)
    count = net.max_flow()
    paths = tuple(net.flow_paths())
    return DisjointPaths(count, paths)


def _kappa_value(g: Graph) -> int:
    """Vertex connectivity without witness extraction.

    Conventions: kappa of a complete graph on n vertices is n-1 (including
    kappa(K1) = 0) and kappa of a disconnected graph is 0.
    """
    n = g.n
    if n == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    if _is_complete(g):
        return n - 1
    if not is_connected(g):
        return 0
    degs = g.degrees
    v0 = min(range(n), key=lambda v: (degs[v], v))
    best = degs[v0]
    nbrs = g.adj_masks[v0]
    for u in range(n):
        if u != v0 and not (nbrs >> u) & 1:
            best = min(best, _local_connectivity(g, v0, u))
    nbr_list = list(bits_of(nbrs))
    for i, a in enumerate(nbr_list):
        for b in nbr_list[i + 1:]:
            if not g.has_edge(a, b):
                best = min(best, _local_connectivity(g, a, b))
    return best


def vertex_connectivity(g: Graph) -> ConnectivityReport:
    """Connectivity kappa, minimum degree, and a deterministic witness cut.

    The witness is the lexicographically smallest vertex set of size kappa
    whose removal disconnects the graph or leaves a single vertex; it is
    empty for complete and for already-disconnected graphs.
    """
    kappa = _kappa_value(g)
    delta = g.min_degree
    if _is_complete(g) or kappa == 0:
        return ConnectivityReport(kappa, delta, kappa == delta, frozenset())
    prefix: List[int] = []
    while len(prefix) < kappa:
        for v in range(g.n):
            if v in prefix:
                continue
            shrunk = delete_vertices(g, prefix + [v])
            if _kappa_value(shrunk) <= kappa - len(prefix) - 1:
                prefix.append(v)
                break
        else:  # pragma: no cover - a minimum cut always extends
            raise AssertionError("failed to extend a minimum cut prefix")
    return ConnectivityReport(kappa, delta, kappa == delta, frozenset(prefix))


def is_maximally_connected(g: Graph) -> bool:
    """True iff the vertex connectivity equals the minimum degree."""
    return _kappa_value(g) == g.min_degree


def max_common_neighbors(g: Graph) -> CommonNeighbors:
    """Maximum number of common neighbors over all vertex pairs.

    Returns the value and the lexicographically first achieving pair.
    """
    if g.n < 2:
        raise GraphError("common neighbors require at least two vertices")
    best = -1
    best_pair = (0, 1)
    adj = g.adj_masks
    for u in range(g.n):
        for v in range(u + 1, g.n):
            c = (adj[u] & adj[v]).bit_count()
            if c > best:
                best = c
                best_pair = (u, v)
    return CommonNeighbors(best, best_pair)
