"""Immutable simple undirected graphs with bitmask adjacency.

Vertices are dense integer ids ``0..n-1``.  Every composite constructor
(join, restricted cross products, disjoint union) places the left
operand's ids first and shifts the right operand's ids by the left
vertex count, so layouts are deterministic and goldens stay stable.

Vertex subsets are plain Python ints used as bitmasks; ``Graph.adj_masks``
exposes the adjacency in the same encoding so that exhaustive-search
engines can run on pure integer set algebra.  Graphs are immutable after
construction: every operation returns a new value, which makes them safe
to share across concurrent workers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Edge = Tuple[int, int]

DEFAULT_VERTEX_CAP = 64
CAP_ENV_VAR = "DIAGNOSCOPE_CAP"


class GraphError(ValueError):
    """Invalid graph construction or graph operation."""


class CapExceededError(GraphError):
    """Vertex count exceeds the configured safety cap.

    The brute-force analyses in this package are intentionally
    exponential; the cap keeps accidental huge inputs loud instead of
    silently burning CPU.
    """


def vertex_cap(override: int | None = None) -> int:
    """Resolve the vertex cap: explicit override, else ``DIAGNOSCOPE_CAP``, else 64."""
    if override is not None:
        return override
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_VERTEX_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise GraphError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from exc


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """An immutable simple graph.

    Attributes:
        n: vertex count; vertices are ids 0..n-1.
        edges: sorted tuple of normalized (u, v) pairs with u < v.
        edge_set: frozenset of the same pairs, for membership tests.
        adj_masks: per-vertex neighbor bitmask (bit v of adj_masks[u] is
            set iff {u, v} is an edge).
    """

    __slots__ = ("n", "edges", "edge_set", "adj_masks", "_hash")

    def __init__(self, n: int, edges: Sequence[Edge]):
        # Callers must pass normalized, deduplicated, validated edges;
        # use build_graph for raw input.
        self.n = n
        self.edges = tuple(sorted(edges))
        self.edge_set = frozenset(self.edges)
        masks = [0] * n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.adj_masks = tuple(masks)
        self._hash = hash((n, self.edge_set))

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj_masks[v].bit_count()

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj_masks)

    @property
    def min_degree(self) -> int:
        if self.n == 0:
            raise GraphError("minimum degree is undefined for the empty graph")
        return min(self.degrees)

    @property
    def is_regular(self) -> bool:
        if self.n == 0:
            raise GraphError("regularity is undefined for the empty graph")
        degs = self.degrees
        return min(degs) == max(degs)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edge_set

    def neighbors(self, v: int) -> frozenset:
        return frozenset(bits_of(self.adj_masks[v]))

    def vertex_mask(self, vertices: Iterable[int]) -> int:
        """Bitmask of a vertex subset, validating ids against this graph."""
        mask = 0
        for v in vertices:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for graph on {self.n} vertices")
            mask |= 1 << v
        return mask

    # -- value semantics -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self.n, self.edges))


def bits_of(mask: int):
    """Yield the set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def build_graph(n: int, edge_list: Iterable[Tuple[int, int]], *, cap: int | None = None) -> Graph:
    """Build a graph from a raw edge list, deduplicating undirected pairs.

    Raises GraphError for endpoints out of range or self-loops, naming
    the offending pair, and CapExceededError when n exceeds the cap.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    limit = vertex_cap(cap)
    if n > limit:
        raise CapExceededError(f"graph on {n} vertices exceeds the cap of {limit}")
    seen = set()
    for u, v in edge_list:
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range 0..{n - 1}")
        seen.add(normalize_edge(u, v))
    return Graph(n, sorted(seen))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are the nonadjacent pairs of g."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in g.edge_set
    ]
    return Graph(g.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    return Graph(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every cross edge between the sides."""
    shift = g.n
    base = disjoint_union(g, h)
    cross = [(u, v + shift) for u in range(g.n) for v in range(h.n)]
    return Graph(base.n, list(base.edges) + cross)


def star_r(g: Graph, h: Graph, cross: Iterable[Tuple[int, int]]) -> Graph:
    """Disjoint union plus an arbitrary chosen set of cross edges.

    Cross pairs are given in local ids: (u in V(g), v in V(h)).
    """
    shift = g.n
    base = disjoint_union(g, h)
    cross_edges = set()
    for u, v in cross:
        if not 0 <= u < g.n:
            raise GraphError(f"cross pair ({u}, {v}): left endpoint not a vertex of the left graph")
        if not 0 <= v < h.n:
            raise GraphError(f"cross pair ({u}, {v}): right endpoint not a vertex of the right graph")
        cross_edges.add((u, v + shift))
    return Graph(base.n, list(base.edges) + sorted(cross_edges))


def star_1(g: Graph, h: Graph, assign: Mapping[int, int] | Sequence[int]) -> Graph:
    """Disjoint union plus exactly one cross edge per vertex of g.

    ``assign`` maps every vertex of g (local id) to one vertex of h
    (local id).  A partial assignment is an error.
    """
    if isinstance(assign, Mapping):
        mapping = dict(assign)
    else:
        mapping = {i: t for i, t in enumerate(assign)}
    missing = [v for v in range(g.n) if v not in mapping]
    if missing:
        raise GraphError(f"assignment is not total on the left graph; missing vertices {missing}")
    cross = []
    for u in range(g.n):
        t = mapping[u]
        if not 0 <= t < h.n:
            raise GraphError(f"assignment target {t} for vertex {u} is not a vertex of the right graph")
        cross.append((u, t))
    return star_r(g, h, cross)


def delete_edges(g: Graph, fault_edges: Iterable[Tuple[int, int]]) -> Graph:
    """Same vertex set with the given edges removed; non-edges are an error."""
    drop = set()
    for u, v in fault_edges:
        e = normalize_edge(u, v)
        if e not in g.edge_set:
            raise GraphError(f"cannot delete ({u}, {v}): not an edge of the graph")
        drop.add(e)
    return Graph(g.n, [e for e in g.edges if e not in drop])


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Induced subgraph on ``keep``; also returns the old-to-new id map.

    Kept vertices are renumbered in ascending order of their old ids.
    """
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for graph on {g.n} vertices")
    remap = {old: new for new, old in enumerate(kept)}
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges
        if u in remap and v in remap
    ]
    return Graph(len(kept), edges), remap


def delete_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    """Vertex deletion realized as the induced subgraph on the complement set."""
    drop_set = set(drop)
    sub, _ = induced_subgraph(g, (v for v in range(g.n) if v not in drop_set))
    return sub


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation: old id v becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabeling must be a permutation of the vertex ids")
    return Graph(g.n, [normalize_edge(perm[u], perm[v]) for u, v in g.edges])


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    degrees: Tuple[int, ...]
    is_regular: bool


def degree_profile(g: Graph) -> DegreeProfile:
    """Minimum degree, sorted degree multiset, and regularity flag."""
    if g.n == 0:
        raise GraphError("degree profile is undefined for the empty graph")
    degs = tuple(sorted(g.degrees))
    return DegreeProfile(degs[0], degs, degs[0] == degs[-1])
