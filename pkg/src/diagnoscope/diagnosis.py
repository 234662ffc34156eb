"""Distinguishability predicates and diagnosability decisions.

Two fault-set candidates F1 and F2 are distinguishable when no test
syndrome is simultaneously consistent with both.  The combinatorial
characterizations used here are:

* PMC: some edge joins a vertex outside F1 and F2 to the symmetric
  difference F1 ^ F2.
* MM*: at least one of three patterns exists, each giving a comparator
  whose outcome is forced to differ under the two candidates:
  (1) a vertex outside both sets adjacent to another outside vertex and
      to a vertex of the symmetric difference,
  (2) two vertices of F1 - F2 with a common neighbor outside both sets,
  (3) two vertices of F2 - F1 with a common neighbor outside both sets.

A graph is t-diagnosable under a model when every pair of distinct
candidates of size at most t is distinguishable.  The decision procedure
enumerates candidate pairs grouped by their union U and symmetric
difference D: a pair is indistinguishable exactly when D avoids the
relevant forbidden neighborhoods of V - U, which restricts D to a usually
empty candidate mask and keeps the search sharp.  The enumeration covers
the same quantifier domain as the direct pair scan (tests cross-check the
two), ascending by |U| so the first witness found is small and canonical.

Everything here is a pure function of immutable inputs; results are
deterministic and safe for concurrent use.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from .graphs import Graph, GraphError, bits_of


class DiagModel(enum.Enum):
    """The two supported test models."""

    PMC = "pmc"
    MMSTAR = "mm"


@dataclass(frozen=True)
class IndistinguishableWitness:
    """A pair of candidate fault sets that defeats t-diagnosability."""

    f1: frozenset
    f2: frozenset
    model: DiagModel


@dataclass(frozen=True)
class DiagnosisDecision:
    diagnosable: bool
    witness: Optional[IndistinguishableWitness]


@dataclass(frozen=True)
class MmCheck:
    distinguishable: bool
    condition: Optional[int]  # 1, 2 or 3; None when indistinguishable


def _pair_masks(g: Graph, f1: Iterable[int], f2: Iterable[int]) -> Tuple[int, int]:
    m1 = g.vertex_mask(f1)
    m2 = g.vertex_mask(f2)
    if m1 == m2:
        raise GraphError("distinguishability is undefined for identical fault sets")
    return m1, m2


def distinguishable_pmc(g: Graph, f1: Iterable[int], f2: Iterable[int]) -> bool:
    """PMC distinguishability of two distinct candidate fault sets."""
    m1, m2 = _pair_masks(g, f1, f2)
    outside = g.full_mask & ~(m1 | m2)
    diff = m1 ^ m2
    for v in bits_of(diff):
        if g.adj_masks[v] & outside:
            return True
    return False


def distinguishable_mm(g: Graph, f1: Iterable[int], f2: Iterable[int]) -> MmCheck:
    """MM* distinguishability, reporting which condition fired (1, 2 or 3)."""
    m1, m2 = _pair_masks(g, f1, f2)
    adj = g.adj_masks
    outside = g.full_mask & ~(m1 | m2)
    diff = m1 ^ m2
    for u in bits_of(outside):
        if adj[u] & outside and adj[u] & diff:
            return MmCheck(True, 1)
    for only, tag in ((m1 & ~m2, 2), (m2 & ~m1, 3)):
        verts = list(bits_of(only))
        for i, x in enumerate(verts):
            for y in verts[i + 1:]:
                if adj[x] & adj[y] & outside:
                    return MmCheck(True, tag)
    return MmCheck(False, None)


def _mm_split(adj: Tuple[int, ...], outside: int, d_mask: int, bound: int):
    """Partition d_mask into two halves of size <= bound such that no two
    vertices in the same half share a common neighbor in ``outside``.

    Returns (part1, part2) masks or None.  Conflicting vertices must land
    in different halves, so the conflict graph must be bipartite and some
    2-coloring must balance within the bound.
    """
    verts = list(bits_of(d_mask))
    k = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    conflict: List[List[int]] = [[] for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if adj[verts[i]] & adj[verts[j]] & outside:
                conflict[i].append(j)
                conflict[j].append(i)
    color = [-1] * k
    comps: List[Tuple[int, int, int, int]] = []  # (size0, size1, mask0, mask1)
    for start in range(k):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        masks = [0, 0]
        sizes = [0, 0]
        while stack:
            i = stack.pop()
            masks[color[i]] |= 1 << verts[i]
            sizes[color[i]] += 1
            for j in conflict[i]:
                if color[j] == -1:
                    color[j] = 1 - color[i]
                    stack.append(j)
                elif color[j] == color[i]:
                    return None  # odd conflict cycle: no valid split at any size
        comps.append((sizes[0], sizes[1], masks[0], masks[1]))
    # subset-sum over per-component class sizes to balance the halves
    reachable = [1]
    for a, b, _, _ in comps:
        cur = reachable[-1]
        reachable.append((cur << a) | (cur << b))
    lo = max(0, k - bound)
    target = -1
    for size1 in range(lo, bound + 1):
        if (reachable[-1] >> size1) & 1:
            target = size1
            break
    if target == -1:
        return None
    part1 = 0
    need = target
    for i in range(len(comps) - 1, -1, -1):
        a, b, mask_a, mask_b = comps[i]
        if need - a >= 0 and (reachable[i] >> (need - a)) & 1:
            part1 |= mask_a
            need -= a
        else:
            part1 |= mask_b
            need -= b
    return part1, d_mask ^ part1


def _find_indistinguishable(g: Graph, t: int, model: DiagModel):
    """First indistinguishable pair with both sizes <= t, or None.

    Pairs are grouped by U = F1 | F2 (ascending size, then lexicographic)
    and D = F1 ^ F2 (ascending submask).  For a fixed U with outside
    O = V - U, any indistinguishable D must avoid N(O) under PMC, or
    N(W) under MM* where W is the set of outside vertices that keep an
    outside neighbor; D then ranges over submasks of a candidate mask.
    """
    n = g.n
    if t <= 0 or n == 0:
        return None
    adj = g.adj_masks
    full = g.full_mask
    mm = model is DiagModel.MMSTAR
    for usize in range(1, min(2 * t, n) + 1):
        min_d = max(1, 2 * (usize - t))
        for combo in combinations(range(n), usize):
            u_mask = 0
            for v in combo:
                u_mask |= 1 << v
            o_mask = full ^ u_mask
            blocked = 0
            rest = o_mask
            while rest:
                low = rest & -rest
                rest ^= low
                a = adj[low.bit_length() - 1]
                if mm:
                    if a & o_mask:
                        blocked |= a
                else:
                    blocked |= a
            cands = u_mask & ~blocked
            if cands.bit_count() < min_d:
                continue
            d_mask = 0
            while True:
                d_mask = (d_mask - cands) & cands
                if d_mask == 0:
                    break
                dsize = d_mask.bit_count()
                if dsize < min_d:
                    continue
                s_size = usize - dsize
                if mm:
                    split = _mm_split(adj, o_mask, d_mask, t - s_size)
                    if split is None:
                        continue
                    d1, d2 = split
                else:
                    half = dsize // 2
                    d1 = 0
                    for v in bits_of(d_mask):
                        if half == 0:
                            break
                        d1 |= 1 << v
                        half -= 1
                    d2 = d_mask ^ d1
                s_mask = u_mask ^ d_mask
                f1 = s_mask | d1
                f2 = s_mask | d2
                if f1 > f2:
                    f1, f2 = f2, f1
                return f1, f2
    return None


def is_t_diagnosable(g: Graph, t: int, model: DiagModel) -> DiagnosisDecision:
    """Decide t-diagnosability; on failure return a canonical witness pair."""
    if t < 0:
        raise GraphError(f"fault budget must be nonnegative, got {t}")
    found = _find_indistinguishable(g, t, model)
    if found is None:
        return DiagnosisDecision(True, None)
    f1, f2 = found
    witness = IndistinguishableWitness(
        frozenset(bits_of(f1)), frozenset(bits_of(f2)), model
    )
    return DiagnosisDecision(False, witness)


def diagnosability_cap(g: Graph) -> int:
    """Sound upper bound on diagnosability: min degree and half the order.

    A min-degree vertex v yields the indistinguishable pair (N(v),
    N(v) + v), and when n <= 2t two candidate sets can cover all
    vertices, so t(G) <= min(delta, floor((n - 1) / 2)).
    """
    return min(g.min_degree, (g.n - 1) // 2)


@lru_cache(maxsize=16384)
def _diagnosability_cached(g: Graph, model: DiagModel) -> int:
    cap = diagnosability_cap(g)
    t = 0
    while t < cap and is_t_diagnosable(g, t + 1, model).diagnosable:
        t += 1
    return t


def diagnosability(g: Graph, model: DiagModel) -> int:
    """Largest t for which the graph is t-diagnosable under the model."""
    if g.n == 0:
        raise GraphError("diagnosability is undefined for the empty graph")
    return _diagnosability_cached(g, model)
