"""Exceptional-family constructors, the structural recognizer, and the
standard network generators used by the verification corpus.

The exceptional family collects, for a minimum degree ``delta >= 3``,
five graph shapes built from a small "core" side and a large independent
block, wired so that an adversarial pair of fault-set candidates becomes
indistinguishable under the comparison model.  Family index by shape:

1. a core on delta vertices fully joined to an independent block,
2. a core on delta-1 vertices fully joined to the block, plus an
   adjacent pair; each block vertex attaches to exactly one pair vertex,
3. a core on delta-2 vertices fully joined to the block, plus two
   two-vertex side blocks; each block vertex attaches to exactly one
   vertex of each side block,
4. shape 1 with one edge added inside the independent block and at most
   one core edge removed at each endpoint of that edge,
5. a core on delta+1 vertices; each block vertex attaches to all or all
   but one of the core.

Core blocks are arbitrary spanning subgraphs of the complete graph of
their size, so a ``GammaSpec`` carries explicit edge lists.  Membership
is always judged against the minimum degree of the graph itself.

Construction layout: core-side blocks first in definition order, the
independent block last, ids ascending within a block.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .connectivity import max_common_neighbors
from .graphs import (
    Edge,
    Graph,
    GraphError,
    bits_of,
    build_graph,
    relabel,
)

RECOGNIZER_CAP = 20

FAMILY_MIN_DELTA = 3


@dataclass(frozen=True)
class GammaSpec:
    """Parameters fully determining one exceptional-family instance.

    ``core_edges`` describes the core block (size depends on the family
    index).  Cross-edge fields are local-id pairs and only the fields
    relevant to the family index may be nonempty.
    """

    family: int
    delta: int
    l: int
    core_edges: Tuple[Edge, ...] = ()
    left_pair_edges: Tuple[Edge, ...] = ()   # family 3: first side block
    right_pair_edges: Tuple[Edge, ...] = ()  # family 3: second side block
    core_pair_edges: Tuple[Edge, ...] = ()   # family 2: (core, pair) cross edges
    core_left_edges: Tuple[Edge, ...] = ()   # family 3
    core_right_edges: Tuple[Edge, ...] = ()  # family 3
    left_right_edges: Tuple[Edge, ...] = ()  # family 3
    assign: Tuple[int, ...] = ()             # family 2: pair slot per block vertex
    assign_left: Tuple[int, ...] = ()        # family 3
    assign_right: Tuple[int, ...] = ()       # family 3
    bridge: Tuple[int, int] = (0, 1)         # family 4: block-local edge endpoints
    removed: Tuple[Tuple[int, int], ...] = ()  # family 4: (core id, bridge slot)
    attach: Tuple[Tuple[int, ...], ...] = () # family 5: core ids per block vertex


@dataclass(frozen=True)
class RecognizedDecomposition:
    """Block structure proving membership: a spec plus the vertex relabeling.

    ``vertex_map[i]`` is the input-graph vertex playing layout id ``i`` of
    ``make_gamma(spec)``.
    """

    spec: GammaSpec
    vertex_map: Tuple[int, ...]


@dataclass(frozen=True)
class RecognitionResult:
    member: Optional[bool]  # None when undecided (cap exceeded)
    index: Optional[int]
    witness: Optional[RecognizedDecomposition]
    status: str  # "decided" | "cap_exceeded"


def _core_size(family: int, delta: int) -> int:
    return {1: delta, 2: delta - 1, 3: delta - 2, 4: delta, 5: delta + 1}[family]


def _check_block_edges(edges: Sequence[Edge], size: int, label: str) -> None:
    seen = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"{label}: self-loop ({u}, {v})")
        if not (0 <= u < size and 0 <= v < size):
            raise GraphError(f"{label}: edge ({u}, {v}) out of range for block of size {size}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"{label}: duplicate edge ({u}, {v})")
        seen.add(key)


def make_gamma(spec: GammaSpec) -> Graph:
    """Assemble the graph a spec describes, validating its invariants."""
    fam, delta, l = spec.family, spec.delta, spec.l
    if fam not in (1, 2, 3, 4, 5):
        raise GraphError(f"family index must be 1..5, got {fam}")
    if delta < FAMILY_MIN_DELTA:
        raise GraphError(f"family graphs require delta >= {FAMILY_MIN_DELTA}, got {delta}")
    min_l = delta + 2 if fam == 5 else delta + 1
    if l < min_l:
        raise GraphError(
            f"family {fam} requires independent block size l >= {min_l}, got {l}"
        )
    core = _core_size(fam, delta)
    _check_block_edges(spec.core_edges, core, "core block")
    edges: List[Edge] = list(spec.core_edges)

    if fam == 1:
        base = core
        edges += [(c, base + i) for c in range(core) for i in range(l)]
    elif fam == 2:
        p0, p1 = core, core + 1
        base = core + 2
        edges.append((p0, p1))
        for c, slot in spec.core_pair_edges:
            if not (0 <= c < core and slot in (0, 1)):
                raise GraphError(f"core-pair cross edge ({c}, {slot}) out of range")
            edges.append((c, core + slot))
        if len(spec.assign) != l:
            raise GraphError(
                f"pair assignment must cover all {l} independent vertices, got {len(spec.assign)}"
            )
        for i, slot in enumerate(spec.assign):
            if slot not in (0, 1):
                raise GraphError(f"pair assignment slot {slot} invalid for vertex {i}")
            edges.append((base + i, core + slot))
        edges += [(c, base + i) for c in range(core) for i in range(l)]
    elif fam == 3:
        _check_block_edges(spec.left_pair_edges, 2, "left side block")
        _check_block_edges(spec.right_pair_edges, 2, "right side block")
        left0, core0, right0 = 0, 2, 2 + core
        base = 4 + core
        edges = []
        edges += [(left0 + u, left0 + v) for u, v in spec.left_pair_edges]
        edges += [(core0 + u, core0 + v) for u, v in spec.core_edges]
        edges += [(right0 + u, right0 + v) for u, v in spec.right_pair_edges]
        for c, s in spec.core_left_edges:
            if not (0 <= c < core and s in (0, 1)):
                raise GraphError(f"core-left cross edge ({c}, {s}) out of range")
            edges.append((core0 + c, left0 + s))
        for c, s in spec.core_right_edges:
            if not (0 <= c < core and s in (0, 1)):
                raise GraphError(f"core-right cross edge ({c}, {s}) out of range")
            edges.append((core0 + c, right0 + s))
        for a, b in spec.left_right_edges:
            if not (a in (0, 1) and b in (0, 1)):
                raise GraphError(f"left-right cross edge ({a}, {b}) out of range")
            edges.append((left0 + a, right0 + b))
        if len(spec.assign_left) != l or len(spec.assign_right) != l:
            raise GraphError("side-block assignments must cover all independent vertices")
        for i in range(l):
            sl, sr = spec.assign_left[i], spec.assign_right[i]
            if sl not in (0, 1) or sr not in (0, 1):
                raise GraphError(f"side-block assignment invalid for vertex {i}")
            edges.append((base + i, left0 + sl))
            edges.append((base + i, right0 + sr))
        edges += [(core0 + c, base + i) for c in range(core) for i in range(l)]
    elif fam == 4:
        base = core
        u1, u2 = spec.bridge
        if not (0 <= u1 < l and 0 <= u2 < l and u1 != u2):
            raise GraphError(f"bridge endpoints {spec.bridge} must be two distinct block vertices")
        per_slot = {0: 0, 1: 0}
        removed_pairs = set()
        for c, slot in spec.removed:
            if not (0 <= c < core and slot in (0, 1)):
                raise GraphError(f"removed edge ({c}, {slot}) out of range")
            if (c, slot) in removed_pairs:
                raise GraphError(f"removed edge ({c}, {slot}) listed twice")
            removed_pairs.add((c, slot))
            per_slot[slot] += 1
        if max(per_slot.values()) > 1:
            raise GraphError("at most one core edge may be removed at each bridge endpoint")
        bridge_vertex = {0: base + u1, 1: base + u2}
        edges.append((bridge_vertex[0], bridge_vertex[1]))
        skip = {(c, bridge_vertex[slot]) for c, slot in removed_pairs}
        edges += [
            (c, base + i)
            for c in range(core)
            for i in range(l)
            if (c, base + i) not in skip
        ]
    else:  # family 5
        base = core
        if len(spec.attach) != l:
            raise GraphError(
                f"attachment lists must cover all {l} independent vertices, got {len(spec.attach)}"
            )
        for i, targets in enumerate(spec.attach):
            uniq = sorted(set(targets))
            if len(uniq) != len(targets):
                raise GraphError(f"attachment list for vertex {i} has duplicates")
            if not all(0 <= c < core for c in uniq):
                raise GraphError(f"attachment list for vertex {i} out of range")
            if not delta <= len(uniq) <= delta + 1:
                raise GraphError(
                    f"independent vertex {i} must attach to {delta} or {delta + 1} "
                    f"core vertices, got {len(uniq)}"
                )
            edges += [(c, base + i) for c in uniq]

    n = _core_size(fam, delta) + l + (2 if fam == 2 else 4 if fam == 3 else 0)
    return build_graph(n, edges)


def gamma_vertex_count(family: int, delta: int, l: int) -> int:
    extra = 2 if family == 2 else 4 if family == 3 else 0
    return _core_size(family, delta) + extra + l


def minimal_block_size(family: int, delta: int) -> int:
    return delta + 2 if family == 5 else delta + 1


# ---------------------------------------------------------------------------
# randomized instances


def _random_block(rng: random.Random, size: int) -> Tuple[Edge, ...]:
    return tuple(
        (u, v) for u in range(size) for v in range(u + 1, size) if rng.random() < 0.5
    )


def _draw_spec(rng: random.Random, family: int, delta: int, l: int) -> GammaSpec:
    core = _core_size(family, delta)
    core_edges = _random_block(rng, core)
    if family == 1:
        return GammaSpec(1, delta, l, core_edges)
    if family == 2:
        cross = tuple(
            (c, s) for c in range(core) for s in (0, 1) if rng.random() < 0.5
        )
        assign = tuple(rng.randrange(2) for _ in range(l))
        return GammaSpec(2, delta, l, core_edges, core_pair_edges=cross, assign=assign)
    if family == 3:
        left = tuple([(0, 1)]) if rng.random() < 0.5 else ()
        right = tuple([(0, 1)]) if rng.random() < 0.5 else ()
        cl = tuple((c, s) for c in range(core) for s in (0, 1) if rng.random() < 0.3)
        cr = tuple((c, s) for c in range(core) for s in (0, 1) if rng.random() < 0.3)
        lr = tuple((a, b) for a in (0, 1) for b in (0, 1) if rng.random() < 0.3)
        al = tuple(rng.randrange(2) for _ in range(l))
        ar = tuple(rng.randrange(2) for _ in range(l))
        return GammaSpec(
            3,
            delta,
            l,
            core_edges,
            left_pair_edges=left,
            right_pair_edges=right,
            core_left_edges=cl,
            core_right_edges=cr,
            left_right_edges=lr,
            assign_left=al,
            assign_right=ar,
        )
    if family == 4:
        u1, u2 = sorted(rng.sample(range(l), 2))
        removed = []
        for slot in (0, 1):
            if rng.random() < 0.5:
                removed.append((rng.randrange(core), slot))
        return GammaSpec(
            4, delta, l, core_edges, bridge=(u1, u2), removed=tuple(removed)
        )
    attach = []
    for _ in range(l):
        size = delta if rng.random() < 0.5 else delta + 1
        attach.append(tuple(sorted(rng.sample(range(core), size))))
    return GammaSpec(5, delta, l, core_edges, attach=tuple(attach))


def random_gamma(
    family: int, delta: int = 3, l: int | None = None, *, seed: int, attempts: int = 200
) -> Tuple[GammaSpec, Graph]:
    """Seeded random family instance whose recognition round-trips.

    Draws are retried until the instance has minimum degree exactly
    ``delta`` and the recognizer classifies it under the same family
    index (degenerate cross choices can starve a side vertex or collapse
    one shape into another).  At the minimal block size the shapes are
    disjoint and the retry always succeeds; well above it some shapes
    genuinely coincide (a family-4 instance with l >= delta + 3 is also
    a valid family-3 decomposition, for example) and the recognizer's
    smaller canonical index then makes the round-trip unsatisfiable,
    which this function reports as an error.
    """
    if l is None:
        l = minimal_block_size(family, delta)
    rng = random.Random(f"gamma-{family}-{delta}-{l}-{seed}")
    for _ in range(attempts):
        spec = _draw_spec(rng, family, delta, l)
        g = make_gamma(spec)
        if g.min_degree != delta:
            continue
        result = recognize_exceptional(g)
        if result.member and result.index == family:
            return spec, g
    raise GraphError(
        f"could not draw a valid family-{family} instance in {attempts} attempts"
    )


# ---------------------------------------------------------------------------
# recognition


def _local_edges(g: Graph, block: Sequence[int]) -> Tuple[Edge, ...]:
    pos = {v: i for i, v in enumerate(block)}
    out = []
    for u, v in g.edges:
        if u in pos and v in pos:
            a, b = pos[u], pos[v]
            out.append((min(a, b), max(a, b)))
    return tuple(sorted(out))


def _match_family1(g: Graph, delta: int) -> Optional[RecognizedDecomposition]:
    n = g.n
    seen = set()
    for v in range(n):
        if g.degree(v) != delta:
            continue
        h_mask = g.adj_masks[v]
        if h_mask in seen:
            continue
        seen.add(h_mask)
        core = sorted(bits_of(h_mask))
        block = [u for u in range(n) if not (h_mask >> u) & 1]
        if len(block) < delta + 1:
            continue
        if all(g.adj_masks[u] == h_mask for u in block):
            spec = GammaSpec(1, delta, len(block), _local_edges(g, core))
            return RecognizedDecomposition(spec, tuple(core + block))
    return None


def _match_family2(g: Graph, delta: int) -> Optional[RecognizedDecomposition]:
    n = g.n
    l = n - delta - 1
    if l < delta + 1:
        return None
    for b0, b1 in g.edges:
        pair_mask = (1 << b0) | (1 << b1)
        groups: Dict[int, None] = {}
        for u in range(n):
            if (pair_mask >> u) & 1 or g.degree(u) != delta:
                continue
            nb = g.adj_masks[u]
            if (nb & pair_mask).bit_count() != 1:
                continue
            groups.setdefault(nb & ~pair_mask, None)
        for a_mask in sorted(groups):
            if a_mask.bit_count() != delta - 1 or a_mask & pair_mask:
                continue
            block = [
                u
                for u in range(n)
                if not (pair_mask >> u) & 1 and not (a_mask >> u) & 1
            ]
            if len(block) != l:
                continue
            ok = all(
                g.degree(u) == delta
                and (g.adj_masks[u] & pair_mask).bit_count() == 1
                and g.adj_masks[u] & ~pair_mask == a_mask
                for u in block
            )
            if not ok:
                continue
            core = sorted(bits_of(a_mask))
            pair = [b0, b1]
            assign = tuple(
                0 if g.has_edge(u, b0) else 1 for u in block
            )
            core_pair = tuple(
                (i, s)
                for i, c in enumerate(core)
                for s, b in enumerate(pair)
                if g.has_edge(c, b)
            )
            spec = GammaSpec(
                2,
                delta,
                l,
                _local_edges(g, core),
                core_pair_edges=core_pair,
                assign=assign,
            )
            return RecognizedDecomposition(spec, tuple(core + pair + block))
    return None


def _match_family3(g: Graph, delta: int) -> Optional[RecognizedDecomposition]:
    n = g.n
    l = n - delta - 2
    if l < delta + 1 or delta < 3:
        return None
    two_sets = list(combinations(range(n), 2))
    for i, left in enumerate(two_sets):
        left_mask = (1 << left[0]) | (1 << left[1])
        for right in two_sets[i + 1:]:
            right_mask = (1 << right[0]) | (1 << right[1])
            if left_mask & right_mask:
                continue
            sides = left_mask | right_mask
            groups: Dict[int, None] = {}
            for u in range(n):
                if (sides >> u) & 1 or g.degree(u) != delta:
                    continue
                nb = g.adj_masks[u]
                if (nb & left_mask).bit_count() != 1 or (nb & right_mask).bit_count() != 1:
                    continue
                groups.setdefault(nb & ~sides, None)
            for a_mask in sorted(groups):
                if a_mask.bit_count() != delta - 2 or a_mask & sides:
                    continue
                block = [
                    u
                    for u in range(n)
                    if not (sides >> u) & 1 and not (a_mask >> u) & 1
                ]
                if len(block) != l:
                    continue
                ok = all(
                    g.degree(u) == delta
                    and (g.adj_masks[u] & left_mask).bit_count() == 1
                    and (g.adj_masks[u] & right_mask).bit_count() == 1
                    and g.adj_masks[u] & ~sides == a_mask
                    for u in block
                )
                if not ok:
                    continue
                core = sorted(bits_of(a_mask))
                spec = GammaSpec(
                    3,
                    delta,
                    l,
                    _local_edges(g, core),
                    left_pair_edges=_local_edges(g, list(left)),
                    right_pair_edges=_local_edges(g, list(right)),
                    core_left_edges=tuple(
                        (ci, s)
                        for ci, c in enumerate(core)
                        for s, b in enumerate(left)
                        if g.has_edge(c, b)
                    ),
                    core_right_edges=tuple(
                        (ci, s)
                        for ci, c in enumerate(core)
                        for s, b in enumerate(right)
                        if g.has_edge(c, b)
                    ),
                    left_right_edges=tuple(
                        (a, b)
                        for a, x in enumerate(left)
                        for b, y in enumerate(right)
                        if g.has_edge(x, y)
                    ),
                    assign_left=tuple(0 if g.has_edge(u, left[0]) else 1 for u in block),
                    assign_right=tuple(0 if g.has_edge(u, right[0]) else 1 for u in block),
                )
                layout = list(left) + core + list(right) + block
                return RecognizedDecomposition(spec, tuple(layout))
    return None


def _match_family4(g: Graph, delta: int) -> Optional[RecognizedDecomposition]:
    n = g.n
    l = n - delta
    if l < delta + 1:
        return None
    for u1, u2 in g.edges:
        if g.degree(u1) not in (delta, delta + 1) or g.degree(u2) not in (delta, delta + 1):
            continue
        bridge_mask = (1 << u1) | (1 << u2)
        seen = set()
        for w in range(n):
            if (bridge_mask >> w) & 1 or g.degree(w) != delta:
                continue
            h_mask = g.adj_masks[w]
            if h_mask in seen or h_mask & bridge_mask:
                continue
            seen.add(h_mask)
            if h_mask.bit_count() != delta:
                continue
            block = [u for u in range(n) if not (h_mask >> u) & 1]
            if len(block) != l:
                continue
            others_ok = all(
                g.adj_masks[u] == h_mask for u in block if u not in (u1, u2)
            )
            if not others_ok:
                continue
            block_mask = g.full_mask & ~h_mask
            ok = True
            removed = []
            for slot, u in enumerate((u1, u2)):
                nb = g.adj_masks[u]
                if nb & block_mask != bridge_mask ^ (1 << u):
                    ok = False
                    break
                missing = h_mask & ~nb
                if missing.bit_count() > 1:
                    ok = False
                    break
                core = sorted(bits_of(h_mask))
                for c in bits_of(missing):
                    removed.append((core.index(c), slot))
            if not ok:
                continue
            core = sorted(bits_of(h_mask))
            spec = GammaSpec(
                4,
                delta,
                l,
                _local_edges(g, core),
                bridge=(block.index(u1), block.index(u2)),
                removed=tuple(sorted(removed)),
            )
            return RecognizedDecomposition(spec, tuple(core + block))
    return None


def _match_family5(g: Graph, delta: int) -> Optional[RecognizedDecomposition]:
    n = g.n
    l = n - delta - 1
    if l < delta + 2:
        return None
    cands = set()
    for v in range(n):
        deg = g.degree(v)
        nb = g.adj_masks[v]
        if deg == delta + 1:
            cands.add(nb)
        elif deg == delta:
            for w in range(n):
                if w != v and not (nb >> w) & 1:
                    cands.add(nb | (1 << w))
    for h_mask in sorted(cands):
        if h_mask.bit_count() != delta + 1:
            continue
        block = [u for u in range(n) if not (h_mask >> u) & 1]
        if len(block) != l:
            continue
        ok = all(
            g.adj_masks[u] & ~h_mask == 0 and g.degree(u) >= delta for u in block
        )
        if not ok:
            continue
        core = sorted(bits_of(h_mask))
        pos = {c: i for i, c in enumerate(core)}
        attach = tuple(
            tuple(pos[c] for c in sorted(bits_of(g.adj_masks[u]))) for u in block
        )
        spec = GammaSpec(5, delta, l, _local_edges(g, core), attach=attach)
        return RecognizedDecomposition(spec, tuple(core + block))
    return None


_MATCHERS = (
    (1, _match_family1),
    (2, _match_family2),
    (3, _match_family3),
    (4, _match_family4),
    (5, _match_family5),
)


def _template_search(g: Graph, delta: int) -> Tuple[Optional[int], Optional[RecognizedDecomposition]]:
    """Try every family template in index order; no statistical shortcuts."""
    for index, matcher in _MATCHERS:
        found = matcher(g, delta)
        if found is not None:
            return index, found
    return None, None


def recognize_exceptional(g: Graph, *, cap: int | None = None) -> RecognitionResult:
    """Membership of g in the exceptional family relative to its own
    minimum degree.

    Cheap proven-necessary filters (irregularity, common-neighbor floor,
    order bound) run first; the structural template search is the
    decision procedure.  Graphs above the cap are reported as undecided
    rather than guessed.
    """
    limit = RECOGNIZER_CAP if cap is None else cap
    if g.n > limit:
        return RecognitionResult(None, None, None, "cap_exceeded")
    if g.n == 0:
        return RecognitionResult(False, None, None, "decided")
    delta = g.min_degree
    if delta < FAMILY_MIN_DELTA or g.n < 2 * delta + 1 or g.is_regular:
        return RecognitionResult(False, None, None, "decided")
    c_value = max_common_neighbors(g).value
    if c_value < delta - 1 or (delta >= 4 and c_value < delta):
        return RecognitionResult(False, None, None, "decided")
    index, witness = _template_search(g, delta)
    if index is None:
        return RecognitionResult(False, None, None, "decided")
    return RecognitionResult(True, index, witness, "decided")


def rebuild_from_witness(witness: RecognizedDecomposition) -> Graph:
    """Reassemble the graph a recognition witness describes, in the
    original vertex labeling."""
    template = make_gamma(witness.spec)
    perm = list(witness.vertex_map)
    return relabel(template, perm)


# ---------------------------------------------------------------------------
# standard generators


def hypercube(dim: int) -> Graph:
    """Binary hypercube: vertices are bit strings, edges at Hamming distance 1."""
    if dim < 0:
        raise GraphError(f"hypercube dimension must be nonnegative, got {dim}")
    n = 1 << dim
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b)]
    return build_graph(n, edges)


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise GraphError("part sizes must be nonnegative")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"a path needs at least 1 vertex, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def circulant(n: int, connections: Sequence[int]) -> Graph:
    if n < 3:
        raise GraphError(f"a circulant needs at least 3 vertices, got {n}")
    edges = []
    for s in connections:
        if s % n == 0:
            raise GraphError(f"circulant step {s} is a multiple of {n}")
        for i in range(n):
            edges.append((i, (i + s) % n))
    return build_graph(n, edges)


def prism(k: int) -> Graph:
    """Cartesian product of a k-cycle with a single edge (two stacked cycles)."""
    if k < 3:
        raise GraphError(f"a prism needs cycle length at least 3, got {k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return build_graph(2 * k, edges)


def wheel(k: int) -> Graph:
    """A k-cycle plus a hub adjacent to every rim vertex (hub id k)."""
    if k < 3:
        raise GraphError(f"a wheel needs rim length at least 3, got {k}")
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)]
    return build_graph(k + 1, edges)


def random_t_connected(n: int, t: int, seed: int, *, attempts: int = 200) -> Graph:
    """Seeded random graph with vertex connectivity at least t.

    Samples edge sets of increasing density until the connectivity oracle
    confirms the target; unsatisfiable requests (t >= n) are an error.
    """
    from .connectivity import _kappa_value

    if t < 0:
        raise GraphError(f"connectivity target must be nonnegative, got {t}")
    if t > n - 1:
        raise GraphError(f"no graph on {n} vertices is {t}-connected")
    rng = random.Random(f"random-t-connected-{n}-{t}-{seed}")
    p = min(0.95, (t + 1.0) / max(1, n - 1))
    for _ in range(attempts):
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = build_graph(n, edges)
        if _kappa_value(g) >= t:
            return g
        p = min(0.97, p * 1.15)
    raise GraphError(
        f"failed to sample a {t}-connected graph on {n} vertices in {attempts} attempts"
    )


STANDARD_KINDS = {
    "hypercube": (hypercube, 1),
    "complete": (complete, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "petersen": (petersen, 0),
    "prism": (prism, 1),
    "wheel": (wheel, 1),
    "circulant": (circulant, None),  # n followed by one or more steps
    "random-t-connected": (random_t_connected, 3),
}


def generate_standard(kind: str, *params: int, seed: int = 0) -> Graph:
    """Named standard generator dispatch, mirroring the CLI gen kinds."""
    if kind not in STANDARD_KINDS:
        known = ", ".join(sorted(STANDARD_KINDS))
        raise GraphError(f"unknown graph kind {kind!r}; known kinds: {known}")
    builder, arity = STANDARD_KINDS[kind]
    if kind == "circulant":
        if len(params) < 2:
            raise GraphError("circulant needs n and at least one step")
        return builder(params[0], tuple(params[1:]))
    if kind == "random-t-connected":
        if len(params) == 2:
            return builder(params[0], params[1], seed)
        if len(params) == 3:
            return builder(params[0], params[1], params[2])
        raise GraphError("random-t-connected needs n, t and a seed")
    if len(params) != arity:
        raise GraphError(f"{kind} needs exactly {arity} parameter(s)")
    return builder(*params)
