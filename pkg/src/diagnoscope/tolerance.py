"""Edge-fault tolerable diagnosability and the theorem-based bound calculator.

The tolerable diagnosability at edge budget h is the minimum
diagnosability over all graphs obtained by deleting at most h edges.
Deleting edges never creates a distinguishing structure, so the minimum
is attained at scenarios of size exactly min(h, |E|); the scenario sweep
enumerates those.

Under PMC the per-scenario loop can be folded away exactly: a candidate
pair becomes indistinguishable after deleting F_e iff F_e covers every
edge between the outside region and the symmetric difference, so the
worst scenario for a pair (U, D) costs exactly the number of such edges.
One scan over (U, D) pairs therefore yields the whole value table for
every budget at once.  The scenario sweep remains the oracle the folded
scan is tested against, and is the production path for MM*.

Scenario enumeration is embarrassingly parallel; with jobs > 1 chunks are
farmed to worker processes and reduced by (value, scenario) so results
do not depend on the worker count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Tuple

from .connectivity import _kappa_value, max_common_neighbors
from .diagnosis import DiagModel, diagnosability, diagnosability_cap, is_t_diagnosable
from .graphs import Edge, Graph, GraphError, bits_of, delete_edges

METHOD_BRUTE = "brute_force"
METHOD_THEOREM = "theorem"


@dataclass(frozen=True)
class ToleranceResult:
    h: int
    model: DiagModel
    value: int
    worst_scenario: Optional[Tuple[Edge, ...]]
    method: str


@dataclass(frozen=True)
class BoundCondition:
    rule: str
    description: str
    holds: bool


@dataclass(frozen=True)
class BoundReport:
    lower: Optional[int]
    lower_rule: Optional[str]
    upper: Optional[int]
    upper_rule: Optional[str]
    exact: Optional[int]
    conditions: Tuple[BoundCondition, ...]


@lru_cache(maxsize=4096)
def _pmc_break_table(g: Graph):
    """Folded PMC scan: per deletion cost r, the smallest breaking threshold.

    For every candidate pair grouped as (U, D) with outside O = V - U, the
    pair is indistinguishable after deleting exactly the edges between O
    and D; it defeats t-diagnosability for all t >= |U| - floor(|D| / 2).
    Deleting h edges at a minimum-degree vertex shows the answer for
    budget h is at most delta - h, so only pairs with breaking threshold
    at most delta + 1 can matter and |U| <= 2 * (delta + 1) bounds the scan.

    Returns (thresholds, scenarios): thresholds[r] is the minimum breaking
    threshold over pairs whose outside-to-D edge set has size r <= delta,
    and scenarios[r] is that edge set for the first such pair in scan
    order (size ascending, then lexicographic).
    """
    n = g.n
    delta = g.min_degree
    adj = g.adj_masks
    full = g.full_mask
    infinite = n + 2
    best = [infinite] * (delta + 1)
    witness: list = [None] * (delta + 1)
    max_u = min(2 * (delta + 1), n)
    cur_max = infinite  # pairs at or above every stored threshold cannot help
    for usize in range(1, max_u + 1):
        for combo in combinations(range(n), usize):
            u_mask = 0
            for v in combo:
                u_mask |= 1 << v
            o_mask = full ^ u_mask
            costs = {}
            cands = 0
            for v in combo:
                c = (adj[v] & o_mask).bit_count()
                if c <= delta:
                    costs[v] = c
                    cands |= 1 << v
            if not cands:
                continue
            if usize - (cands.bit_count() >> 1) >= cur_max:
                continue
            d_mask = 0
            while True:
                d_mask = (d_mask - cands) & cands
                if d_mask == 0:
                    break
                threshold = usize - (d_mask.bit_count() >> 1)
                if threshold >= cur_max:
                    continue
                r = 0
                rest = d_mask
                while rest:
                    low = rest & -rest
                    rest ^= low
                    r += costs[low.bit_length() - 1]
                    if r > delta:
                        break
                if r <= delta and threshold < best[r]:
                    best[r] = threshold
                    witness[r] = (u_mask, d_mask)
                    cur_max = max(best)
    scenarios = []
    for r in range(delta + 1):
        if witness[r] is None:
            scenarios.append(None)
            continue
        u_mask, d_mask = witness[r]
        o_mask = full ^ u_mask
        cut = []
        for v in bits_of(d_mask):
            for w in bits_of(adj[v] & o_mask):
                cut.append((v, w) if v < w else (w, v))
        scenarios.append(tuple(sorted(cut)))
    return tuple(best), tuple(scenarios)


def _pmc_tolerance(g: Graph, h: int) -> Tuple[int, Tuple[Edge, ...]]:
    """Exact PMC value at budget h plus a canonical minimizing scenario.

    The scenario is the witness edge set of the first pair attaining the
    minimum, padded with the smallest non-member edges up to size
    min(h, |E|).  Deleting a superset of the witness edges keeps the pair
    indistinguishable, and no scenario beats the folded minimum, so the
    padded scenario attains the value exactly.
    """
    thresholds, scenarios = _pmc_break_table(g)
    best_r = 0
    for r in range(1, h + 1):
        if thresholds[r] < thresholds[best_r]:
            best_r = r
    value = thresholds[best_r] - 1
    base = list(scenarios[best_r])
    size = min(h, g.m)
    if len(base) < size:
        chosen = set(base)
        for e in g.edges:
            if len(base) == size:
                break
            if e not in chosen:
                base.append(e)
                chosen.add(e)
    return value, tuple(sorted(base))


def _scenarios(g: Graph, size: int):
    return combinations(g.edges, size)


def _descend(g2: Graph, upper: int, model: DiagModel) -> int:
    """Exact diagnosability known to be strictly below ``upper``."""
    t = upper - 1
    while t > 0 and not is_t_diagnosable(g2, t, model).diagnosable:
        t -= 1
    return t


def _sweep_chunk(args) -> Tuple[int, Tuple[Edge, ...]]:
    g, chunk, model = args
    best = None
    for scenario in chunk:
        val = diagnosability(delete_edges(g, scenario), model)
        key = (val, scenario)
        if best is None or key < best:
            best = key
    return best


def _scenario_sweep(g: Graph, size: int, model: DiagModel, jobs: int) -> Tuple[int, Tuple[Edge, ...]]:
    if jobs > 1:
        scenarios = list(_scenarios(g, size))
        chunks = [scenarios[i::jobs] for i in range(jobs)]
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            results = pool.map(_sweep_chunk, [(g, c, model) for c in chunks if c])
        return min(r for r in results if r is not None)
    best_val: Optional[int] = None
    best_scenario: Tuple[Edge, ...] = ()
    for scenario in _scenarios(g, size):
        g2 = delete_edges(g, scenario)
        if best_val is None:
            best_val = diagnosability(g2, model)
            best_scenario = scenario
        else:
            if is_t_diagnosable(g2, best_val, model).diagnosable:
                continue  # at least as large as the current minimum
            best_val = _descend(g2, best_val, model)
            best_scenario = scenario
        if best_val == 0:
            break
    assert best_val is not None
    return best_val, best_scenario


def edge_tolerable_diagnosability(
    g: Graph, h: int, model: DiagModel, *, jobs: int = 1
) -> ToleranceResult:
    """Minimum diagnosability over all deletions of at most h edges.

    A budget above the minimum degree isolates a vertex, so the value is 0
    by theorem without enumeration; otherwise the result is exhaustive and
    carries the lexicographically smallest minimizing scenario of size
    min(h, |E|).
    """
    if h < 0:
        raise GraphError(f"edge budget must be nonnegative, got {h}")
    if g.n == 0:
        raise GraphError("tolerable diagnosability is undefined for the empty graph")
    result = _tolerance_cached(g, h, model, jobs if jobs > 1 else 1)
    return result


@lru_cache(maxsize=4096)
def _tolerance_cached(g: Graph, h: int, model: DiagModel, jobs: int) -> ToleranceResult:
    delta = g.min_degree
    if h > delta:
        return ToleranceResult(h, model, 0, None, METHOD_THEOREM)
    size = min(h, g.m)
    if model is DiagModel.PMC:
        value, scenario = _pmc_tolerance(g, h)
    else:
        value, scenario = _scenario_sweep(g, size, model, jobs)
    return ToleranceResult(h, model, value, tuple(scenario), METHOD_BRUTE)


def edge_tolerable_by_definition(g: Graph, h: int, model: DiagModel) -> int:
    """Largest t such that every deletion of at most h edges stays t-diagnosable.

    Direct realization of the defining quantifier, enumerating all
    scenario sizes 0..h.  Exponential; used to cross-check the
    minimum-over-scenarios computation on small graphs.
    """
    if h < 0:
        raise GraphError(f"edge budget must be nonnegative, got {h}")
    cap = diagnosability_cap(g)
    value = 0
    for t in range(1, cap + 1):
        ok = True
        for size in range(0, min(h, g.m) + 1):
            for scenario in _scenarios(g, size):
                if not is_t_diagnosable(delete_edges(g, scenario), t, model).diagnosable:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
        value = t
    return value


def _family_exclusion(g: Graph, recognition) -> Tuple[List[BoundCondition], Optional[bool]]:
    """Decide G not-in exceptional-family(delta), preferring cheap criteria.

    Returns condition rows plus the exclusion verdict (True = surely not a
    member, False = member, None = undecided within the recognizer cap).
    Members are all irregular with max common neighbors at least
    delta - 1 (at least delta when delta >= 4), so those statistics give
    sufficient exclusion tests before the structural recognizer runs.
    """
    from .families import recognize_exceptional

    rows: List[BoundCondition] = []
    delta = g.min_degree
    if g.n >= 2:
        c_value = max_common_neighbors(g).value
        shortcut = (delta >= 3 and c_value <= delta - 2) or (
            delta >= 4 and c_value <= delta - 1
        )
        rows.append(
            BoundCondition(
                "family_shortcut",
                f"common-neighbor shortcut excludes membership (C(G)={c_value}, delta={delta})",
                shortcut,
            )
        )
        if shortcut:
            rows.append(BoundCondition("family_exclusion", "graph is outside the exceptional family", True))
            return rows, True
    recog = recognition if recognition is not None else recognize_exceptional(g)
    if recog.status == "cap_exceeded":
        rows.append(
            BoundCondition(
                "family_exclusion",
                "membership undecided: recognizer cap exceeded",
                False,
            )
        )
        return rows, None
    excluded = not recog.member
    rows.append(
        BoundCondition("family_exclusion", "graph is outside the exceptional family", excluded)
    )
    return rows, excluded


def theoretical_bounds(
    g: Graph, h: int, model: DiagModel, *, recognition=None
) -> BoundReport:
    """Evaluate the applicable theorems at budget h and report bounds.

    Every hypothesis is checked against exact module outputs (connectivity,
    degrees, common neighbors, family recognition) and reported as a
    pass/fail row; bounds are emitted only from rules whose hypotheses all
    hold.  The lower-bound rules are instantiated at t = kappa(G), the
    strongest provable choice.
    """
    if h < 0:
        raise GraphError(f"edge budget must be nonnegative, got {h}")
    if g.n == 0:
        raise GraphError("bounds are undefined for the empty graph")
    n = g.n
    delta = g.min_degree
    kappa = _kappa_value(g)
    conditions: List[BoundCondition] = []
    lower = lower_rule = None
    upper = upper_rule = None
    exact = None

    if h >= delta:
        conditions.append(
            BoundCondition(
                "isolation",
                f"budget h={h} >= delta={delta} allows isolating a vertex",
                True,
            )
        )
        return BoundReport(0, "isolation", 0, "isolation", 0, tuple(conditions))

    connected = kappa >= 1
    conditions.append(BoundCondition("min_degree_upper", "graph is connected", connected))
    if connected:
        upper = delta - h
        upper_rule = "min_degree_upper"

    if model is DiagModel.PMC:
        c1 = h <= kappa
        c2 = n >= 2 * (kappa - h) + 1
        conditions.append(BoundCondition("pmc_lower", f"h={h} <= kappa={kappa}", c1))
        conditions.append(
            BoundCondition("pmc_lower", f"|V|={n} >= 2*(kappa-h)+1={2 * (kappa - h) + 1}", c2)
        )
        if c1 and c2:
            lower = kappa - h
            lower_rule = "pmc_lower"
        c3 = kappa == delta
        c4 = n >= 2 * (delta - h) + 1
        conditions.append(
            BoundCondition("pmc_exact", f"maximally connected (kappa={kappa}, delta={delta})", c3)
        )
        conditions.append(
            BoundCondition("pmc_exact", f"|V|={n} >= 2*(delta-h)+1={2 * (delta - h) + 1}", c4)
        )
        if c3 and c4:
            lower = upper = exact = delta - h
            lower_rule = upper_rule = "pmc_exact"
    else:
        family_rows, excluded = _family_exclusion(g, recognition)
        conditions.extend(family_rows)
        c1 = kappa >= 3
        c2 = n >= 2 * (kappa - h) + 3
        c3 = h <= (kappa - 1) // 2
        conditions.append(BoundCondition("mm_lower", f"kappa={kappa} >= 3", c1))
        conditions.append(
            BoundCondition("mm_lower", f"|V|={n} >= 2*(kappa-h)+3={2 * (kappa - h) + 3}", c2)
        )
        conditions.append(
            BoundCondition("mm_lower", f"h={h} <= floor((kappa-1)/2)={(kappa - 1) // 2}", c3)
        )
        if c1 and c2 and c3 and excluded:
            lower = kappa - h
            lower_rule = "mm_lower"
        c4 = kappa == delta
        c5 = delta >= 3
        c6 = n >= 2 * (delta - h) + 3
        c7 = h <= (delta - 1) // 2
        conditions.append(
            BoundCondition("mm_exact", f"maximally connected (kappa={kappa}, delta={delta})", c4)
        )
        conditions.append(BoundCondition("mm_exact", f"delta={delta} >= 3", c5))
        conditions.append(
            BoundCondition("mm_exact", f"|V|={n} >= 2*(delta-h)+3={2 * (delta - h) + 3}", c6)
        )
        conditions.append(
            BoundCondition("mm_exact", f"h={h} <= floor((delta-1)/2)={(delta - 1) // 2}", c7)
        )
        if c4 and c5 and c6 and c7 and excluded:
            lower = upper = exact = delta - h
            lower_rule = upper_rule = "mm_exact"
        if lower is None and not (c1 and c2 and c3):
            conditions.append(
                BoundCondition(
                    "mm_lower",
                    "no lower-bound rule applies at this budget",
                    False,
                )
            )

    if exact is None and lower is not None and upper is not None and lower == upper:
        exact = lower
    return BoundReport(lower, lower_rule, upper, upper_rule, exact, tuple(conditions))
