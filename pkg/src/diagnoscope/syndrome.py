"""Operational test semantics: syndrome generation and decoding.

PMC semantics: every vertex tests every neighbor; a fault-free tester
reports the true status of the tested vertex (1 = faulty) while a faulty
tester reports an arbitrary bit.  MM* semantics: every vertex compares
every pair of its neighbors; a fault-free comparator reports 1 exactly
when at least one compared neighbor is faulty, while a faulty comparator
reports an arbitrary bit.

"Arbitrary" is made concrete by an adversary policy: fixed all-zero or
all-one answers, a seeded random completion, or an exhaustive stream over
every completion (capped, since there are 2^k of them).

Decoding enumerates every fault set within the budget that could have
produced the syndrome under some adversary completion, which reduces to
checking the entries whose tester or comparator lies outside the set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .graphs import Graph, GraphError, bits_of

DEFAULT_EXHAUSTIVE_CAP = 18


class SyndromeError(GraphError):
    """Malformed syndrome or an illegal generation request."""


@dataclass(frozen=True)
class AdversaryPolicy:
    """How outcomes controlled by faulty units are filled in."""

    kind: str  # "all_zero" | "all_one" | "seeded_random" | "exhaustive"
    seed: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("all_zero", "all_one", "seeded_random", "exhaustive"):
            raise SyndromeError(f"unknown adversary policy {self.kind!r}")
        if self.kind == "seeded_random" and self.seed is None:
            raise SyndromeError("seeded_random policy requires a seed")


ALL_ZERO = AdversaryPolicy("all_zero")
ALL_ONE = AdversaryPolicy("all_one")
EXHAUSTIVE = AdversaryPolicy("exhaustive")


def seeded_random(seed: int) -> AdversaryPolicy:
    return AdversaryPolicy("seeded_random", seed)


class PmcSyndrome:
    """Outcome bit for every ordered adjacent pair (tester, tested)."""

    model_name = "pmc"

    def __init__(self, outcomes: Dict[Tuple[int, int], int]):
        self.outcomes = dict(outcomes)

    def __eq__(self, other):
        return isinstance(other, PmcSyndrome) and self.outcomes == other.outcomes

    def __repr__(self):
        return f"PmcSyndrome({len(self.outcomes)} entries)"

    def to_lines(self) -> List[str]:
        return [f"{u} {v} {bit}" for (u, v), bit in sorted(self.outcomes.items())]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "PmcSyndrome":
        outcomes = {}
        for line in lines:
            parts = line.split()
            if len(parts) != 3:
                raise SyndromeError(f"bad PMC syndrome line: {line!r}")
            u, v, bit = (int(p) for p in parts)
            outcomes[(u, v)] = bit
        return cls(outcomes)


class MmSyndrome:
    """Outcome bit for every comparison (comparator; smaller, larger)."""

    model_name = "mm"

    def __init__(self, outcomes: Dict[Tuple[int, int, int], int]):
        self.outcomes = dict(outcomes)

    def __eq__(self, other):
        return isinstance(other, MmSyndrome) and self.outcomes == other.outcomes

    def __repr__(self):
        return f"MmSyndrome({len(self.outcomes)} entries)"

    def to_lines(self) -> List[str]:
        return [f"{w} {u} {v} {bit}" for (w, u, v), bit in sorted(self.outcomes.items())]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "MmSyndrome":
        outcomes = {}
        for line in lines:
            parts = line.split()
            if len(parts) != 4:
                raise SyndromeError(f"bad MM syndrome line: {line!r}")
            w, u, v, bit = (int(p) for p in parts)
            outcomes[(w, u, v)] = bit
        return cls(outcomes)


def pmc_entries(g: Graph) -> List[Tuple[int, int]]:
    """All ordered adjacent pairs, sorted."""
    out = []
    for u, v in g.edges:
        out.append((u, v))
        out.append((v, u))
    return sorted(out)


def mm_entries(g: Graph) -> List[Tuple[int, int, int]]:
    """All comparison triples (w; u, v) with u < v both adjacent to w, sorted."""
    out = []
    for w in range(g.n):
        nbrs = sorted(bits_of(g.adj_masks[w]))
        for u, v in combinations(nbrs, 2):
            out.append((w, u, v))
    return sorted(out)


def _forced_bit_pmc(entry: Tuple[int, int], fault_mask: int) -> int:
    return (fault_mask >> entry[1]) & 1


def _forced_bit_mm(entry: Tuple[int, int, int], fault_mask: int) -> int:
    _, u, v = entry
    return 1 if ((fault_mask >> u) | (fault_mask >> v)) & 1 else 0


def _split_entries(g: Graph, faults: Iterable[int], model_name: str):
    fault_mask = g.vertex_mask(faults)
    if model_name == "pmc":
        entries = pmc_entries(g)
        forced = _forced_bit_pmc
    else:
        entries = mm_entries(g)
        forced = _forced_bit_mm
    fixed = {}
    controlled = []
    for entry in entries:
        if (fault_mask >> entry[0]) & 1:
            controlled.append(entry)
        else:
            fixed[entry] = forced(entry, fault_mask)
    return fixed, controlled


def generate_syndrome(
    g: Graph,
    faults: Iterable[int],
    model,
    policy: AdversaryPolicy,
    *,
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP,
):
    """Syndrome(s) consistent with the fault set under the model semantics.

    Returns one syndrome, or an iterator over all completions when the
    policy is exhaustive (error above the cap, since there are 2^k).
    """
    from .diagnosis import DiagModel

    model_name = "pmc" if model is DiagModel.PMC else "mm"
    cls = PmcSyndrome if model_name == "pmc" else MmSyndrome
    fixed, controlled = _split_entries(g, faults, model_name)
    if policy.kind == "exhaustive":
        k = len(controlled)
        if k > exhaustive_cap:
            raise SyndromeError(
                f"exhaustive adversary needs 2^{k} completions, above the cap 2^{exhaustive_cap}"
            )

        def stream() -> Iterator:
            for pattern in range(1 << k):
                outcomes = dict(fixed)
                for i, entry in enumerate(controlled):
                    outcomes[entry] = (pattern >> i) & 1
                yield cls(outcomes)

        return stream()
    outcomes = dict(fixed)
    if policy.kind == "all_zero":
        for entry in controlled:
            outcomes[entry] = 0
    elif policy.kind == "all_one":
        for entry in controlled:
            outcomes[entry] = 1
    else:
        rng = random.Random(policy.seed)
        for entry in controlled:
            outcomes[entry] = rng.getrandbits(1)
    return cls(outcomes)


def _validate_shape(g: Graph, syndrome, model_name: str):
    expected_cls = PmcSyndrome if model_name == "pmc" else MmSyndrome
    if not isinstance(syndrome, expected_cls):
        raise SyndromeError(
            f"expected a {expected_cls.__name__} for the {model_name} model"
        )
    entries = pmc_entries(g) if model_name == "pmc" else mm_entries(g)
    if set(syndrome.outcomes) != set(entries):
        raise SyndromeError("syndrome entries do not match the graph's test structure")
    for entry, bit in syndrome.outcomes.items():
        if bit not in (0, 1):
            raise SyndromeError(f"syndrome outcome for {entry} must be 0 or 1, got {bit}")


def consistent_with(g: Graph, syndrome, faults: Iterable[int], model) -> bool:
    """Could this fault set have produced the syndrome under some adversary?

    Exactly the entries whose tester or comparator is outside the fault
    set are forced; controlled entries can always be matched.
    """
    from .diagnosis import DiagModel

    model_name = "pmc" if model is DiagModel.PMC else "mm"
    _validate_shape(g, syndrome, model_name)
    fault_mask = g.vertex_mask(faults)
    forced = _forced_bit_pmc if model_name == "pmc" else _forced_bit_mm
    for entry, bit in syndrome.outcomes.items():
        if not (fault_mask >> entry[0]) & 1 and bit != forced(entry, fault_mask):
            return False
    return True


def decode(g: Graph, syndrome, t: int, model) -> Tuple[frozenset, ...]:
    """Every fault set of size at most t consistent with the syndrome,
    ascending by size then lexicographically."""
    if t < 0:
        raise GraphError(f"fault budget must be nonnegative, got {t}")
    from .diagnosis import DiagModel

    model_name = "pmc" if model is DiagModel.PMC else "mm"
    _validate_shape(g, syndrome, model_name)
    forced = _forced_bit_pmc if model_name == "pmc" else _forced_bit_mm
    entries = list(syndrome.outcomes.items())
    found = []
    for size in range(0, min(t, g.n) + 1):
        for combo in combinations(range(g.n), size):
            fault_mask = 0
            for v in combo:
                fault_mask |= 1 << v
            ok = True
            for entry, bit in entries:
                if not (fault_mask >> entry[0]) & 1 and bit != forced(entry, fault_mask):
                    ok = False
                    break
            if ok:
                found.append(frozenset(combo))
    return tuple(found)


def syndromes_compatible(g: Graph, f1: Iterable[int], f2: Iterable[int], model) -> bool:
    """True when some single syndrome is consistent with both fault sets.

    Entries whose tester or comparator lies outside both sets are forced
    by each set; the sets share a syndrome exactly when all those forced
    bits agree.  This is the operational counterpart of the
    distinguishability predicates and is kept deliberately independent of
    them.
    """
    from .diagnosis import DiagModel

    model_name = "pmc" if model is DiagModel.PMC else "mm"
    m1 = g.vertex_mask(f1)
    m2 = g.vertex_mask(f2)
    forced = _forced_bit_pmc if model_name == "pmc" else _forced_bit_mm
    entries = pmc_entries(g) if model_name == "pmc" else mm_entries(g)
    both = m1 | m2
    for entry in entries:
        if not (both >> entry[0]) & 1 and forced(entry, m1) != forced(entry, m2):
            return False
    return True


def unique_decoding_everywhere(g: Graph, t: int, model) -> bool:
    """Whether every syndrome from every fault set of size at most t decodes
    to a single candidate, under every adversary completion.

    Equivalent to: no two distinct candidate sets within the budget share
    a syndrome.  Checked pairwise via syndromes_compatible.
    """
    if t < 0:
        raise GraphError(f"fault budget must be nonnegative, got {t}")
    candidates: List[int] = []
    for size in range(0, min(t, g.n) + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            candidates.append(mask)
    sets = [frozenset(bits_of(m)) for m in candidates]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if syndromes_compatible(g, sets[i], sets[j], model):
                return False
    return True


def confusing_syndrome(g: Graph, f1: Iterable[int], f2: Iterable[int], model):
    """A syndrome consistent with both fault sets of an indistinguishable pair.

    Entries outside f1 follow f1's semantics, remaining entries outside f2
    follow f2's, and entries controlled by both are zero.  When the pair
    is indistinguishable the doubly-forced entries agree, so the result is
    consistent with both sets (decode confirms).
    """
    from .diagnosis import DiagModel

    model_name = "pmc" if model is DiagModel.PMC else "mm"
    m1 = g.vertex_mask(f1)
    m2 = g.vertex_mask(f2)
    forced = _forced_bit_pmc if model_name == "pmc" else _forced_bit_mm
    entries = pmc_entries(g) if model_name == "pmc" else mm_entries(g)
    cls = PmcSyndrome if model_name == "pmc" else MmSyndrome
    outcomes = {}
    for entry in entries:
        head = entry[0]
        if not (m1 >> head) & 1:
            outcomes[entry] = forced(entry, m1)
        elif not (m2 >> head) & 1:
            outcomes[entry] = forced(entry, m2)
        else:
            outcomes[entry] = 0
    return cls(outcomes)
