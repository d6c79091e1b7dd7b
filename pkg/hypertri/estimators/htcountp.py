from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ..core.config import tau_for_budget
from ..core.exceptions import ContractViolation
from ..core.hypergraph import Hyperedge, IntersectionIndex, binom3, falling_factorial
from ..schemas.estimates import TriangleEstimates
from ..utils.logger import logger
from ..utils.rng import SeededRandom
from .engine import update_triangles
from .htcount import ReservoirCorrections, SampleCell, SampleOutcome, sample_outcome


@dataclass
class PartitionState:
    """
    Active subsets in creation order; subset tags are 1-based positions.
    A cell's ``budget`` is its frozen allocation M'[i].
    """
    total_budget: int
    max_subsets: int
    tau: float
    subsets: list[SampleCell] = field(default_factory=list)
    can_extend: bool = True
    estimates: TriangleEstimates = field(default_factory=TriangleEstimates)
    rng: SeededRandom = field(default_factory=lambda: SeededRandom(0))

    def __post_init__(self):
        if not self.subsets:
            self.subsets.append(SampleCell(budget=self.total_budget))

    @property
    def active(self) -> int:
        return len(self.subsets)

    @property
    def used_slots(self) -> int:
        return sum(cell.used_slots for cell in self.subsets)

    def cell(self, tag: int) -> SampleCell:
        return self.subsets[tag - 1]


def _joint_inverse(state: PartitionState, tags: Iterable[int]) -> tuple[int, int]:
    """(numerator, denominator) of 1 / Pr(all tagged hyperedges sampled)."""
    numerator = 1
    denominator = 1
    for tag, k in Counter(tags).items():
        cell = state.cell(tag)
        if cell.sampled < k:
            raise ContractViolation(
                f"subset {tag} holds {cell.sampled} hyperedges, cannot host {k} of a pair/triple"
            )
        if cell.sampled == cell.observed:
            continue
        numerator *= falling_factorial(cell.observed, k)
        denominator *= falling_factorial(cell.sampled, k)
    return numerator, denominator


def maybe_extend(state: PartitionState) -> bool:
    """Split off a new subset from the unused memory when utilization drops below tau."""
    newest = state.subsets[-1]
    if not (state.active < state.max_subsets
            and state.can_extend
            and newest.observed > newest.sampled
            and state.used_slots / state.total_budget < state.tau):
        return False
    # a zero allocation could never receive hyperedges again
    if any(cell.used_slots == 0 for cell in state.subsets):
        return False

    for cell in state.subsets:
        cell.budget = cell.used_slots
    remaining = state.total_budget - sum(cell.budget for cell in state.subsets)
    state.subsets.append(SampleCell(budget=remaining))
    state.can_extend = False
    logger.debug("Created sample subset", subset=state.active, allocation=remaining,
                 utilization=round(1 - remaining / state.total_budget, 4))
    return True


def route(state: PartitionState) -> int:
    """
    Pick the subset (1-based) that receives the next hyperedge, favouring a
    newest subset whose inclusion probability lags the older ones.
    """
    if state.active == 1:
        return 1
    newest = state.subsets[-1]
    older = state.subsets[:-1]
    mean_older = sum(cell.inclusion_probability() for cell in older) / len(older)
    if newest.inclusion_probability() < mean_older:
        return state.active
    return route_weighted(state)


def route_weighted(state: PartitionState) -> int:
    """Pick a subset with probability proportional to its allocation, whatever the samples hold."""
    if state.active == 1:
        return 1
    state.can_extend = True
    return state.rng.weighted_index([cell.budget for cell in state.subsets]) + 1


def pair_probability(state: PartitionState, x: int, y: int) -> float:
    numerator, denominator = _joint_inverse(state, (x, y))
    return denominator / numerator


def triple_probability(state: PartitionState, x: int, y: int, z: int) -> float:
    numerator, denominator = _joint_inverse(state, (x, y, z))
    return denominator / numerator


class PartitionCorrections:
    """
    Inverse joint sampling probabilities from live subset statistics.
    Subset statistics are fixed for the duration of one update, so factors
    are memoized per tag tuple.
    """

    def __init__(self, state: PartitionState):
        self.state = state
        self._cache: dict[tuple[int, ...], float] = {}

    def _factor(self, tags: tuple[int, ...]) -> float:
        factor = self._cache.get(tags)
        if factor is None:
            numerator, denominator = _joint_inverse(self.state, tags)
            factor = self._cache[tags] = numerator / denominator
        return factor

    def pair_factor(self, tag_i: int, tag_j: int) -> float:
        return self._factor((tag_i, tag_j))

    def triple_factor(self, tag_i: int, tag_j: int, tag_k: int) -> float:
        return self._factor((tag_i, tag_j, tag_k))


class HTCountP:
    """
    Partitioned estimator: unused memory is split into independent subsets,
    each a reservoir of its own, and hyperedges are routed between them.

    Routing is allocation-weighted by default. ``catch_up`` restores the rule
    that keeps feeding a newest subset whose inclusion probability lags.
    """

    name = "htcount-p"

    def __init__(self, budget: int, seed: int = 0, tau: Optional[float] = None, max_subsets: int = 10,
                 catch_up: bool = False, intersections: Optional[IntersectionIndex] = None):
        if budget < 1:
            raise ContractViolation(f"memory budget must be >= 1, got {budget}")
        if max_subsets < 1:
            raise ContractViolation(f"max_subsets must be >= 1, got {max_subsets}")
        if tau is None:
            tau = tau_for_budget(budget)
        if not 0.0 < tau <= 1.0:
            raise ContractViolation(f"tau must lie in (0, 1], got {tau}")
        self.state = PartitionState(total_budget=budget, max_subsets=max_subsets, tau=tau,
                                    rng=SeededRandom(seed))
        self.seed = seed
        self.catch_up = catch_up
        self.intersections = intersections
        self._route = route if catch_up else route_weighted

    def process(self, e: Hyperedge) -> TriangleEstimates:
        self.advance(e)
        return self.state.estimates.snapshot()

    def advance(self, e: Hyperedge):
        """process() without the snapshot copy."""
        state = self.state
        maybe_extend(state)
        p = self._route(state)
        cell = state.cell(p)
        cell.observed += 1
        state.estimates.inner += binom3(len(e))

        if len(e) > state.total_budget:
            logger.warning("Hyperedge larger than the memory budget", arrival_index=e.arrival_index,
                           size=len(e), budget=state.total_budget)
        elif len(e) > cell.budget:
            logger.debug("Hyperedge larger than its subset allocation", arrival_index=e.arrival_index,
                         size=len(e), subset=p, allocation=cell.budget)

        if sample_outcome(cell, e, state.rng) is SampleOutcome.kept:
            if state.active == 1:
                view = [(edge, 1) for edge in cell.sample if edge is not e]
                corrections = ReservoirCorrections(cell.observed, cell.sampled)
            else:
                view = [
                    (edge, tag)
                    for tag, sub in enumerate(state.subsets, start=1)
                    for edge in sub.sample
                    if edge is not e
                ]
                corrections = PartitionCorrections(state)
            update_triangles(e, view, corrections, state.estimates, tag=p, intersections=self.intersections)

        if cell.used_slots > cell.budget or state.used_slots > state.total_budget:
            raise ContractViolation(
                f"subset {p} uses {cell.used_slots}/{cell.budget} slots, total {state.used_slots}/{state.total_budget}"
            )

    def run(self, stream: Iterable[Hyperedge]) -> TriangleEstimates:
        for e in stream:
            self.advance(e)
        return self.estimates

    @property
    def estimates(self) -> TriangleEstimates:
        return self.state.estimates.snapshot()

    @property
    def observed(self) -> int:
        return sum(cell.observed for cell in self.state.subsets)

    @property
    def sampled(self) -> int:
        return sum(cell.sampled for cell in self.state.subsets)

    @property
    def memory_used(self) -> int:
        return self.state.used_slots

    @property
    def memory_budget(self) -> int:
        return self.state.total_budget

    @property
    def utilization(self) -> float:
        return self.state.used_slots / self.state.total_budget

    def sampled_edges(self) -> list[int]:
        return sorted(edge.arrival_index for cell in self.state.subsets for edge in cell.sample)

    def subset_summaries(self) -> list[dict]:
        return [
            {"subset": tag, "observed": cell.observed, "sampled": cell.sampled,
             "used_slots": cell.used_slots, "allocation": cell.budget}
            for tag, cell in enumerate(self.state.subsets, start=1)
        ]

    def _phi(self, arity: int) -> Optional[float]:
        # subsets too small to host a configuration never contribute one
        ratios = [
            1.0 if cell.sampled == cell.observed
            else falling_factorial(cell.observed, arity) / falling_factorial(cell.sampled, arity)
            for cell in self.state.subsets
            if cell.sampled >= arity
        ]
        return max(ratios) if ratios else None

    def variance_factor_pair(self) -> Optional[float]:
        """Phi_1: worst per-subset m(m-1) / (|G_s|(|G_s|-1))."""
        return self._phi(2)

    def variance_factor_triple(self) -> Optional[float]:
        """Phi_2: worst per-subset ratio for triples."""
        return self._phi(3)
