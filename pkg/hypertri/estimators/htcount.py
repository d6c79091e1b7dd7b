from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ..core.exceptions import ContractViolation
from ..core.hypergraph import Hyperedge, IntersectionIndex, binom3, falling_factorial
from ..schemas.estimates import TriangleEstimates
from ..utils.logger import logger
from ..utils.rng import SeededRandom
from .engine import update_triangles


class SampleOutcome(str, enum.Enum):
    rejected = "rejected"
    kept = "kept"
    # won the Bernoulli draw, then lost the eviction loop
    evicted = "evicted"


@dataclass
class SampleCell:
    """
    One memory-bounded reservoir: sample G_s, used slots M_s, allocation M and
    observed counter m. HTCount owns one; HTCount-P owns one per subset.
    """
    budget: int
    sample: list[Hyperedge] = field(default_factory=list)
    used_slots: int = 0
    observed: int = 0

    @property
    def sampled(self) -> int:
        return len(self.sample)

    def inclusion_probability(self) -> float:
        """|G_s| / m; an empty cell has rejected nothing yet and reports 1."""
        if self.observed == 0:
            return 1.0
        return len(self.sample) / self.observed

    def _evict_at(self, index: int) -> Hyperedge:
        # order of the sample list is irrelevant to the algorithm
        victim = self.sample[index]
        last = self.sample.pop()
        if index < len(self.sample):
            self.sample[index] = last
        self.used_slots -= len(victim)
        return victim


def sample_outcome(cell: SampleCell, e: Hyperedge, rng: SeededRandom) -> SampleOutcome:
    """SampleHyperedge with the three-way outcome; ``cell.observed`` already counts ``e``."""
    size = len(e)
    if cell.used_slots + size <= cell.budget and len(cell.sample) == cell.observed - 1:
        cell.sample.append(e)
        cell.used_slots += size
        return SampleOutcome.kept

    if not rng.bernoulli(len(cell.sample) / cell.observed):
        return SampleOutcome.rejected

    cell._evict_at(rng.discrete_uniform(len(cell.sample)))
    cell.sample.append(e)
    cell.used_slots += size
    survived = True
    while cell.used_slots > cell.budget:
        if cell._evict_at(rng.discrete_uniform(len(cell.sample))) is e:
            survived = False
    return SampleOutcome.kept if survived else SampleOutcome.evicted


def sample_hyperedge(cell: SampleCell, e: Hyperedge, rng: SeededRandom) -> bool:
    """True iff ``e`` is in the sample when the call returns."""
    return sample_outcome(cell, e, rng) is SampleOutcome.kept


def correction_theta(observed: int, sample_size: int) -> float:
    if sample_size < 2:
        raise ContractViolation(f"theta needs at least 2 sampled hyperedges, got {sample_size}")
    if sample_size == observed:
        return 1.0
    return falling_factorial(observed, 2) / falling_factorial(sample_size, 2)


def correction_gamma(observed: int, sample_size: int) -> float:
    if sample_size < 3:
        raise ContractViolation(f"gamma needs at least 3 sampled hyperedges, got {sample_size}")
    if sample_size == observed:
        return 1.0
    return falling_factorial(observed, 3) / falling_factorial(sample_size, 3)


class ReservoirCorrections:
    """Constant theta / gamma for one update, evaluated on first use."""

    def __init__(self, observed: int, sample_size: int):
        self.observed = observed
        self.sample_size = sample_size
        self._theta: Optional[float] = None
        self._gamma: Optional[float] = None

    def pair_factor(self, tag_i: int, tag_j: int) -> float:
        if self._theta is None:
            self._theta = correction_theta(self.observed, self.sample_size)
        return self._theta

    def triple_factor(self, tag_i: int, tag_j: int, tag_k: int) -> float:
        if self._gamma is None:
            self._gamma = correction_gamma(self.observed, self.sample_size)
        return self._gamma


@dataclass
class ReservoirState(SampleCell):
    estimates: TriangleEstimates = field(default_factory=TriangleEstimates)
    rng: SeededRandom = field(default_factory=lambda: SeededRandom(0))


class HTCount:
    """
    Single-reservoir estimator. Hyperedges are sampled uniformly under a
    budget counted in vertex slots; inner triangles are counted exactly.
    """

    name = "htcount"

    def __init__(self, budget: int, seed: int = 0, count_evicted: bool = False,
                 intersections: Optional[IntersectionIndex] = None):
        if budget < 1:
            raise ContractViolation(f"memory budget must be >= 1, got {budget}")
        self.state = ReservoirState(budget=budget, rng=SeededRandom(seed))
        self.seed = seed
        self.count_evicted = count_evicted
        self.intersections = intersections

    def process(self, e: Hyperedge) -> TriangleEstimates:
        self.advance(e)
        return self.state.estimates.snapshot()

    def advance(self, e: Hyperedge):
        """process() without the snapshot copy."""
        state = self.state
        state.observed += 1
        state.estimates.inner += binom3(len(e))

        if len(e) > state.budget:
            logger.warning("Hyperedge larger than the memory budget", arrival_index=e.arrival_index,
                           size=len(e), budget=state.budget)

        outcome = sample_outcome(state, e, state.rng)
        if outcome is SampleOutcome.kept:
            view = [(edge, 1) for edge in state.sample if edge is not e]
            update_triangles(e, view, ReservoirCorrections(state.observed, len(state.sample)), state.estimates,
                             intersections=self.intersections)
        elif outcome is SampleOutcome.evicted and self.count_evicted:
            self._count_evicted(e)

        if state.used_slots > state.budget:
            raise ContractViolation(f"used slots {state.used_slots} exceed budget {state.budget}")

    def _count_evicted(self, e: Hyperedge):
        # literal reading: count against the post-eviction sample it no longer belongs to
        state = self.state
        sample_size = len(state.sample)
        if sample_size < 3:
            logger.debug("Skipping evicted-edge update on a tiny sample", arrival_index=e.arrival_index,
                         sampled=sample_size)
            return
        view = [(edge, 1) for edge in state.sample]
        update_triangles(e, view, ReservoirCorrections(state.observed, sample_size), state.estimates,
                         intersections=self.intersections)

    def run(self, stream: Iterable[Hyperedge]) -> TriangleEstimates:
        for e in stream:
            self.advance(e)
        return self.estimates

    @property
    def estimates(self) -> TriangleEstimates:
        return self.state.estimates.snapshot()

    @property
    def observed(self) -> int:
        return self.state.observed

    @property
    def sampled(self) -> int:
        return len(self.state.sample)

    @property
    def memory_used(self) -> int:
        return self.state.used_slots

    @property
    def memory_budget(self) -> int:
        return self.state.budget

    @property
    def utilization(self) -> float:
        return self.state.used_slots / self.state.budget

    def sampled_edges(self) -> list[int]:
        return sorted(edge.arrival_index for edge in self.state.sample)

    def variance_factor_pair(self) -> Optional[float]:
        """m(m-1) / (|G_s|(|G_s|-1)) at the current state; None below arity."""
        if self.sampled < 2:
            return None
        return correction_theta(self.observed, self.sampled)

    def variance_factor_triple(self) -> Optional[float]:
        if self.sampled < 3:
            return None
        return correction_gamma(self.observed, self.sampled)
