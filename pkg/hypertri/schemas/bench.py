from typing import Dict, List, Optional
from pydantic import BaseModel, Field, computed_field

from .estimates import ExactCounts, TriangleEstimates


class QuantityStats(BaseModel):
    exact: int
    mean: float
    variance: float = Field(ge=0)
    stderr: float = Field(ge=0)
    # |exact - mean| / exact; None when exact = 0
    relative_error_of_mean: Optional[float] = None
    # mean over trials of |exact - estimate| / exact; None when exact = 0
    mean_relative_error: Optional[float] = None
    median_relative_error: Optional[float] = None
    variance_bound: Optional[float] = None


class TrialEnd(BaseModel):
    """End-of-stream state of one trial."""
    seed: int
    estimates: TriangleEstimates
    observed: int
    sampled: int
    memory_used: int
    pair_factor: Optional[float] = None
    triple_factor: Optional[float] = None


class TrialStatistics(BaseModel):
    algorithm: str
    budget: int
    tau: Optional[float] = None
    trials: int
    base_seed: int
    exact: ExactCounts
    runs: List[TrialEnd]
    quantities: Dict[str, QuantityStats]
    mean_utilization: float


class Snapshot(BaseModel):
    edges_processed: int
    estimates: TriangleEstimates
    used_slots: int
    utilization: float
    elapsed_seconds: float
    exact: Optional[ExactCounts] = None


class SnapshotSeries(BaseModel):
    algorithm: str
    budget: int
    seed: int
    snapshots: List[Snapshot] = []


class SweepPoint(BaseModel):
    budget: int
    tau: Optional[float] = None
    trials: int
    mean_relative_error: Dict[str, Optional[float]]
    median_relative_error: Dict[str, Optional[float]]
    mean_utilization: float


class PairedRun(BaseModel):
    """HTCount and HTCount-P end states for one seed on the same stream and budget."""
    seed: int
    htcount_utilization: float
    htcount_p_utilization: float
    # m(m-1) / (|G_s|(|G_s|-1)) for the single reservoir, Phi_1 for the partition
    htcount_pair_factor: Optional[float] = None
    htcount_p_pair_factor: Optional[float] = None
    subsets: int

    @computed_field
    @property
    def utilization_gap(self) -> float:
        return self.htcount_p_utilization - self.htcount_utilization
