from typing import Optional
from pydantic import BaseModel, ConfigDict, Field


QUANTITIES = ("inner", "hybrid", "outer", "ccc", "tcc", "ttc", "ttt")
CLASS_QUANTITIES = ("ccc", "tcc", "ttc", "ttt")


class TriangleEstimates(BaseModel):
    """
    Running accumulators. ``inner`` is counted exactly and never scaled;
    every other field is a sum of correction-weighted contributions.
    """
    model_config = ConfigDict(validate_assignment=False)

    inner: int = Field(default=0, ge=0)
    hybrid: float = Field(default=0.0, ge=0)
    outer: float = Field(default=0.0, ge=0)
    ccc: float = Field(default=0.0, ge=0)
    tcc: float = Field(default=0.0, ge=0)
    ttc: float = Field(default=0.0, ge=0)
    ttt: float = Field(default=0.0, ge=0)

    def snapshot(self) -> "TriangleEstimates":
        return self.model_copy()


class ExactCounts(BaseModel):
    inner: int = Field(default=0, ge=0)
    hybrid: int = Field(default=0, ge=0)
    outer: int = Field(default=0, ge=0)
    ccc: int = Field(default=0, ge=0)
    tcc: int = Field(default=0, ge=0)
    ttc: int = Field(default=0, ge=0)
    ttt: int = Field(default=0, ge=0)

    @property
    def intersecting_triples(self) -> int:
        return self.ccc + self.tcc + self.ttc + self.ttt


class EstimateReport(TriangleEstimates):
    """Output record of the ``estimate`` command; key set is part of the CLI contract."""
    observed: int
    sampled: int
    memory_used: int
    memory_budget: int
    utilization: float
    elapsed_seconds: float
    throughput_kbps: Optional[float] = None
    seed: int
