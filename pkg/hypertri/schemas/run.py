import enum
from typing import Optional
from pydantic import BaseModel, Field, field_validator


class Algorithm(str, enum.Enum):
    exact = "exact"
    htcount = "htcount"
    htcount_p = "htcount-p"


class OutputFormat(str, enum.Enum):
    json = "json"
    csv = "csv"


class RunConfig(BaseModel):
    """
    Validated parameters of one estimator run. ``tau``, ``max_subsets`` and ``catch_up``
    only matter for htcount-p; a missing tau is filled from the budget schedule.
    """
    algorithm: Algorithm = Algorithm.htcount
    budget: int = Field(ge=1)
    tau: Optional[float] = None
    max_subsets: int = Field(default=10, ge=1)
    seed: int = 0
    # a single trial has no sample variance
    trials: int = Field(default=2, ge=2)
    snapshots: int = Field(default=0, ge=0)
    output_format: OutputFormat = OutputFormat.json
    count_evicted: bool = False
    catch_up: bool = False

    @field_validator('tau')
    @classmethod
    def tau_in_unit_interval(cls, v):
        if v is not None and not 0.0 < v <= 1.0:
            raise ValueError(f"tau must lie in (0, 1], got {v}")
        return v
