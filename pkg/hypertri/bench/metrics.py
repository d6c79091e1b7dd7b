from typing import Optional, Sequence

from ..core.exceptions import ContractViolation
from ..estimators.htcount import correction_gamma, correction_theta


def relative_error(estimate: float, exact: float) -> Optional[float]:
    """|exact - estimate| / exact; None (not applicable) when exact is 0."""
    if exact == 0:
        return None
    return abs(exact - estimate) / exact


def memory_utilization(used_slots: int, budget: int) -> float:
    if budget <= 0:
        raise ContractViolation(f"budget must be positive, got {budget}")
    return used_slots / budget


def throughput(bytes_processed: int, elapsed_seconds: float) -> float:
    """KB/s over raw input bytes."""
    if elapsed_seconds <= 0:
        raise ContractViolation(f"elapsed time must be positive, got {elapsed_seconds}")
    return (bytes_processed / 1024) / elapsed_seconds


def variance_bound_partitioned(c: float, phi: float) -> float:
    return (2 * c * c - c) * phi - c * c


def variance_bound_hybrid(c: float, m: int, sample_size: int) -> float:
    return variance_bound_partitioned(c, correction_theta(m, sample_size))


def variance_bound_outer(c: float, m: int, sample_size: int) -> float:
    """Also the bound for each hyper-edge class count."""
    return variance_bound_partitioned(c, correction_gamma(m, sample_size))


def error_trend_ok(values: Sequence[float], allowed_inversions: int = 1) -> bool:
    """True when ``values`` is non-increasing except for at most ``allowed_inversions`` rises."""
    rises = sum(1 for before, after in zip(values, values[1:]) if after > before)
    return rises <= allowed_inversions
