from typing import Optional, Union

from ..core.config import settings
from ..core.exceptions import ConfigError
from ..core.hypergraph import IntersectionIndex
from ..schemas.run import Algorithm, RunConfig
from .htcount import HTCount
from .htcountp import HTCountP

Estimator = Union[HTCount, HTCountP]


def build_estimator(config: RunConfig, seed: int = None,
                    intersections: Optional[IntersectionIndex] = None) -> Estimator:
    """Fresh estimator for ``config``; ``seed`` overrides config.seed."""
    seed = config.seed if seed is None else seed
    if config.algorithm is Algorithm.htcount:
        return HTCount(config.budget, seed=seed, count_evicted=config.count_evicted or settings.count_evicted,
                       intersections=intersections)
    if config.algorithm is Algorithm.htcount_p:
        tau = config.tau if config.tau is not None else settings.default_tau
        return HTCountP(config.budget, seed=seed, tau=tau, max_subsets=config.max_subsets,
                        catch_up=config.catch_up or settings.catch_up_routing, intersections=intersections)
    raise ConfigError(f"{config.algorithm.value} is not a streaming estimator")
