"""
Monte-Carlo trial harness: replays one in-memory stream through many seeded
estimators and summarizes them against the exact counts.
"""
import multiprocessing as mp
import os
import time
from functools import partial
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from ..core.config import settings
from ..core.exceptions import ConfigError
from ..core.hypergraph import Hypergraph, IntersectionIndex
from ..estimators import build_estimator
from ..estimators.htcount import HTCount
from ..estimators.oracle import exact_count
from ..schemas.bench import (
    PairedRun,
    QuantityStats,
    Snapshot,
    SnapshotSeries,
    SweepPoint,
    TrialEnd,
    TrialStatistics,
)
from ..schemas.estimates import CLASS_QUANTITIES, QUANTITIES, ExactCounts
from ..schemas.run import Algorithm, RunConfig
from ..utils.logger import logger
from .metrics import memory_utilization, relative_error, variance_bound_partitioned

_worker_stream: Optional[Hypergraph] = None
_worker_index: Optional[IntersectionIndex] = None


def _install_stream(stream: Hypergraph, intersections: Optional[IntersectionIndex]):
    global _worker_stream, _worker_index
    _worker_stream = stream
    _worker_index = intersections


def stream_index(stream: Hypergraph) -> Optional[IntersectionIndex]:
    """Shared-vertex index for repeated replays of ``stream``; None when disabled or too large."""
    if not settings.intersection_cache:
        return None
    volume = IntersectionIndex.pair_volume(stream)
    if volume > settings.intersection_cache_limit:
        logger.info("Skipping the intersection index", pair_volume=volume,
                    limit=settings.intersection_cache_limit)
        return None
    return IntersectionIndex(stream)


def resolve_workers(workers: Optional[int]) -> int:
    workers = settings.trial_workers if workers is None else workers
    if workers < 0:
        raise ConfigError(f"workers must be >= 0, got {workers}")
    return workers or os.cpu_count() or 1


def run_single(stream: Hypergraph, config: RunConfig, seed: int,
               intersections: Optional[IntersectionIndex] = None) -> TrialEnd:
    estimator = build_estimator(config, seed, intersections=intersections)
    estimates = estimator.run(stream)
    return TrialEnd(
        seed=seed,
        estimates=estimates,
        observed=estimator.observed,
        sampled=estimator.sampled,
        memory_used=estimator.memory_used,
        pair_factor=estimator.variance_factor_pair(),
        triple_factor=estimator.variance_factor_triple(),
    )


def _run_in_worker(config: RunConfig, seed: int) -> TrialEnd:
    return run_single(_worker_stream, config, seed, _worker_index)


def _mean_factor(values: list[Optional[float]]) -> Optional[float]:
    present = [v for v in values if v is not None]
    return float(np.mean(present)) if present else None


def _summarize(values: np.ndarray, exact: int, factor: Optional[float]) -> QuantityStats:
    trials = len(values)
    mean = float(np.mean(values))
    variance = float(np.var(values, ddof=1))
    errors = [relative_error(v, exact) for v in values]
    per_trial = [e for e in errors if e is not None]
    return QuantityStats(
        exact=exact,
        mean=mean,
        variance=variance,
        stderr=float(np.sqrt(variance / trials)),
        relative_error_of_mean=relative_error(mean, exact),
        mean_relative_error=float(np.mean(per_trial)) if per_trial else None,
        median_relative_error=float(np.median(per_trial)) if per_trial else None,
        variance_bound=variance_bound_partitioned(exact, factor) if factor is not None else None,
    )


def run_trials(stream: Hypergraph, config: RunConfig, trials: int, base_seed: int,
               exact: Optional[ExactCounts] = None, workers: Optional[int] = None) -> TrialStatistics:
    """
    Run ``trials`` independent estimators with seeds base_seed + k.

    Results are merged in seed order, so the output depends only on the
    arguments, never on ``workers``.
    """
    if config.algorithm is Algorithm.exact:
        raise ConfigError("bench needs a sampling algorithm (htcount or htcount-p)")
    if trials < 2:
        raise ConfigError(f"trials must be >= 2 for a sample variance, got {trials}")
    exact = exact if exact is not None else exact_count(stream)
    workers = resolve_workers(workers)
    seeds = [base_seed + k for k in range(trials)]
    intersections = stream_index(stream)

    logger.debug("Running trials", algorithm=config.algorithm.value, budget=config.budget,
                 trials=trials, base_seed=base_seed, workers=workers, indexed=intersections is not None)
    if workers > 1:
        with mp.Pool(workers, initializer=_install_stream, initargs=(stream, intersections)) as pool:
            runs = pool.map(partial(_run_in_worker, config), seeds)
    else:
        runs = [run_single(stream, config, seed, intersections) for seed in seeds]

    pair_factor = _mean_factor([r.pair_factor for r in runs])
    triple_factor = _mean_factor([r.triple_factor for r in runs])
    factors = {"inner": None, "hybrid": pair_factor, "outer": triple_factor}
    factors.update({name: triple_factor for name in CLASS_QUANTITIES})

    quantities = {}
    for name in QUANTITIES:
        values = np.array([getattr(r.estimates, name) for r in runs], dtype=float)
        quantities[name] = _summarize(values, getattr(exact, name), factors[name])

    return TrialStatistics(
        algorithm=config.algorithm.value,
        budget=config.budget,
        tau=config.tau,
        trials=trials,
        base_seed=base_seed,
        exact=exact,
        runs=runs,
        quantities=quantities,
        mean_utilization=float(np.mean([memory_utilization(r.memory_used, config.budget) for r in runs])),
    )


def snapshot_points(total: int, snapshot_count: int) -> list[int]:
    """Evenly spaced edge counts ending at ``total``; fewer when the stream is short."""
    if snapshot_count < 1:
        raise ConfigError(f"snapshot_count must be >= 1, got {snapshot_count}")
    points = sorted({max(1, round(k * total / snapshot_count)) for k in range(1, snapshot_count + 1)})
    return [p for p in points if p <= total] if total else []


def track(stream: Hypergraph, config: RunConfig, snapshot_count: int, with_exact: bool = False,
          on_snapshot: Optional[Callable[[Snapshot], None]] = None) -> SnapshotSeries:
    """
    One estimator over the stream, recording estimates at evenly spaced points.
    ``with_exact`` replays an unlimited-budget reservoir alongside, which counts exactly.
    """
    estimator = build_estimator(config)
    reference = HTCount(max(stream.total_slots, 1)) if with_exact else None
    points = set(snapshot_points(len(stream), snapshot_count))
    series = SnapshotSeries(algorithm=config.algorithm.value, budget=config.budget, seed=config.seed)

    started = time.perf_counter()
    for e in stream:
        estimator.advance(e)
        if reference is not None:
            reference.advance(e)
        if e.arrival_index not in points:
            continue
        exact = None
        if reference is not None:
            running = reference.estimates
            exact = ExactCounts(**{name: int(round(getattr(running, name))) for name in QUANTITIES})
        snapshot = Snapshot(
            edges_processed=e.arrival_index,
            estimates=estimator.estimates,
            used_slots=estimator.memory_used,
            utilization=estimator.utilization,
            elapsed_seconds=time.perf_counter() - started,
            exact=exact,
        )
        series.snapshots.append(snapshot)
        if on_snapshot is not None:
            on_snapshot(snapshot)
    return series


def sweep(stream: Hypergraph, algorithm: Algorithm, budgets: Sequence[int], trials: int, base_seed: int,
          taus: Optional[Sequence[float]] = None, max_subsets: int = 10,
          workers: Optional[int] = None) -> list[SweepPoint]:
    """Relative error and utilization over a grid of budgets (and taus for htcount-p)."""
    exact = exact_count(stream)
    tau_grid = list(taus) if taus and algorithm is Algorithm.htcount_p else [None]
    points = []
    for budget in budgets:
        for tau in tau_grid:
            config = RunConfig(algorithm=algorithm, budget=budget, tau=tau, max_subsets=max_subsets)
            stats = run_trials(stream, config, trials, base_seed, exact=exact, workers=workers)
            points.append(SweepPoint(
                budget=budget,
                tau=tau,
                trials=trials,
                mean_relative_error={k: q.mean_relative_error for k, q in stats.quantities.items()},
                median_relative_error={k: q.median_relative_error for k, q in stats.quantities.items()},
                mean_utilization=stats.mean_utilization,
            ))
            logger.info("Sweep point finished", budget=budget, tau=tau,
                        outer_median_error=points[-1].median_relative_error.get("outer"))
    return points


def paired_runs(stream: Hypergraph, budget: int, seeds: Iterable[int], tau: Optional[float] = None,
                max_subsets: Optional[int] = None) -> list[PairedRun]:
    """
    HTCount and HTCount-P over the same stream and budget, one pair per seed,
    for the end-of-stream utilization and variance-factor comparisons.
    """
    max_subsets = settings.max_subsets if max_subsets is None else max_subsets
    single_config = RunConfig(algorithm=Algorithm.htcount, budget=budget)
    partition_config = RunConfig(algorithm=Algorithm.htcount_p, budget=budget, tau=tau, max_subsets=max_subsets)
    intersections = stream_index(stream)

    rows = []
    for seed in seeds:
        single = build_estimator(single_config, seed, intersections=intersections)
        single.run(stream)
        partitioned = build_estimator(partition_config, seed, intersections=intersections)
        partitioned.run(stream)
        rows.append(PairedRun(
            seed=seed,
            htcount_utilization=single.utilization,
            htcount_p_utilization=partitioned.utilization,
            htcount_pair_factor=single.variance_factor_pair(),
            htcount_p_pair_factor=partitioned.variance_factor_pair(),
            subsets=partitioned.state.active,
        ))
        logger.debug("Paired run finished", seed=seed, gap=round(rows[-1].utilization_gap, 4),
                     subsets=rows[-1].subsets)
    return rows
