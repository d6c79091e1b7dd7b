
import os

import pytest

from hypertri.bench.harness import (
    paired_runs,
    resolve_workers,
    run_single,
    run_trials,
    snapshot_points,
    stream_index,
    sweep,
    track,
)
from hypertri.core.exceptions import ConfigError
from hypertri.estimators import build_estimator
from hypertri.estimators.oracle import exact_count
from hypertri.schemas.estimates import QUANTITIES
from hypertri.schemas.run import Algorithm, RunConfig
from hypertri.utils.synthetic import heavy_tailed_stream, uniform_stream


@pytest.fixture
def small_stream():
    return uniform_stream(80, universe=25, min_size=2, max_size=6, seed=11)


class TestRunTrials:
    """Test suite for run_trials."""

    def test_full_budget_has_no_error(self, small_stream):
        """Test that a budget covering every slot gives zero variance and zero error."""
        config = RunConfig(algorithm=Algorithm.htcount, budget=small_stream.total_slots)

        stats = run_trials(small_stream, config, trials=5, base_seed=0)

        for name, q in stats.quantities.items():
            assert q.variance == 0
            assert q.stderr == 0
            assert q.mean == q.exact
            if q.exact > 0:
                assert q.mean_relative_error == 0
                assert q.relative_error_of_mean == 0
            else:
                assert q.mean_relative_error is None

    def test_seeds_follow_base_seed(self, small_stream):
        """Test that trial k runs with base_seed + k."""
        config = RunConfig(algorithm=Algorithm.htcount, budget=60)

        stats = run_trials(small_stream, config, trials=4, base_seed=100)

        assert [r.seed for r in stats.runs] == [100, 101, 102, 103]
        assert stats.runs[2] == run_single(small_stream, config, 102)

    def test_deterministic(self, small_stream):
        """Test that identical inputs give identical statistics."""
        config = RunConfig(algorithm=Algorithm.htcount_p, budget=60)

        first = run_trials(small_stream, config, trials=6, base_seed=3)
        second = run_trials(small_stream, config, trials=6, base_seed=3)

        assert first.model_dump_json() == second.model_dump_json()

    def test_workers_do_not_change_output(self, small_stream):
        """Test that a process pool merges results in seed order."""
        config = RunConfig(algorithm=Algorithm.htcount, budget=60)

        serial = run_trials(small_stream, config, trials=4, base_seed=7, workers=1)
        pooled = run_trials(small_stream, config, trials=4, base_seed=7, workers=2)

        assert serial.model_dump_json() == pooled.model_dump_json()

    def test_statistics_are_consistent(self, small_stream):
        """Test stderr = sqrt(variance / trials) and non-negative variance."""
        config = RunConfig(algorithm=Algorithm.htcount, budget=50)

        stats = run_trials(small_stream, config, trials=8, base_seed=0)

        for q in stats.quantities.values():
            assert q.variance >= 0
            assert q.stderr == pytest.approx((q.variance / 8) ** 0.5)
        assert stats.quantities["inner"].variance == 0
        assert 0 <= stats.mean_utilization <= 1

    def test_inner_has_no_bound_but_outer_does(self, small_stream):
        """Test which quantities carry a variance bound."""
        config = RunConfig(algorithm=Algorithm.htcount, budget=50)

        stats = run_trials(small_stream, config, trials=3, base_seed=0)

        assert stats.quantities["inner"].variance_bound is None
        assert stats.quantities["hybrid"].variance_bound is not None
        assert stats.quantities["outer"].variance_bound is not None

    def test_exact_algorithm_rejected(self, small_stream):
        """Test that the oracle is not a trial algorithm."""
        with pytest.raises(ConfigError):
            run_trials(small_stream, RunConfig(algorithm=Algorithm.exact, budget=10), trials=2, base_seed=0)

    @pytest.mark.parametrize("trials", [0, 1])
    def test_needs_two_trials(self, small_stream, trials):
        """Test that fewer than two trials are rejected, since variance needs two."""
        with pytest.raises(ConfigError):
            run_trials(small_stream, RunConfig(budget=10), trials=trials, base_seed=0)

    def test_index_does_not_change_output(self, small_stream, mocker):
        """Test that disabling the intersection index leaves every trial unchanged."""
        config = RunConfig(algorithm=Algorithm.htcount_p, budget=60)
        indexed = run_trials(small_stream, config, trials=4, base_seed=2, workers=1)

        mock_settings = mocker.patch("hypertri.bench.harness.settings")
        mock_settings.intersection_cache = False
        direct = run_trials(small_stream, config, trials=4, base_seed=2, workers=1)

        assert indexed.model_dump_json() == direct.model_dump_json()


class TestSnapshotPoints:
    """Test suite for snapshot placement."""

    def test_single_snapshot_at_end(self):
        """Test that one snapshot sits at the last edge."""
        assert snapshot_points(80, 1) == [80]

    def test_even_spacing(self):
        """Test four snapshots over 80 edges."""
        assert snapshot_points(80, 4) == [20, 40, 60, 80]

    def test_short_stream(self):
        """Test that more snapshots than edges collapses to one per edge."""
        assert snapshot_points(3, 10) == [1, 2, 3]

    def test_empty_stream(self):
        """Test that an empty stream has no snapshots."""
        assert snapshot_points(0, 5) == []

    def test_count_must_be_positive(self):
        """Test the snapshot-count precondition."""
        with pytest.raises(ConfigError):
            snapshot_points(10, 0)


class TestTrack:
    """Test suite for track."""

    def test_series_shape(self, small_stream):
        """Test spacing, monotone accumulators and utilization range."""
        config = RunConfig(algorithm=Algorithm.htcount_p, budget=60, seed=4)

        series = track(small_stream, config, 8)

        processed = [s.edges_processed for s in series.snapshots]
        assert processed == snapshot_points(len(small_stream), 8)
        assert processed == sorted(set(processed))
        for before, after in zip(series.snapshots, series.snapshots[1:]):
            for name in QUANTITIES:
                assert getattr(after.estimates, name) >= getattr(before.estimates, name)
        assert all(0 <= s.utilization <= 1 for s in series.snapshots)

    def test_final_snapshot_matches_fresh_run(self, small_stream):
        """Test that the last snapshot equals a full run with the same seed."""
        config = RunConfig(algorithm=Algorithm.htcount, budget=60, seed=9)

        series = track(small_stream, config, 5)

        assert series.snapshots[-1].estimates == build_estimator(config).run(small_stream)

    def test_with_exact_reaches_oracle(self, small_stream):
        """Test that the exact running counts end at the oracle's counts."""
        config = RunConfig(algorithm=Algorithm.htcount, budget=60)

        series = track(small_stream, config, 4, with_exact=True)

        assert series.snapshots[-1].exact == exact_count(small_stream)

    def test_callback_sees_every_snapshot(self, small_stream, mocker):
        """Test that on_snapshot is called once per snapshot."""
        callback = mocker.Mock()

        series = track(small_stream, RunConfig(budget=60), 6, on_snapshot=callback)

        assert callback.call_count == len(series.snapshots) == 6


class TestSweep:
    """Test suite for sweep."""

    def test_grid(self, small_stream):
        """Test one point per budget and tau."""
        points = sweep(small_stream, Algorithm.htcount_p, [40, 80], trials=2, base_seed=0, taus=[0.8, 0.95])

        assert [(p.budget, p.tau) for p in points] == [(40, 0.8), (40, 0.95), (80, 0.8), (80, 0.95)]
        assert all(set(p.median_relative_error) == set(QUANTITIES) for p in points)

    def test_taus_ignored_for_htcount(self, small_stream):
        """Test that htcount sweeps budgets only."""
        points = sweep(small_stream, Algorithm.htcount, [40, 80], trials=2, base_seed=0, taus=[0.8, 0.95])

        assert [(p.budget, p.tau) for p in points] == [(40, None), (80, None)]


class TestStreamIndex:
    """Test suite for the per-stream intersection index."""

    def test_built_by_default(self, small_stream):
        """Test that a small stream gets an index covering its partners."""
        index = stream_index(small_stream)

        assert index is not None
        assert len(index) > 0

    def test_skipped_above_limit(self, small_stream, mocker):
        """Test that a stream with more vertex-pair incidences than the limit is not indexed."""
        mock_settings = mocker.patch("hypertri.bench.harness.settings")
        mock_settings.intersection_cache = True
        mock_settings.intersection_cache_limit = 1

        assert stream_index(small_stream) is None

    def test_disabled(self, small_stream, mocker):
        """Test that the cache switch turns the index off."""
        mock_settings = mocker.patch("hypertri.bench.harness.settings")
        mock_settings.intersection_cache = False

        assert stream_index(small_stream) is None


class TestResolveWorkers:
    """Test suite for worker-count resolution."""

    def test_explicit(self):
        """Test that a positive count is used as given."""
        assert resolve_workers(3) == 3

    def test_zero_means_every_cpu(self):
        """Test that 0 starts one worker per CPU."""
        assert resolve_workers(0) == (os.cpu_count() or 1)

    def test_negative_rejected(self):
        """Test that a negative count is a configuration error."""
        with pytest.raises(ConfigError):
            resolve_workers(-1)

    def test_settings_fallback(self, mocker):
        """Test that None falls back to HYPERTRI_TRIAL_WORKERS."""
        mock_settings = mocker.patch("hypertri.bench.harness.settings")
        mock_settings.trial_workers = 5

        assert resolve_workers(None) == 5


class TestPairedRuns:
    """Test suite for paired_runs."""

    def test_rows(self):
        """Test one row per seed with both utilizations and their gap."""
        h = heavy_tailed_stream(300, universe=200, min_size=2, max_size=30, seed=3)

        rows = paired_runs(h, 200, range(3), tau=0.9)

        assert [r.seed for r in rows] == [0, 1, 2]
        for r in rows:
            assert 0 <= r.htcount_utilization <= 1
            assert 0 <= r.htcount_p_utilization <= 1
            assert r.utilization_gap == pytest.approx(r.htcount_p_utilization - r.htcount_utilization)
            assert r.subsets >= 1
            assert r.htcount_pair_factor is not None

    def test_matches_single_runs(self):
        """Test that each side equals a standalone run with the same seed."""
        h = heavy_tailed_stream(200, universe=150, min_size=2, max_size=25, seed=8)

        row = paired_runs(h, 150, [4], tau=0.9)[0]

        single = run_single(h, RunConfig(algorithm=Algorithm.htcount, budget=150), 4)
        partitioned = run_single(h, RunConfig(algorithm=Algorithm.htcount_p, budget=150, tau=0.9), 4)
        assert row.htcount_utilization == single.memory_used / 150
        assert row.htcount_p_utilization == partitioned.memory_used / 150
        assert row.htcount_pair_factor == single.pair_factor
        assert row.htcount_p_pair_factor == partitioned.pair_factor
