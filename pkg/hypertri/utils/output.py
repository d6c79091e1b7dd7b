"""
JSON and CSV emitters for command results. JSON keys follow model field
order; CSV reals carry 6 significant digits and integers full precision.
"""
import csv
import json
import sys
from typing import Any, Iterable, Optional, TextIO

from pydantic import BaseModel

from ..schemas.bench import PairedRun, Snapshot, SweepPoint, TrialStatistics
from ..schemas.estimates import QUANTITIES

SNAPSHOT_COLUMNS = ("edges_processed", *QUANTITIES, "utilization", "elapsed")


def format_number(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def to_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), indent=2)


def write_json(model: BaseModel, out: Optional[TextIO] = None):
    out = out or sys.stdout
    out.write(to_json(model) + "\n")


def write_json_list(models: Iterable[BaseModel], out: Optional[TextIO] = None):
    out = out or sys.stdout
    out.write(json.dumps([m.model_dump(mode="json") for m in models], indent=2) + "\n")


def write_record_csv(model: BaseModel, out: Optional[TextIO] = None):
    """One header row and one value row from a flat model."""
    out = out or sys.stdout
    record = model.model_dump()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(record.keys())
    writer.writerow(format_number(v) for v in record.values())


def write_trials_csv(stats: TrialStatistics, out: Optional[TextIO] = None):
    """One row per quantity."""
    out = out or sys.stdout
    writer = csv.writer(out, lineterminator="\n")
    fields = ("exact", "mean", "stderr", "variance", "variance_bound",
              "relative_error_of_mean", "mean_relative_error", "median_relative_error")
    writer.writerow(("quantity", *fields))
    for name, q in stats.quantities.items():
        writer.writerow((name, *(format_number(getattr(q, f)) for f in fields)))


class SnapshotWriter:
    """Streams snapshot rows as they are produced, flushing each line."""

    def __init__(self, out: Optional[TextIO] = None, with_exact: bool = False, flush: bool = True):
        self.out = out or sys.stdout
        self.with_exact = with_exact
        self.flush = flush
        self._writer = csv.writer(self.out, lineterminator="\n")
        self._header_written = False

    def _columns(self) -> tuple[str, ...]:
        if self.with_exact:
            return SNAPSHOT_COLUMNS + tuple(f"exact_{name}" for name in QUANTITIES)
        return SNAPSHOT_COLUMNS

    def write(self, snapshot: Snapshot):
        if not self._header_written:
            self._writer.writerow(self._columns())
            self._header_written = True
        row = [snapshot.edges_processed]
        row += [getattr(snapshot.estimates, name) for name in QUANTITIES]
        row += [snapshot.utilization, snapshot.elapsed_seconds]
        if self.with_exact:
            row += [getattr(snapshot.exact, name) if snapshot.exact else None for name in QUANTITIES]
        self._writer.writerow(format_number(v) for v in row)
        if self.flush:
            self.out.flush()


def write_sweep_csv(points: Iterable[SweepPoint], out: Optional[TextIO] = None):
    out = out or sys.stdout
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("budget", "tau", "trials", "mean_utilization",
                     *(f"mean_error_{n}" for n in QUANTITIES),
                     *(f"median_error_{n}" for n in QUANTITIES)))
    for p in points:
        writer.writerow(format_number(v) for v in (
            p.budget, p.tau, p.trials, p.mean_utilization,
            *(p.mean_relative_error.get(n) for n in QUANTITIES),
            *(p.median_relative_error.get(n) for n in QUANTITIES),
        ))


def write_paired_csv(rows: Iterable[PairedRun], out: Optional[TextIO] = None):
    out = out or sys.stdout
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("seed", "htcount_utilization", "htcount_p_utilization", "utilization_gap",
                     "htcount_pair_factor", "htcount_p_pair_factor", "subsets"))
    for r in rows:
        writer.writerow(format_number(v) for v in (
            r.seed, r.htcount_utilization, r.htcount_p_utilization, r.utilization_gap,
            r.htcount_pair_factor, r.htcount_p_pair_factor, r.subsets,
        ))
