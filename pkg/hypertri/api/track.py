import argparse

from ..bench.harness import track
from ..core.config import settings
from ..schemas.run import OutputFormat
from ..utils.logger import logger
from ..utils.output import SnapshotWriter, write_json
from ..utils.stream import read_hypergraph
from .options import add_estimator_options, add_format_option, add_input_argument, run_config_from


def register(subparsers):
    parser = subparsers.add_parser("track", help="estimates at evenly spaced points of the stream")
    add_input_argument(parser)
    add_estimator_options(parser)
    parser.add_argument("--snapshots", type=int, default=10)
    parser.add_argument("--with-exact", action="store_true", help="add exact running counts as exact_* columns")
    parser.add_argument("--omit-timing", action="store_true", help="report zero elapsed time")
    add_format_option(parser, default=OutputFormat.csv)
    parser.set_defaults(handler=run_track)


def run_track(args: argparse.Namespace) -> int:
    config = run_config_from(args, snapshots=args.snapshots)
    logger.log_command("track", source=args.file, algorithm=config.algorithm.value,
                       budget=config.budget, snapshots=config.snapshots, seed=config.seed)
    h = read_hypergraph(args.file)

    def sanitize(snapshot):
        if args.omit_timing:
            snapshot.elapsed_seconds = 0.0
        return snapshot

    if args.output_format == OutputFormat.csv.value:
        writer = SnapshotWriter(with_exact=args.with_exact, flush=settings.snapshot_flush)
        track(h, config, config.snapshots, with_exact=args.with_exact,
              on_snapshot=lambda s: writer.write(sanitize(s)))
    else:
        series = track(h, config, config.snapshots, with_exact=args.with_exact)
        for snapshot in series.snapshots:
            sanitize(snapshot)
        write_json(series)
    return 0
