import argparse

from ..bench.harness import run_trials
from ..core.config import settings
from ..schemas.run import OutputFormat
from ..utils.logger import logger
from ..utils.output import write_json, write_trials_csv
from ..utils.stream import read_hypergraph
from .options import add_estimator_options, add_format_option, add_input_argument, run_config_from


def register(subparsers):
    parser = subparsers.add_parser("bench", help="repeated seeded trials against the exact counts")
    add_input_argument(parser)
    add_estimator_options(parser)
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--workers", type=int, default=settings.trial_workers,
                        help="worker processes; output does not depend on it")
    parser.add_argument("--runs", action="store_true", help="include every trial's end state in JSON output")
    add_format_option(parser)
    parser.set_defaults(handler=run_bench)


def run_bench(args: argparse.Namespace) -> int:
    config = run_config_from(args, trials=args.trials)
    logger.log_command("bench", source=args.file, algorithm=config.algorithm.value,
                       budget=config.budget, trials=config.trials, seed=config.seed)
    h = read_hypergraph(args.file)
    stats = run_trials(h, config, config.trials, config.seed, workers=args.workers)

    if args.output_format == OutputFormat.csv.value:
        write_trials_csv(stats)
    else:
        write_json(stats if args.runs else stats.model_copy(update={"runs": []}))
    return 0
