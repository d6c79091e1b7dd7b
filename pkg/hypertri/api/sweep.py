import argparse

from ..bench.harness import sweep
from ..core.config import settings
from ..core.exceptions import ConfigError
from ..schemas.run import Algorithm, OutputFormat
from ..utils.logger import logger
from ..utils.output import write_json_list, write_sweep_csv
from ..utils.stream import read_hypergraph
from .options import SAMPLING_ALGORITHMS, add_format_option, add_input_argument, add_seed_option, parse_list


def register(subparsers):
    parser = subparsers.add_parser("sweep", help="relative error over a grid of budgets and taus")
    add_input_argument(parser)
    parser.add_argument("--algo", dest="algorithm", choices=SAMPLING_ALGORITHMS, default=Algorithm.htcount.value)
    parser.add_argument("--budgets", required=True, help="comma-separated memory budgets")
    parser.add_argument("--taus", default=None, help="comma-separated taus (htcount-p only)")
    parser.add_argument("--max-subsets", type=int, default=settings.max_subsets)
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--workers", type=int, default=settings.trial_workers)
    add_seed_option(parser)
    add_format_option(parser, default=OutputFormat.csv)
    parser.set_defaults(handler=run_sweep)


def run_sweep(args: argparse.Namespace) -> int:
    budgets = parse_list(args.budgets, int, "--budgets")
    taus = parse_list(args.taus, float, "--taus") if args.taus else None
    if any(b < 1 for b in budgets):
        raise ConfigError(f"--budgets: every budget must be >= 1, got {budgets}")
    if taus and any(not 0.0 < t <= 1.0 for t in taus):
        raise ConfigError(f"--taus: every tau must lie in (0, 1], got {taus}")

    algorithm = Algorithm(args.algorithm)
    logger.log_command("sweep", source=args.file, algorithm=algorithm.value,
                       budgets=budgets, taus=taus, trials=args.trials, seed=args.seed)
    h = read_hypergraph(args.file)
    points = sweep(h, algorithm, budgets, args.trials, args.seed, taus=taus,
                   max_subsets=args.max_subsets, workers=args.workers)

    if args.output_format == OutputFormat.csv.value:
        write_sweep_csv(points)
    else:
        write_json_list(points)
    return 0
