import argparse

from ..bench.harness import paired_runs
from ..core.config import settings
from ..core.exceptions import ConfigError
from ..schemas.run import OutputFormat
from ..utils.logger import logger
from ..utils.output import write_json_list, write_paired_csv
from ..utils.stream import read_hypergraph
from .options import add_format_option, add_input_argument, add_seed_option


def register(subparsers):
    parser = subparsers.add_parser("compare", help="HTCount vs HTCount-P end-of-stream utilization per seed")
    add_input_argument(parser)
    parser.add_argument("--memory", dest="budget", type=int, required=True,
                        help="memory budget in vertex slots (4 bytes each)")
    parser.add_argument("--tau", type=float, default=None)
    parser.add_argument("--max-subsets", type=int, default=settings.max_subsets)
    parser.add_argument("--seeds", type=int, default=10, help="number of seeds, starting at --seed")
    add_seed_option(parser)
    add_format_option(parser, default=OutputFormat.csv)
    parser.set_defaults(handler=run_compare)


def run_compare(args: argparse.Namespace) -> int:
    if args.budget < 1:
        raise ConfigError(f"--memory must be >= 1, got {args.budget}")
    if args.seeds < 1:
        raise ConfigError(f"--seeds must be >= 1, got {args.seeds}")
    if args.tau is not None and not 0.0 < args.tau <= 1.0:
        raise ConfigError(f"--tau must lie in (0, 1], got {args.tau}")
    if args.max_subsets < 1:
        raise ConfigError(f"--max-subsets must be >= 1, got {args.max_subsets}")

    logger.log_command("compare", source=args.file, budget=args.budget, seeds=args.seeds, seed=args.seed)
    h = read_hypergraph(args.file)
    rows = paired_runs(h, args.budget, range(args.seed, args.seed + args.seeds),
                       tau=args.tau, max_subsets=args.max_subsets)
    ahead = sum(1 for r in rows if r.utilization_gap >= 0.1)
    logger.info("Comparison finished", seeds=len(rows), ahead_by_10_points=ahead)

    if args.output_format == OutputFormat.csv.value:
        write_paired_csv(rows)
    else:
        write_json_list(rows)
    return 0
