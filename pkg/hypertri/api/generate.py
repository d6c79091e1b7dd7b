import argparse

from ..core.exceptions import ConfigError
from ..utils.logger import logger
from ..utils.stream import write_hypergraph
from ..utils.synthetic import heavy_tailed_stream, uniform_stream
from .options import add_seed_option


def register(subparsers):
    parser = subparsers.add_parser("generate", help="write a synthetic hypergraph stream")
    parser.add_argument("--kind", choices=("uniform", "heavy"), default="uniform")
    parser.add_argument("--edges", type=int, required=True)
    parser.add_argument("--universe", type=int, required=True, help="vertex ids are drawn from [0, universe)")
    parser.add_argument("--min-size", type=int, default=2)
    parser.add_argument("--max-size", type=int, default=5)
    parser.add_argument("--exponent", type=float, default=1.6, help="Zipf exponent for --kind heavy")
    parser.add_argument("--exponent-end", type=float, default=None,
                        help="--kind heavy: drift the exponent linearly to this value by the last edge")
    parser.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    add_seed_option(parser)
    parser.set_defaults(handler=run_generate)


def run_generate(args: argparse.Namespace) -> int:
    if args.edges < 0:
        raise ConfigError(f"--edges must be >= 0, got {args.edges}")
    logger.log_command("generate", kind=args.kind, edges=args.edges, universe=args.universe, seed=args.seed)
    if args.kind == "heavy":
        h = heavy_tailed_stream(args.edges, args.universe, args.min_size, args.max_size,
                                exponent=args.exponent, seed=args.seed, exponent_end=args.exponent_end)
    else:
        h = uniform_stream(args.edges, args.universe, args.min_size, args.max_size, seed=args.seed)
    write_hypergraph(h, args.output)
    return 0
