import argparse

from ..estimators.oracle import exact_count
from ..schemas.run import OutputFormat
from ..utils.logger import logger
from ..utils.output import write_json, write_record_csv
from ..utils.stream import read_hypergraph
from .options import add_format_option, add_input_argument


def register(subparsers):
    parser = subparsers.add_parser("exact", help="exact brute-force counts (small inputs only)")
    add_input_argument(parser)
    parser.add_argument("--edge-cap", type=int, default=None, help="refuse inputs with more hyperedges")
    add_format_option(parser)
    parser.set_defaults(handler=run_exact)


def run_exact(args: argparse.Namespace) -> int:
    logger.log_command("exact", source=args.file)
    h = read_hypergraph(args.file)
    counts = exact_count(h, edge_cap=args.edge_cap)
    if args.output_format == OutputFormat.csv.value:
        write_record_csv(counts)
    else:
        write_json(counts)
    return 0
