import argparse
import time

from ..bench.metrics import throughput
from ..estimators import build_estimator
from ..schemas.estimates import EstimateReport
from ..schemas.run import OutputFormat
from ..utils.logger import logger
from ..utils.output import write_json, write_record_csv
from ..utils.stream import StreamSource, parse_stream
from .options import add_estimator_options, add_format_option, add_input_argument, run_config_from


def register(subparsers):
    parser = subparsers.add_parser("estimate", help="single-pass streaming estimate")
    add_input_argument(parser)
    add_estimator_options(parser)
    add_format_option(parser)
    parser.add_argument("--omit-timing", action="store_true",
                        help="report zero elapsed time and no throughput, for byte-identical reruns")
    parser.set_defaults(handler=run_estimate)


def run_estimate(args: argparse.Namespace) -> int:
    """
    Stream the file once through the chosen estimator. The input is never
    held in memory; only the sample is.
    """
    config = run_config_from(args)
    logger.log_command("estimate", source=args.file, algorithm=config.algorithm.value,
                       budget=config.budget, seed=config.seed)
    estimator = build_estimator(config)
    source = StreamSource(args.file)

    started = time.perf_counter()
    estimates = estimator.run(parse_stream(source))
    elapsed = time.perf_counter() - started
    logger.log_run_summary(estimator.name, estimator.observed, estimator.sampled, elapsed)

    report = EstimateReport(
        **estimates.model_dump(),
        observed=estimator.observed,
        sampled=estimator.sampled,
        memory_used=estimator.memory_used,
        memory_budget=estimator.memory_budget,
        utilization=estimator.utilization,
        elapsed_seconds=0.0 if args.omit_timing else elapsed,
        throughput_kbps=None if args.omit_timing or elapsed <= 0 else throughput(source.bytes_read, elapsed),
        seed=config.seed,
    )
    if args.output_format == OutputFormat.csv.value:
        write_record_csv(report)
    else:
        write_json(report)
    return 0
