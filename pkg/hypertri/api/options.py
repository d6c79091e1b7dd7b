"""
Flags shared by the estimator commands and their translation into a RunConfig.
"""
import argparse

from pydantic import ValidationError

from ..core.config import settings
from ..core.exceptions import ConfigError
from ..schemas.run import Algorithm, OutputFormat, RunConfig
from ..utils.logger import logger

SAMPLING_ALGORITHMS = (Algorithm.htcount.value, Algorithm.htcount_p.value)


def add_input_argument(parser: argparse.ArgumentParser):
    parser.add_argument("file", help="hypergraph stream, one hyperedge per line ('-' for stdin)")


def add_seed_option(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=settings.seed,
                        help="random seed (default: HYPERTRI_SEED or 0)")


def add_format_option(parser: argparse.ArgumentParser, default: OutputFormat = OutputFormat.json):
    parser.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat],
                        default=default.value)


def add_estimator_options(parser: argparse.ArgumentParser, memory_required: bool = True):
    parser.add_argument("--algo", dest="algorithm", choices=SAMPLING_ALGORITHMS, default=Algorithm.htcount.value)
    if memory_required:
        parser.add_argument("--memory", dest="budget", type=int, required=True,
                            help="memory budget in vertex slots (4 bytes each)")
    parser.add_argument("--tau", type=float, default=None,
                        help="htcount-p utilization threshold in (0, 1]; default follows the budget")
    parser.add_argument("--max-subsets", type=int, default=settings.max_subsets,
                        help="htcount-p subset limit")
    parser.add_argument("--count-evicted", action="store_true", default=settings.count_evicted,
                        help="htcount: also count an arriving edge that displaced an older one")
    parser.add_argument("--catch-up", action="store_true", default=settings.catch_up_routing,
                        help="htcount-p: keep routing to a newest subset whose inclusion probability lags")
    add_seed_option(parser)


def parse_list(text: str, cast, flag: str) -> list:
    try:
        values = [cast(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"{flag}: cannot parse {text!r}")
    if not values:
        raise ConfigError(f"{flag}: empty list")
    return values


def run_config_from(args: argparse.Namespace, **overrides) -> RunConfig:
    """Validated RunConfig from parsed flags; pydantic errors become ConfigError."""
    fields = {
        "algorithm": args.algorithm,
        "budget": getattr(args, "budget", 1),
        "tau": args.tau,
        "max_subsets": args.max_subsets,
        "seed": args.seed,
        "count_evicted": args.count_evicted,
        "catch_up": getattr(args, "catch_up", False),
    }
    if getattr(args, "output_format", None):
        fields["output_format"] = args.output_format
    fields.update(overrides)
    try:
        config = RunConfig(**fields)
    except ValidationError as e:
        problems = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
        raise ConfigError(problems)

    if config.count_evicted and config.algorithm is Algorithm.htcount_p:
        logger.warning("--count-evicted only applies to htcount; ignored", algorithm=config.algorithm.value)
    if config.catch_up and config.algorithm is Algorithm.htcount:
        logger.warning("--catch-up only applies to htcount-p; ignored", algorithm=config.algorithm.value)
    return config
