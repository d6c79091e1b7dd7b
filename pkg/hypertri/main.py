import argparse
import sys
from typing import Optional, Sequence

from .core.config import settings
from .core.exceptions import HyperTriError
from .api import bench, compare, estimate, exact, generate, sweep, track
from .utils.logger import logger

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
	parser = argparse.ArgumentParser(
		prog="hypertri",
		description="Streaming hyper-triangle estimation over hypergraph edge streams.",
	)
	parser.add_argument("--version", action="version", version=f"{settings.app_name} {settings.app_version}")
	verbosity = parser.add_mutually_exclusive_group()
	verbosity.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
	verbosity.add_argument("-q", "--quiet", action="store_true", help="log errors only")
	subparsers = parser.add_subparsers(dest="command", required=True)

	# Command handlers, one module each
	exact.register(subparsers)
	estimate.register(subparsers)
	bench.register(subparsers)
	track.register(subparsers)
	sweep.register(subparsers)
	compare.register(subparsers)
	generate.register(subparsers)
	return parser


def _diagnostic(message: str):
	sys.stderr.write(f"hypertri: error: {message}\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
	"""
	Parse flags and dispatch to the command handler.
	Exit codes: 0 success, 2 usage/input errors, 1 anything unexpected.
	"""
	parser = build_parser()
	try:
		args = parser.parse_args(argv)
	except SystemExit as e:
		return e.code if isinstance(e.code, int) else EXIT_USAGE

	if args.verbose:
		logger.set_level("DEBUG")
	elif args.quiet:
		logger.set_level("ERROR")

	try:
		return args.handler(args)
	except HyperTriError as exc:
		logger.error(
			"Command failed",
			command=args.command,
			error=str(exc),
			error_type=type(exc).__name__
		)
		_diagnostic(str(exc))
		return EXIT_USAGE
	except OSError as exc:
		logger.error(
			"Input or output failed",
			command=args.command,
			error=str(exc),
			error_type=type(exc).__name__
		)
		_diagnostic(str(exc))
		return EXIT_USAGE
	except Exception as exc:
		logger.log_error_with_context(exc, f"command={args.command}")
		_diagnostic(f"unexpected {type(exc).__name__}: {exc}")
		return EXIT_UNEXPECTED
