import logging
import logging.handlers
import os
from typing import Optional, Union
from ..core.config import settings


class HyperTriLogger:
    """Process-wide logger for the estimators, the bench harness and the CLI"""

    _instance = None
    _logger = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(HyperTriLogger, cls).__new__(cls)
            cls._instance._setup_logger()
        return cls._instance

    def _setup_logger(self):
        """Attach a stderr handler and, when HYPERTRI_LOG_FILE is set, a rotating file"""
        self._logger = logging.getLogger('hypertri')
        self._logger.setLevel(self._resolve_level(settings.log_level))

        # Prevent duplicate handlers
        if self._logger.handlers:
            return

        formatter = logging.Formatter(
            '%(asctime)s - %(levelname)s - %(name)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

        # stdout carries command results, so diagnostics go to stderr
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        self._logger.addHandler(console_handler)

        if settings.log_file:
            file_handler = logging.handlers.RotatingFileHandler(
                os.path.join(os.getcwd(), settings.log_file),
                maxBytes=10 * 1024 * 1024,
                backupCount=5
            )
            file_handler.setFormatter(formatter)
            self._logger.addHandler(file_handler)

    @staticmethod
    def _resolve_level(level: Union[str, int]) -> int:
        if isinstance(level, int):
            return level
        return getattr(logging, str(level).upper(), logging.INFO)

    def set_level(self, level: Union[str, int]):
        """Override the configured level, e.g. from -v / -q on the command line"""
        self._logger.setLevel(self._resolve_level(level))

    def debug(self, message: str, **kwargs):
        self._logger.debug(self._format_message(message, **kwargs))

    def info(self, message: str, **kwargs):
        self._logger.info(self._format_message(message, **kwargs))

    def warning(self, message: str, **kwargs):
        self._logger.warning(self._format_message(message, **kwargs))

    def error(self, message: str, **kwargs):
        self._logger.error(self._format_message(message, **kwargs))

    def critical(self, message: str, **kwargs):
        self._logger.critical(self._format_message(message, **kwargs))

    def log_command(self, command: str, source: Optional[str] = None, **kwargs):
        """Log the start of a CLI command"""
        source_info = f" ({source})" if source else ""
        self.info(f"Command: {command}{source_info}", **kwargs)

    def log_run_summary(self, algorithm: str, observed: int, sampled: int, elapsed_seconds: float = None):
        """Log the end-of-stream state of one estimator run"""
        duration_info = f" ({elapsed_seconds:.3f}s)" if elapsed_seconds else ""
        self.debug(f"Run finished: {algorithm} observed={observed} sampled={sampled}{duration_info}")

    def log_error_with_context(self, error: Exception, context: str = ""):
        """Log error with context information"""
        context_info = f" - Context: {context}" if context else ""
        self._logger.error(f"Exception occurred: {str(error)}{context_info}", exc_info=True)

    @staticmethod
    def _render(value) -> str:
        if isinstance(value, float):
            return f"{value:.6g}"
        return str(value)

    def _format_message(self, message: str, **kwargs) -> str:
        """'message | k=v, k=v'; floats are shortened to 6 significant digits"""
        if kwargs:
            context = ", ".join(f"{k}={self._render(v)}" for k, v in kwargs.items())
            return f"{message} | {context}"
        return message


# Create global logger instance
logger = HyperTriLogger()
