"""
Logging utilities for the verification driver.
"""
import logging
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(verbose: bool = False, log_file: Optional[str] = None) -> None:
    """Configure the root logger once for a CLI invocation"""
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
    if log_file:
        handler = logging.FileHandler(log_file, mode='a', encoding='utf-8')
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger().addHandler(handler)


class RunLogger:
    """Logger that carries keyword context for a run or a single check"""

    def __init__(self, name: str, **context):
        self.logger = logging.getLogger(name)
        self.context = context

    def bind(self, **context) -> 'RunLogger':
        """Child logger with extra context"""
        child = RunLogger(self.logger.name, **self.context)
        child.context.update(context)
        return child

    def info(self, message: str, **kwargs):
        """Log info level message"""
        self._log(logging.INFO, message, **kwargs)

    def debug(self, message: str, **kwargs):
        """Log debug level message"""
        self._log(logging.DEBUG, message, **kwargs)

    def warning(self, message: str, **kwargs):
        """Log warning level message"""
        self._log(logging.WARNING, message, **kwargs)

    def error(self, message: str, error: Optional[Exception] = None, **kwargs):
        """Log error level message"""
        if error:
            message = f"{message}: {str(error)}"
        self._log(logging.ERROR, message, **kwargs)

    def _log(self, level: int, message: str, **kwargs):
        context = dict(self.context, **kwargs)
        if context:
            message = f"{message} [{' '.join(f'{k}={v}' for k, v in context.items())}]"
        self.logger.log(level, message)
