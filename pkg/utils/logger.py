import logging
import sys
import os
from contextlib import contextmanager
from contextvars import ContextVar
from logging.handlers import RotatingFileHandler
from typing import Iterator, Union

from colorama import init, Fore, Style
from config.loader import ConfigLoader

# Initialize colorama
init(autoreset=True)

_job: ContextVar[str] = ContextVar("job", default="-")


class ColoredFormatter(logging.Formatter):
    """Colour console records by level."""

    COLORS = {
        logging.DEBUG: Fore.CYAN,
        logging.INFO: Fore.GREEN,
        logging.WARNING: Fore.YELLOW,
        logging.ERROR: Fore.RED,
        logging.CRITICAL: Fore.RED + Style.BRIGHT,
    }

    def format(self, record):
        color = self.COLORS.get(record.levelno, Fore.WHITE)
        message = super().format(record)
        return f"{color}{message}{Style.RESET_ALL}"


class JobFilter(logging.Filter):
    """Stamps each record with the command or check it was logged under."""

    def filter(self, record):
        record.job = _job.get()
        return True


@contextmanager
def log_context(job: str) -> Iterator[None]:
    """Tag every record logged inside the block with job; nested blocks join with '/'."""
    outer = _job.get()
    token = _job.set(job if outer == "-" else f"{outer}/{job}")
    try:
        yield
    finally:
        _job.reset(token)


def current_job() -> str:
    return _job.get()


def set_console_level(level: Union[str, int]) -> None:
    """Console verbosity for this run; the log file keeps everything from DEBUG up."""
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.INFO)
    logger.setLevel(min(level, logging.DEBUG))
    for handler in logger.handlers:
        if not isinstance(handler, RotatingFileHandler):
            handler.setLevel(level)


def setup_logger(name="thomseries"):
    """Set up the package logger.

    Results go to stdout, so the console handler writes to stderr.
    """
    log_file_path = ConfigLoader.resolve_path(
        ConfigLoader.get("logging.file", "storage/logs/thomseries.log")
    )
    log_level_str = ConfigLoader.get("logging.level", "INFO")
    log_level = getattr(logging, log_level_str.upper(), logging.INFO)

    os.makedirs(os.path.dirname(log_file_path), exist_ok=True)

    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)

    if logger.handlers:
        return logger

    job_filter = JobFilter()
    file_handler = RotatingFileHandler(
        log_file_path, maxBytes=5*1024*1024, backupCount=3, encoding='utf-8'
    )
    file_handler.setLevel(logging.DEBUG)
    file_handler.addFilter(job_filter)
    file_handler.setFormatter(logging.Formatter(
        '%(asctime)s - %(levelname)s - [%(job)s] %(threadName)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    ))

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.addFilter(job_filter)
    console_handler.setFormatter(ColoredFormatter('%(levelname)s: [%(job)s] %(message)s'))

    logger.addHandler(file_handler)
    logger.addHandler(console_handler)

    return logger


logger = setup_logger()
