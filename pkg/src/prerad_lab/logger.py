"""Logging configuration for the prerad-lab command line."""
import logging
import sys
from pathlib import Path
from typing import Optional

CONSOLE_FORMAT = '%(levelname)s: %(message)s'
DETAILED_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def setup_logger(
    name: str = "prerad_lab",
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> logging.Logger:
    """
    Configure and return the workbench logger.

    Console output goes to stderr so that reports printed on stdout stay
    machine-readable. The console shows INFO and above as ``LEVEL: message``;
    with ``verbose`` it shows DEBUG records (per-proposition statuses, cap
    fallbacks, enumeration sizes) with timestamps and module names.

    A log file, when given, always receives DEBUG records in the detailed
    format, so a quiet console run still leaves a full trace behind.

    Args:
        name: Logger name; module loggers below ``prerad_lab`` inherit it
        log_file: Optional path to log file for file-based logging
        verbose: Show DEBUG records on the console

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.handlers.clear()
    logger.propagate = False

    console_level = logging.DEBUG if verbose else logging.INFO
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(
        logging.Formatter(fmt=DETAILED_FORMAT, datefmt=DATE_FORMAT) if verbose
        else logging.Formatter(fmt=CONSOLE_FORMAT)
    )
    logger.addHandler(console_handler)
    logger.setLevel(console_level)

    if log_file:
        try:
            log_file.parent.mkdir(parents=True, exist_ok=True)

            file_handler = logging.FileHandler(log_file, mode='a', encoding='utf-8')
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(logging.Formatter(fmt=DETAILED_FORMAT, datefmt=DATE_FORMAT))
            logger.addHandler(file_handler)
            logger.setLevel(logging.DEBUG)

            logger.debug(f"File logging enabled: {log_file}")
        except OSError as e:
            logger.error(f"Failed to enable file logging: {e}")

    return logger
