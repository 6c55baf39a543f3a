import os
import sys

from loguru import logger

from config.settings import settings

LOG_DIRS = [
    os.path.join(settings.log_dir, "system"),
    os.path.join(settings.log_dir, "checks"),
]

for log_dir in LOG_DIRS:
    os.makedirs(log_dir, exist_ok=True)

logger.add(
    os.path.join(settings.log_dir, "system", "system.log"),
    level=settings.log_level,
    rotation="5 MB",
    format="{time} | {level} | {message}",
)

logger.add(
    os.path.join(settings.log_dir, "checks", "checks.log"),
    level="INFO",
    rotation="5 MB",
    format="{time} | {level} | {message}",
    filter=lambda record: record["extra"].get("type") in {"check", "anomaly"},
)

_console_sink_id: int | None = 0


def configure_console(verbose: bool = False):
    """Replace the stderr sink; stdout stays reserved for reports."""
    global _console_sink_id
    if _console_sink_id is not None:
        try:
            logger.remove(_console_sink_id)
        except ValueError:
            pass
    _console_sink_id = logger.add(
        sys.stderr,
        level="INFO" if verbose else "WARNING",
        format="{time:HH:mm:ss} | {level} | {message}",
    )


def log_system(message: str):
    logger.info(message)


def log_check(message: str):
    logger.bind(type="check").info(message)


def log_anomaly(message: str):
    logger.bind(type="anomaly").warning(message)
