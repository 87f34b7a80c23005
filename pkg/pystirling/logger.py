"""
Logging configuration for pystirling

Logging is controlled by two environment variables:
- PYSTIRLING_LOG_LEVEL: the log level to use, either numeric (`10`) or by name (`DEBUG`). Defaults to `WARNING`.
- PYSTIRLING_ENABLE_LOGGING: whether to enable logging. Defaults to `True`.

Records go to stderr.
"""
import logging
import sys
from os import environ
from typing import Optional, Union

FORMAT = "[%(asctime)s] [%(name)s] [%(levelname)s] %(message)s"

logger = logging.getLogger("pystirling")
handler = logging.StreamHandler(sys.stderr)
handler.setFormatter(logging.Formatter(FORMAT))
logger.addHandler(handler)
logger.propagate = False


def parse_level(value: Optional[Union[str, int]]) -> int:
    """
    Resolves a level given as number or name, falling back to `WARNING` for anything unknown.
    """
    if value is None:
        return logging.WARNING
    if isinstance(value, int):
        return value
    if value.strip().lstrip("-").isdigit():
        return int(value)

    level = logging.getLevelName(value.strip().upper())
    return level if isinstance(level, int) else logging.WARNING


def configure_logging(level: Optional[Union[str, int]] = None, enabled: bool = True) -> None:
    resolved = parse_level(level)
    logger.setLevel(resolved)
    handler.setLevel(resolved)
    logger.disabled = not enabled


configure_logging(
    environ.get("PYSTIRLING_LOG_LEVEL"),
    environ.get("PYSTIRLING_ENABLE_LOGGING", "True").lower() == "true",
)
