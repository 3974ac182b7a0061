"""Runtime settings.

Values are read from the process environment, optionally seeded from a
``.env`` file in the working directory.  Every setting has a default so
the library works without any configuration; the CLI lets flags win over
whatever is found here.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from .errors import ConfigError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    log_level: str = "WARNING"
    max_witnesses: int = 100
    series_minor_max: int = 12
    workers: int = 1
    database_url: str | None = None
    graphic_max_edges: int = 8
    theorem3_max_edges: int = 9
    binary_max_rank: int = 3
    binary_max_cols: int = 7
    uniform_max: int = 8
    clutter_n: int = 5


def _int_setting(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ConfigError(f"{name} must be non-negative, got {value}")
    return value


def load_settings(dotenv: bool = True) -> Settings:
    if dotenv:
        load_dotenv()
    settings = Settings(
        log_level=os.environ.get("MATROIDKIT_LOG_LEVEL", "WARNING").upper(),
        max_witnesses=_int_setting("MATROIDKIT_MAX_WITNESSES", 100),
        series_minor_max=_int_setting("MATROIDKIT_SERIES_MINOR_MAX", 12),
        workers=max(1, _int_setting("MATROIDKIT_WORKERS", 1)),
        database_url=os.environ.get("DATABASE_URL") or None,
        graphic_max_edges=_int_setting("MATROIDKIT_GRAPHIC_MAX_EDGES", 8),
        theorem3_max_edges=_int_setting("MATROIDKIT_THEOREM3_MAX_EDGES", 9),
        binary_max_rank=_int_setting("MATROIDKIT_BINARY_MAX_RANK", 3),
        binary_max_cols=_int_setting("MATROIDKIT_BINARY_MAX_COLS", 7),
        uniform_max=_int_setting("MATROIDKIT_UNIFORM_MAX", 8),
        clutter_n=_int_setting("MATROIDKIT_CLUTTER_N", 5),
    )
    # logging.getLevelNamesMapping() is Python 3.11+; _nameToLevel is the same mapping on 3.10.
    level_names = getattr(logging, "getLevelNamesMapping", lambda: dict(logging._nameToLevel))()
    if settings.log_level not in level_names:
        raise ConfigError(f"MATROIDKIT_LOG_LEVEL: unknown level {settings.log_level!r}")
    logger.debug("Loaded settings: %s", settings)
    return settings
