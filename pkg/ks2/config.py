# ks2/config.py
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

DEFAULT_MAX_MN = 2000
DEFAULT_MAX_BRUTE_FORCE_MN = 22
DEFAULT_MAX_FULL_TABLE = 10**8
DEFAULT_COMPARE_MAX = 2000


def _first_env(*keys: str, default: str) -> str:
    for k in keys:
        v = os.environ.get(k)
        if v not in (None, ""):
            return v
    return default


def _env_int(key: str, default: int, *, minimum: int = 1) -> int:
    raw = _first_env(key, default=str(default)).strip()
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{key} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ValueError(f"{key} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    max_mn: int
    max_brute_force_mn: int
    max_full_table: int
    compare_max: int
    workers: int
    log_level: str


@lru_cache()
def get_settings() -> Settings:
    """
    Settings from the environment (.env is loaded by the CLI before the first call).

    Tests that change env vars must call get_settings.cache_clear().
    """
    return Settings(
        max_mn=_env_int("KS2_MAX_MN", DEFAULT_MAX_MN),
        max_brute_force_mn=_env_int("KS2_MAX_BRUTE_FORCE_MN", DEFAULT_MAX_BRUTE_FORCE_MN),
        max_full_table=_env_int("KS2_MAX_FULL_TABLE", DEFAULT_MAX_FULL_TABLE),
        compare_max=_env_int("KS2_COMPARE_MAX", DEFAULT_COMPARE_MAX),
        workers=_env_int("KS2_WORKERS", 1),
        log_level=_first_env("LOG_LEVEL", default="WARNING").upper(),
    )
