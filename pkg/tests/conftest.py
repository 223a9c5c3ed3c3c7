import os
import sys
from pathlib import Path
from typing import Callable, Iterator

import pytest

# Optional: load variables from local .env for tests/cli runs (does not override shell/CI env)
try:
    from dotenv import load_dotenv

    load_dotenv(override=False)
except Exception:
    # python-dotenv is optional here; tests can still run if env vars are provided by the shell/CI.
    pass

# -----------------------------------------------------------------------------
# Test bootstrap
# -----------------------------------------------------------------------------
# Ensure project root is importable (so `ks2` resolves the same way in tests)
PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from ks2.config import get_settings  # noqa: E402

_KS2_ENV = (
    "KS2_MAX_MN",
    "KS2_MAX_BRUTE_FORCE_MN",
    "KS2_MAX_FULL_TABLE",
    "KS2_COMPARE_MAX",
    "KS2_WORKERS",
)


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch) -> Iterator[None]:
    """
    Каждый тест стартует с настройками по умолчанию.

    get_settings() кешируется, поэтому кеш сбрасывается до и после теста.
    """
    for key in _KS2_ENV:
        monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


# -----------------------------------------------------------------------------
# Environment helpers
# -----------------------------------------------------------------------------
@pytest.fixture(scope="function")
def set_env(monkeypatch) -> Callable[[str, str], None]:
    """
    Helper to set environment variables in tests (settings cache is reset).

    Example:
        set_env("KS2_MAX_MN", "10")
    """

    def _set(key: str, value: str) -> None:
        monkeypatch.setenv(key, value)
        get_settings.cache_clear()

    return _set


# -----------------------------------------------------------------------------
# Sample data fixtures
# -----------------------------------------------------------------------------
@pytest.fixture
def write_sample(tmp_path: Path) -> Callable[[str, str], Path]:
    """
    Writes a sample file and returns its path.

    Example:
        x = write_sample("x.txt", "1\\n2\\n")
    """

    def _write(name: str, content: str) -> Path:
        p = tmp_path / name
        p.write_text(content, encoding="utf-8")
        return p

    return _write
