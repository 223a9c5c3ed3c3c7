# ks2/errors.py
"""
Исключения ks2.

Каждое исключение несёт exit_code, который CLI возвращает как код завершения:
  * 2: некорректный ввод (файлы, числа, пороги);
  * 3: совпадения значений между выборками при --ties reject;
  * 4: превышен лимит ресурсов (рациональный оракул, перебор путей, полная таблица).
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional


class KsError(Exception):
    exit_code: int = 1


# =========================
# Input
# =========================
class InputError(KsError):
    exit_code = 2


class EmptySample(InputError):
    pass


class NonFiniteValue(InputError):
    def __init__(self, value: float, position: Optional[int] = None):
        self.value = value
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"non-finite value {value!r}{where}")


class SampleFileError(InputError):
    """Ошибка чтения файла выборки; line: номер строки (с 1) или None."""

    def __init__(self, path: Path | str, message: str, line: Optional[int] = None):
        self.path = Path(path)
        self.line = line
        self.reason = message
        loc = f"{self.path}:{line}" if line is not None else str(self.path)
        super().__init__(f"{loc}: {message}")


class InvalidThreshold(InputError):
    pass


# =========================
# Ties
# =========================
class TieRejected(KsError):
    exit_code = 3

    def __init__(self, tied_values: list[float]):
        self.tied_values = tied_values
        preview = ", ".join(repr(v) for v in tied_values[:5])
        more = "" if len(tied_values) <= 5 else f" (+{len(tied_values) - 5} more)"
        super().__init__(f"values occur in both samples: {preview}{more}")


# =========================
# Cost guards
# =========================
class ResourceLimit(KsError):
    exit_code = 4


class TooManyPaths(ResourceLimit):
    pass


class TableTooLarge(ResourceLimit):
    pass
