# ks2/sample_io.py
"""
Чтение выборок из текстовых файлов.

Формат: UTF-8, одно десятичное число на строку, пустые строки пропускаются,
строка, начинающаяся с `#`,: комментарий. Любая ошибка сообщает файл и номер строки.
"""

from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import List, Union

from ks2.errors import SampleFileError
from ks2.statistic import Sample

logger = logging.getLogger(__name__)


def parse_sample_lines(lines: List[str], path: Union[str, Path] = "<input>") -> List[float]:
    values: List[float] = []
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        try:
            v = float(s)
        except ValueError:
            raise SampleFileError(path, f"not a number: {s!r}", line=lineno) from None
        if not math.isfinite(v):
            raise SampleFileError(path, f"non-finite value: {s!r}", line=lineno)
        values.append(v)
    return values


def read_sample_file(path: Union[str, Path]) -> Sample:
    """
    Read one sample file.

    Raises:
        SampleFileError: unreadable file, bad number (with line), no values
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise SampleFileError(p, f"cannot read file: {exc}") from None

    values = parse_sample_lines(text.splitlines(), p)
    if not values:
        raise SampleFileError(p, "no values found")

    logger.info("Sample loaded", extra={"file": str(p), "size": len(values)})
    return Sample.from_values(values)
