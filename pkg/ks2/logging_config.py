# ks2/logging_config.py
"""
Конфигурация структурированного JSON логирования для ks2.

Этот модуль настраивает:
- JSON форматирование логов (python-json-logger)
- Уровень логирования из LOG_LEVEL или флагов CLI
- Вывод только в stderr: stdout занят отчётами и CSV
"""

import logging
import os
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

ROOT_LOGGER = "ks2"


class CustomJsonFormatter(jsonlogger.JsonFormatter):
    """
    Кастомный форматтер для добавления стандартных полей в JSON логи.
    """

    def add_fields(self, log_record, record, message_dict):
        super().add_fields(log_record, record, message_dict)

        log_record["timestamp"] = record.created  # Unix timestamp
        log_record["level"] = record.levelname
        log_record["logger"] = record.name  # например, 'ks2.exact_stable'
        log_record["module"] = record.module
        log_record["function"] = record.funcName

        if record.exc_info:
            log_record["exception"] = self.formatException(record.exc_info)


def setup_logging(level: Optional[str] = None, stream=None) -> logging.Logger:
    """
    Настраивает JSON логирование для логгера пакета ks2.

    Args:
        level: имя уровня ("DEBUG"/"INFO"/...); по умолчанию LOG_LEVEL или WARNING
        stream: куда писать (по умолчанию sys.stderr)

    Returns:
        корневой логгер пакета
    """
    log_level = (level or os.getenv("LOG_LEVEL", "WARNING")).upper()
    numeric_level = getattr(logging, log_level, logging.WARNING)

    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setLevel(numeric_level)
    handler.setFormatter(CustomJsonFormatter("%(timestamp)s %(level)s %(name)s %(message)s"))

    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(numeric_level)
    logger.handlers = []  # повторный вызов не дублирует вывод
    logger.addHandler(handler)
    logger.propagate = False

    logger.debug("JSON logging initialized", extra={"log_level": log_level})
    return logger
