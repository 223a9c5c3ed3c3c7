# ks2/validation.py
from typing import Any, Mapping, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

T = TypeVar("T", bound=BaseModel)


def serialize_validation_error(e: ValidationError) -> dict:
    """Превращает pydantic v2 ValidationError в JSON-безопасный словарь."""
    # Берём только безопасные поля без ctx (там могут быть несериализуемые объекты)
    details = [
        {
            "loc": list(err.get("loc", ())),
            "msg": err.get("msg"),
            "type": err.get("type"),
        }
        for err in e.errors(include_url=False)
    ]
    return {"error": "validation_error", "details": details}


def validate_params(model: Type[T], data: Mapping[str, Any]) -> Tuple[Optional[T], Optional[dict]]:
    """
    Валидирует аргументы команды через переданную Pydantic-модель.

    Возвращает (params, error):
      * если всё ок: (params, None)
      * если валидация упала: (None, dict для вывода в stderr)
    """
    try:
        return model.model_validate(dict(data)), None
    except ValidationError as e:
        return None, serialize_validation_error(e)
