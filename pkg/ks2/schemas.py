# ks2/schemas.py

from enum import Enum
from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from ks2.corridor import parse_decimal_threshold, threshold_from_decimal
from ks2.errors import InvalidThreshold


class Method(str, Enum):
    STABLE = "stable"
    FULL = "full"
    EXACT_RATIONAL = "exact-rational"
    BRUTE_FORCE = "brute-force"
    ASYMPTOTIC = "asymptotic"
    COMPLEMENT = "complement"


ALL_METHODS = "all"


class KsReport(BaseModel):
    """
    Результат одной оценки p-value.

    В JSON-режиме CLI печатает ровно эти поля.
    """

    m: int
    n: int
    c: int
    d: str
    method: Method
    p_value: str
    # только для exact-rational / brute-force
    p_exact: Optional[str] = None
    ties_detected: bool = False
    elapsed_ms: float = Field(ge=0)

    @field_validator("p_value")
    @classmethod
    def p_value_in_unit_interval(cls, v: str):
        p = float(v)
        if not (0.0 <= p <= 1.0):
            raise ValueError("p_value must lie in [0, 1]")
        return v


class MethodDelta(BaseModel):
    a: Method
    b: Method
    abs_delta: float
    rel_delta: Optional[float] = None


class PvalueParams(BaseModel):
    m: int = Field(ge=1)
    n: int = Field(ge=1)
    c: Optional[int] = None
    d: Optional[str] = Field(default=None, max_length=200)
    method: Union[Method, Literal["all"]] = Method.STABLE

    @field_validator("d")
    @classmethod
    def d_is_decimal(cls, v: Optional[str]):
        if v is None:
            return v
        v2 = v.strip()
        try:
            # digits and exponent only; "1e-300000000" is cheap
            parse_decimal_threshold(v2)
        except InvalidThreshold:
            raise ValueError("d must be a decimal number") from None
        return v2

    @model_validator(mode="after")
    def _exactly_one_threshold(self):
        if (self.c is None) == (self.d is None):
            raise ValueError("exactly one of c or d must be given")
        return self

    def threshold(self) -> int:
        if self.c is not None:
            return self.c
        return threshold_from_decimal(self.d, self.m, self.n)


class CompareParams(BaseModel):
    m_min: int = Field(default=1, ge=1)
    m_max: int = Field(ge=1)
    n_min: int = Field(default=1, ge=1)
    n_max: int = Field(ge=1)
    samples: Optional[int] = Field(default=None, ge=1)
    seed: int = 0
    workers: int = Field(default=1, ge=1)
    with_asymptotic: bool = False

    @model_validator(mode="after")
    def _check_ranges(self):
        if self.m_min > self.m_max:
            raise ValueError("m_min must be <= m_max")
        if self.n_min > self.n_max:
            raise ValueError("n_min must be <= n_max")
        return self
