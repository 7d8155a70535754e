"""Non-negative reals stored as log10 values."""

from __future__ import annotations

import math
from typing import Literal, Self

import numpy as np
from pydantic import model_validator

from ..constants.types import ReportModel
from ..errors import DomainError

LN10 = math.log(10.0)
MAX_LOG10_DOUBLE = math.log10(np.finfo(float).max)
HALF_LOG10 = math.log10(0.5)


def log10_add(left: float, right: float) -> float:
    """log10(10**left + 10**right) without leaving the log domain."""
    return float(np.logaddexp(left * LN10, right * LN10) / LN10)


def log10_one_minus(log10_value: float) -> float:
    """log10(1 − 10**log10_value) for values below one."""
    if not log10_value < 0:
        raise DomainError(f"1 − 10**{log10_value!r} is not positive")
    if log10_value < HALF_LOG10:
        return float(np.log1p(-np.exp(log10_value * LN10)) / LN10)
    return float(np.log10(-np.expm1(log10_value * LN10)))


class LogScaledReal(ReportModel):
    """A value ≥ 0 as (log10_value, sign); zero is (-inf, 0)."""

    log10_value: float
    sign: Literal[0, 1] = 1

    @model_validator(mode="after")
    def _zero_iff_unsigned(self) -> Self:
        if math.isnan(self.log10_value):
            raise ValueError("log10_value must not be NaN")
        if (self.sign == 0) != (self.log10_value == -math.inf):
            raise ValueError(f"sign={self.sign} inconsistent with log10_value={self.log10_value!r}")
        return self

    @classmethod
    def zero(cls) -> LogScaledReal:
        return cls(log10_value=-math.inf, sign=0)

    @classmethod
    def from_log10(cls, log10_value: float) -> LogScaledReal:
        return cls.zero() if log10_value == -math.inf else cls(log10_value=log10_value)

    @classmethod
    def from_float(cls, value: float) -> LogScaledReal:
        if not value >= 0:
            raise DomainError(f"LogScaledReal holds non-negative values only, got {value!r}")
        return cls.zero() if value == 0 else cls(log10_value=math.log10(value))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def to_float(self) -> float:
        """Linear value; inf when it overflows a double."""
        if self.is_zero:
            return 0.0
        if self.log10_value > MAX_LOG10_DOUBLE:
            return math.inf
        return 10.0**self.log10_value

    def _coerce(self, other: LogScaledReal | float) -> LogScaledReal:
        return other if isinstance(other, LogScaledReal) else LogScaledReal.from_float(float(other))

    def __mul__(self, other: LogScaledReal | float) -> LogScaledReal:
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return LogScaledReal.zero()
        return LogScaledReal(log10_value=self.log10_value + other.log10_value)

    __rmul__ = __mul__

    def __truediv__(self, other: LogScaledReal | float) -> LogScaledReal:
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division of a LogScaledReal by zero")
        return LogScaledReal.from_log10(self.log10_value - other.log10_value)

    def __add__(self, other: LogScaledReal | float) -> LogScaledReal:
        other = self._coerce(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return LogScaledReal(log10_value=log10_add(self.log10_value, other.log10_value))

    __radd__ = __add__

    def __pow__(self, exponent: float) -> LogScaledReal:
        if self.is_zero:
            if not exponent > 0:
                raise DomainError(f"0 ** {exponent!r} is undefined")
            return self
        return LogScaledReal(log10_value=self.log10_value * exponent)

    def __lt__(self, other: LogScaledReal | float) -> bool:
        return self.log10_value < self._coerce(other).log10_value

    def __le__(self, other: LogScaledReal | float) -> bool:
        return self.log10_value <= self._coerce(other).log10_value

    def __gt__(self, other: LogScaledReal | float) -> bool:
        return self.log10_value > self._coerce(other).log10_value

    def __ge__(self, other: LogScaledReal | float) -> bool:
        return self.log10_value >= self._coerce(other).log10_value
