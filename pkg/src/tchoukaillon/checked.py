"""Width-checked integer helpers.

Stone counts, periods and moduli are exact integers, but the library
promises a 128-bit unsigned range: any operation whose result would not
fit raises OverflowError instead of silently producing huge values.
"""

from __future__ import annotations

UINT128_MAX = 2**128 - 1


def check_uint128(value: int, what: str = "value") -> int:
    """Return *value* unchanged, or raise OverflowError if it exceeds 128 bits."""
    if value > UINT128_MAX:
        raise OverflowError(f"{what} exceeds the 128-bit limit ({value} > {UINT128_MAX})")
    return value


def ensure_stone_count(value: int, what: str = "stone count") -> int:
    """Validate a non-negative integer within the 128-bit range."""
    if not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{what} must be non-negative, got {value}")
    return check_uint128(value, what)
