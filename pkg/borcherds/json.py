"""Conversion of workbench values to plain JSON data for reports and datum files."""

from __future__ import annotations

from fractions import Fraction
from collections.abc import Mapping, Sequence
from typing import Any, Callable

__all__ = (
    'Json',
    'ToJson',
    'encode',
    'register_encoder',
)


Json = None | bool | int | float | str | Sequence['Json'] | Mapping[str, 'Json']

ToJson = Callable[[Any], Json]


_encoders: dict[type, ToJson] = {}

def register_encoder(cls: type) -> Callable:
    """Decorator to define the function used to pack values of a type."""
    def decorator(func: ToJson) -> ToJson:
        _encoders[cls] = func
        return func
    return decorator

def encode(value: Any) -> Json:
    """Recursively convert a value into JSON data.

    Objects with a ``to_json()`` method and registered types are packed with
    their converter; mappings get string keys, sequences become lists."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    for cls in type(value).__mro__:
        if cls in _encoders:
            return _encoders[cls](value)
    if hasattr(value, 'to_json'):
        return value.to_json()
    if isinstance(value, Mapping):
        return {str(key): encode(item) for key, item in value.items()}
    if isinstance(value, (Sequence, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [encode(item) for item in items]
    raise TypeError(f"cannot convert {type(value).__name__} to JSON")


@register_encoder(Fraction)
def _encode_fraction(value: Fraction) -> Json:
    if value.denominator == 1:
        return value.numerator
    return str(value)


def _register_scalars() -> None:
    from borcherds.scalar import Scalar, RationalScalar, DimSeries

    register_encoder(Scalar)(str)
    register_encoder(RationalScalar)(str)
    register_encoder(DimSeries)(str)

_register_scalars()
