"""Exact closed forms for left linear recurrences over fields, quaternions and octonions."""

from ._core import (
    ClosedForm,
    Recurrence,
    SkewrecError,
    oct_mul,
    oct_norm,
    quat_inverse,
    quat_mul,
    quat_norm,
)

__all__ = [
    "ClosedForm",
    "Recurrence",
    "SkewrecError",
    "oct_mul",
    "oct_norm",
    "quat_inverse",
    "quat_mul",
    "quat_norm",
]
