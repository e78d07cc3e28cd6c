"""Input checks shared by the estimators and the CLI."""

from __future__ import annotations

from numbers import Real
from typing import Iterable

from .exceptions import ValidationError


def check_texts(X) -> list[str]:
    """Return ``X`` as a list of strings, rejecting a bare string."""
    if isinstance(X, (str, bytes)):
        raise ValidationError("expected an iterable of texts, got a single string")
    texts = list(X)
    for i, t in enumerate(texts):
        if not isinstance(t, str):
            raise ValidationError(f"sample {i} is {type(t).__name__}, expected str")
    return texts


def check_positive(name: str, value) -> float:
    if not isinstance(value, Real) or isinstance(value, bool) or not value > 0:
        raise ValidationError(f"{name} must be a positive number, got {value!r}")
    return float(value)


def check_unit_interval(name: str, value) -> float:
    """Value in (0, 1]."""
    v = check_positive(name, value)
    if v > 1:
        raise ValidationError(f"{name} must be in (0, 1], got {value!r}")
    return v


def check_order(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValidationError(f"n-gram order must be an integer >= 2, got {n!r}")
    return n


def check_consistent_length(X: Iterable, y: Iterable) -> None:
    if len(X) != len(y):
        raise ValidationError(f"X has {len(X)} samples but y has {len(y)}")
