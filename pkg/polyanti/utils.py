"""
Utility classes and functions shared across the package.
"""

from dataclasses import dataclass
from typing import Tuple


class ValidationError(Exception):
    """Custom exception for validation errors."""
    pass


class InvalidInputError(ValidationError):
    """A geometric precondition failed while processing a point set."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class BoxTooLargeError(ValidationError):
    """Exhaustive enumeration was requested over too many cells."""
    pass


class PointFileError(ValidationError):
    """A point file could not be parsed."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class SearchCapExceeded(Exception):
    """A search limit was hit before a definite answer was reached."""

    def __init__(self, cap_name, limit):
        super().__init__(f"{cap_name} exceeded (limit {limit})")
        self.cap_name = cap_name
        self.limit = limit


class ColorFormatter:
    """ANSI color constants for formatted output."""

    BOLD = "\033[1m"
    CYAN = "\033[96m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    RED = "\033[91m"
    MAGENTA = "\033[95m"
    RESET = "\033[0m"


@dataclass(frozen=True)
class Violation:
    """First witness that a property fails on a point set."""

    prop: str
    points: Tuple[tuple, ...]
    message: str

    def __str__(self):
        return self.message


def format_point(p):
    """Render a point as ``(a,b)`` / ``(a,b,c)``."""
    return "(" + ",".join(str(c) for c in p) + ")"


def validate_positive_int(value, name):
    """Validate that a value is a positive integer."""
    if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
        raise ValidationError(f"{name} must be a positive integer")
    return value


def validate_non_negative_int(value, name):
    """Validate that a value is a non-negative integer."""
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValidationError(f"{name} must be a non-negative integer")
    return value


def validate_matching_dims(a, b, name1="first point", name2="second point"):
    """Validate that two points (or sets) share a dimension."""
    da = len(a) if isinstance(a, tuple) else a.dim
    db = len(b) if isinstance(b, tuple) else b.dim
    if da != db:
        raise ValidationError(f"Dimension of {name1} ({da}) must match dimension of {name2} ({db})")
    return True

