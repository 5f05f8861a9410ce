"""Error types shared across the calculator.

Parse errors carry a character position into the offending text; validation
errors describe semantic problems (bad group data, mismatched specs, broken
document schemas) and carry a field path when one exists.
"""

from __future__ import annotations


class DaxError(Exception):
    """Base class for all calculator errors."""


class ParseError(DaxError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ValidationError(DaxError):
    def __init__(self, message: str, path: str | None = None):
        self.path = path
        if path is not None:
            message = f"{path}: {message}"
        super().__init__(message)
