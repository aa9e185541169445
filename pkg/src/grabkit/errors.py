"""Exception types shared across the package."""

from __future__ import annotations


class EngineError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(EngineError, ValueError):
    """An input value is invalid (non-finite coordinate, negative radius, ...)."""


class ContractViolation(EngineError):
    """An operation was invoked in a state its contract forbids."""


class SceneParseError(EngineError):
    """A scene document could not be parsed or validated."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            suffix = f" (line {line}" + (f", column {column})" if column is not None else ")")
            message = message + suffix
        super().__init__(message)
        self.line = line
        self.column = column


class UnknownObjectType(SceneParseError):
    """A scene document names an object type this engine does not know."""


class ScriptParseError(EngineError):
    """An event-script line could not be parsed."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
