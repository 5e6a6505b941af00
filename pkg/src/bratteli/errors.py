"""Exception types shared by every module and mapped to CLI exit codes."""

import os


class InputError(ValueError):
    """Bad argument: unknown vertex, malformed partition, level out of range."""


class ValidationError(InputError):
    """A weight vector failed the central-measure checks."""

    def __init__(self, message, vertex=None, residual=None):
        super().__init__(message)
        self.vertex = vertex
        self.residual = residual


class ResourceError(RuntimeError):
    """An enumeration would exceed its budget."""


DEFAULT_MAX_CELLS = 1_000_000


def max_cells(default: int = DEFAULT_MAX_CELLS) -> int:
    """Enumeration budget, overridable with BRATTELI_MAX_CELLS."""
    raw = os.environ.get("BRATTELI_MAX_CELLS")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"BRATTELI_MAX_CELLS must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise InputError("BRATTELI_MAX_CELLS must be positive")
    return value
