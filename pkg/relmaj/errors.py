"""
Exception hierarchy shared by every relmaj module.
Each error carries a human readable detail and the exit code the CLI reports for it.
"""

from typing import Any, Dict, Optional


class RelmajError(Exception):
    """Base class for all library errors."""

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InputError(RelmajError, ValueError):
    """Malformed or out-of-range arguments."""


class DomainError(RelmajError):
    """A mathematical precondition of the operation does not hold."""


class SolverError(RelmajError):
    """The simplex solver broke down."""

    def __init__(self, detail: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(detail)
        self.diagnostics = diagnostics or {}


class ResourceError(RelmajError):
    """A configured dimension cap was exceeded."""


class ParseError(InputError):
    """A resource document failed validation."""

    def __init__(self, detail: str, field_path: str = ""):
        super().__init__(f"{field_path}: {detail}" if field_path else detail)
        self.field_path = field_path
