"""Exception hierarchy shared by the numerical core and the CLI."""

from typing import Optional


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit"""


class InputError(ToolkitError, ValueError):
    """Argument value outside what an operation accepts"""


class DomainError(ToolkitError, ValueError):
    """Physically meaningless parameter, e.g. a non-positive linewidth"""


class SingularityError(ToolkitError, ValueError):
    """Field or energy requested at zero separation"""


class PoleProximityError(ToolkitError, ArithmeticError):
    """The literal driven-potential form was evaluated too close to a tangent pole"""


class NumericFailure(ToolkitError, ArithmeticError):
    """A result came out non-finite outside a documented limit convention"""


class AuditFailure(ToolkitError):
    """One or more audit checks did not pass"""


class ConfigError(ToolkitError, ValueError):
    def __init__(self, message: str, key_path: Optional[str] = None):
        self.key_path = key_path
        if key_path:
            message = f"{key_path}: {message}"
        super().__init__(message)
