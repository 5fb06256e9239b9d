"""
Exception hierarchy.

Everything raised on purpose by the package derives from
:class:`CasimirError`; the concrete classes also inherit from the matching
built-in so that ``except ValueError`` keeps working for callers.
"""
from __future__ import annotations

__all__ = [
    "CasimirError",
    "ModelDomainError",
    "TableFormatError",
    "ConvergenceError",
    "ScenarioError",
    "EmitError",
]


class CasimirError(Exception):
    """Root of all package errors."""


class ModelDomainError(CasimirError, ValueError):
    """A physical parameter lies outside the domain of a formula."""


class TableFormatError(CasimirError, ValueError):
    """Tabulated absorption data could not be ingested."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConvergenceError(CasimirError, RuntimeError):
    """A quadrature or series did not reach the requested tolerance."""

    def __init__(self, message: str, achieved_error: float | None = None) -> None:
        self.achieved_error = achieved_error
        if achieved_error is not None:
            message = f"{message} (achieved error estimate {achieved_error:.3e})"
        super().__init__(message)


class ScenarioError(CasimirError, ValueError):
    """A scenario file is malformed or inconsistent."""


class EmitError(CasimirError, OSError):
    """A report could not be written."""

    def __init__(self, destination: str, reason: str) -> None:
        self.destination = destination
        super().__init__(f"cannot write report to {destination}: {reason}")
