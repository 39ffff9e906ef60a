"""
Domain Errors

Exception hierarchy shared by every layer.
Exit-code mapping lives in src.infrastructure.error_context.
"""


class KneserError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(KneserError, ValueError):
    """A precondition or hypothesis of an operation does not hold."""


class ParseError(DomainError):
    """Malformed cycle notation, subset text or range text."""


class ResourceLimitError(KneserError):
    """A request would exceed a configured bound (degree, materialisation, budget)."""


class InvariantViolation(KneserError, RuntimeError):
    """A runtime certificate failed. Indicates a bug, never bad input."""
