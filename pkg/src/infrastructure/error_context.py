"""
Error Context - structured classification of runtime exceptions.

Maps exceptions raised anywhere in the package to an error type and the
process exit code the CLI reports.
"""

import logging
from dataclasses import dataclass

import click
from pydantic import ValidationError

from src.domain.errors import DomainError, InvariantViolation, KneserError, ParseError, ResourceLimitError

# Configure logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2


@dataclass
class ErrorContext:
    """Structured error information from runtime exceptions."""
    error_type: str
    message: str
    exit_code: int


class ErrorClassifier:
    """
    Classifies exceptions into exit codes.

    Bad input and refused budgets are usage errors; a failed runtime
    certificate is a verification failure.
    """

    # Most specific first
    ERROR_TYPES = (
        (ParseError, "parse_error", EXIT_USAGE),
        (DomainError, "domain_error", EXIT_USAGE),
        (ResourceLimitError, "resource_limit", EXIT_USAGE),
        (InvariantViolation, "invariant_violation", EXIT_VERIFICATION),
        (ValidationError, "invalid_options", EXIT_USAGE),
        (click.UsageError, "usage_error", EXIT_USAGE),
        (KneserError, "error", EXIT_USAGE),
    )

    @staticmethod
    def classify(exception: Exception) -> ErrorContext:
        for exc_type, error_type, exit_code in ErrorClassifier.ERROR_TYPES:
            if isinstance(exception, exc_type):
                if exit_code == EXIT_VERIFICATION:
                    logger.error(f"{error_type}: {exception}")
                else:
                    logger.warning(f"{error_type}: {str(exception)[:200]}")
                return ErrorContext(error_type=error_type, message=str(exception), exit_code=exit_code)

        logger.error(f"Unclassified error: {type(exception).__name__}: {exception}")
        return ErrorContext(error_type="unknown", message=str(exception), exit_code=EXIT_VERIFICATION)
