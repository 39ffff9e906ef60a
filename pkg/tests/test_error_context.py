import click
import pytest
from pydantic import BaseModel, Field, ValidationError

from src.domain.errors import DomainError, InvariantViolation, KneserError, ParseError, ResourceLimitError
from src.infrastructure.error_context import EXIT_USAGE, EXIT_VERIFICATION, ErrorClassifier


class _Bounded(BaseModel):
    value: int = Field(ge=1)


@pytest.mark.parametrize(
    "exception, error_type, exit_code",
    [
        (ParseError("bad cycle"), "parse_error", EXIT_USAGE),
        (DomainError("k >= n/2"), "domain_error", EXIT_USAGE),
        (ResourceLimitError("too large"), "resource_limit", EXIT_USAGE),
        (InvariantViolation("moved"), "invariant_violation", EXIT_VERIFICATION),
        (click.UsageError("no such option"), "usage_error", EXIT_USAGE),
        (KneserError("generic"), "error", EXIT_USAGE),
        (RuntimeError("boom"), "unknown", EXIT_VERIFICATION),
    ],
)
def test_classification(exception, error_type, exit_code):
    context = ErrorClassifier.classify(exception)
    assert (context.error_type, context.exit_code) == (error_type, exit_code)
    assert context.message == str(exception)


def test_validation_error():
    with pytest.raises(ValidationError) as excinfo:
        _Bounded(value=0)
    context = ErrorClassifier.classify(excinfo.value)
    assert (context.error_type, context.exit_code) == ("invalid_options", EXIT_USAGE)
