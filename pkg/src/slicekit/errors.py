"""Shared exception types.

DomainError marks a violated mathematical precondition (CLI exit 1);
ParseError marks malformed input (CLI exit 2).
"""


class SliceKitError(Exception):
    """Base class for all package errors."""


class DomainError(SliceKitError):
    """A precondition of an operation failed; the message names it."""


class ParseError(SliceKitError):
    """Input could not be parsed or fails schema validation."""
