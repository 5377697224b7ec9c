"""Exception types shared across the library."""

from __future__ import annotations


class VlhvsError(Exception):
    """Base class for every error raised by this package."""


class DomainError(VlhvsError, ValueError):
    """An argument lies outside its physical or numeric domain."""


class ConfigurationError(VlhvsError, ValueError):
    """A lookup table or configuration input is empty or malformed."""


class StructuralError(VlhvsError, ValueError):
    """Image planes or payloads do not satisfy the dimension algebra."""


class ParseError(VlhvsError, ValueError):
    """A byte stream could not be decoded as the expected file format."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset
