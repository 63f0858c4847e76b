"""Exception types shared across the package."""


class HVError(Exception):
    """Base class for all package errors."""


class WordError(HVError, ValueError):
    """Malformed word, bad syntax or incompatible ambients."""


class IndexOutOfRange(WordError):
    """A generator index violates the ambient bounds of its word."""

    def __init__(self, position, letter, message=None):
        self.position = position
        self.letter = letter
        super().__init__(message or f"letter {letter!r} at position {position} is out of range")


class AmbientMismatch(WordError):
    pass


class ResourceError(HVError):
    """A configured size bound would be exceeded."""


class OperatorError(HVError, ValueError):
    """An enhanced Yang-Baxter operator is malformed or fails its axioms."""
