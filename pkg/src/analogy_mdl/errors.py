"""Exception types shared across the package."""

from __future__ import annotations


class AnalogyMdlError(Exception):
    """Base class for all package errors."""


class AlphabetError(AnalogyMdlError):
    """A word or literal contains a character outside the alphabet."""

    def __init__(self, char: str, word: str = ""):
        self.char = char
        self.word = word
        msg = f"character {char!r} is not in the alphabet"
        if word:
            msg += f" (in word {word!r})"
        super().__init__(msg)


class DomainError(AnalogyMdlError):
    """An argument is outside the domain of a primitive (e.g. unary of 0)."""


class ArityError(AnalogyMdlError):
    """Representation length does not match the model's slot count."""


class CanonicalFormError(AnalogyMdlError):
    """Model is not in canonical form (unmerged literals or unused slots)."""


class SchemaError(AnalogyMdlError):
    """A synthetic-space document is malformed or has missing entries."""


class SearchError(AnalogyMdlError):
    """Model search produced no candidate at all."""


class ResourceError(AnalogyMdlError):
    """Enumeration exceeded its configured limits."""

    def __init__(self, message: str, count: int | None = None, limit: int | None = None):
        super().__init__(message)
        self.count = count
        self.limit = limit


class EmptySolutionError(AnalogyMdlError):
    """No transferred model can generate any completion for the target."""


class ModelSyntaxError(AnalogyMdlError):
    """A textual model expression could not be parsed."""
