"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class SkewDnaError(Exception):
    """Base class for every error raised by skewdna."""


class UsageError(SkewDnaError, ValueError):
    """Malformed input: parse failures, mixed fields, bad arguments."""


class DomainError(SkewDnaError, ValueError):
    """Well-formed input that the mathematics rejects."""


class InvalidModulusError(DomainError):
    """The field modulus is reducible or not primitive.

    ``witness`` is either a nontrivial factor (bitmask over F_2) or the
    actual multiplicative order of the residue of y.
    """

    def __init__(self, message: str, witness: int):
        super().__init__(message)
        self.witness = witness


class GuardError(DomainError):
    """A table, enumeration or search would exceed its size guard."""

    def __init__(self, message: str, size: int):
        super().__init__(message)
        self.size = size


class NotDivisorError(DomainError):
    """The polynomial does not right-divide x^n - 1."""

    def __init__(self, message: str, remainder):
        super().__init__(message)
        self.remainder = remainder
