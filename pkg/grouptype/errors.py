"""
Exception hierarchy for the grouptype toolkit.

Every error raised on purpose by the package derives from GroupTypeError so the
entrypoint can map it to an exit code.
"""

from typing import Optional


class GroupTypeError(Exception):
    """Base class for all grouptype errors."""

    exit_code = 1


class DataError(GroupTypeError):
    """Bad input data: files, fingerprints, targets, configuration."""

    exit_code = 2


class DomainMismatch(GroupTypeError, TypeError):
    """Two elements from different domains (or structural parameters) were combined."""


class InvariantViolation(GroupTypeError, AssertionError):
    """An internal mathematical invariant failed (Lagrange, closure, normality...)."""


class CapExceeded(GroupTypeError):
    def __init__(self, cap: int):
        super().__init__(f"closure grew beyond the enumeration cap of {cap} elements")
        self.cap = cap


class ElementNotInGroup(GroupTypeError, ValueError):
    pass


class OddOrder(GroupTypeError, ValueError):
    pass


class NotMultipleOfFour(GroupTypeError, ValueError):
    pass


class TooSmall(GroupTypeError, ValueError):
    pass


class DegreeOutOfRange(GroupTypeError, ValueError):
    pass


class NotPrime(GroupTypeError, ValueError):
    pass


class NotAnAutomorphism(GroupTypeError, ValueError):
    """A generator image is not a bijection of N, or does not respect the group law."""


class InconsistentAction(GroupTypeError, ValueError):
    """Two words for the same element of H induce different maps on N."""


class NegativeCount(GroupTypeError, ValueError):
    """Möbius inversion produced a negative count: the input is not a genuine exponent type."""


class KindMismatch(GroupTypeError, TypeError):
    pass


class CountOverflow(GroupTypeError, OverflowError):
    exit_code = 3

    def __init__(self, divisor: Optional[int], message: Optional[str] = None):
        super().__init__(message or f"count at divisor {divisor} exceeds the signed 64-bit range")
        self.divisor = divisor


class ParseError(DataError):
    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


class FingerprintMismatch(DataError):
    def __init__(self, label: str, expected: bytes, actual: bytes):
        super().__init__(
            f"fingerprint mismatch for {label}: expected {expected.hex()} got {actual.hex()}"
        )
        self.label = label
        self.expected = expected
        self.actual = actual


class CatalogDataMissing(DataError):
    pass


class UnknownTarget(DataError):
    pass


class ConfigError(DataError):
    pass


class CatalogMismatch(DataError):
    """A catalog group's order or SmallGroups header disagrees with its entry."""
