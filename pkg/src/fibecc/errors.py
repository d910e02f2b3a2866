"""Exception types raised by fibecc."""

from __future__ import annotations


class FibeccError(ValueError):
    """Base class for every error raised by the fibecc library."""


class NotPrime(FibeccError):
    """Raised when a modulus that must be prime is composite."""


class NotInvertible(FibeccError):
    """Raised when a residue has no inverse modulo the given modulus."""


class NotPrimitive(FibeccError):
    """Raised when a field element does not generate the multiplicative group."""


class RangeError(FibeccError):
    """Raised when an integer parameter falls outside its allowed range."""


class SingularCurve(FibeccError):
    """Raised when ``4a^3 + 27b^2`` vanishes modulo ``p``."""


class PointNotOnCurve(FibeccError):
    """Raised when a point does not satisfy the curve equation."""


class CurveTooLarge(FibeccError):
    """Raised when exhaustive point enumeration would exceed the configured limit."""


class DimensionMismatch(FibeccError):
    """Raised when matrix shapes are not conformable."""


class SizeMismatch(FibeccError):
    """Raised when a character set does not match the curve's group order."""


class UnknownSymbol(FibeccError):
    """Raised when a message character has no point in the alphabet."""


class UnknownPoint(FibeccError):
    """Raised when a point has no character in the alphabet."""


class LengthOverflow(FibeccError):
    """Raised when a recorded message length exceeds the packed block capacity."""


class KeyFileError(FibeccError):
    """Raised when a key, ciphertext, or alphabet file cannot be parsed."""
