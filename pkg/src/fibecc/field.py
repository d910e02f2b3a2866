"""Modular arithmetic over prime fields and the multiplicative-group helpers."""

from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime, primefactors, primerange
from sympy.ntheory import is_primitive_root, primitive_root

from .errors import NotInvertible, NotPrime, RangeError


def is_prime(n: int) -> bool:
    """Return whether ``n`` is prime; exact for every 64-bit input."""
    return bool(isprime(n))


def prime_factors(n: int) -> list[int]:
    """Return the distinct prime factors of ``n`` in ascending order."""
    if n < 1:
        raise RangeError(f"cannot factor {n}; expected a positive integer")
    return [int(q) for q in primefactors(n)]


def primes_between(low: int, high: int) -> list[int]:
    """Return the primes in the inclusive range ``[low, high]``."""
    return [int(value) for value in primerange(max(low, 2), high + 1)]


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime ``p`` defining the field ``F_p``."""

    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise NotPrime(f"modulus must be an integer, got {self.p!r}")
        if self.p < 3 or not is_prime(self.p):
            raise NotPrime(f"{self.p} is not an odd prime")

    def element(self, value: int) -> FieldElement:
        """Return ``value`` reduced into this field."""
        return FieldElement(value % self.p, self)

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)


@dataclass(frozen=True)
class FieldElement:
    """A canonical residue ``0 <= value < p``."""

    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.p:
            raise RangeError(
                f"{self.value} is not a canonical residue modulo {self.modulus.p}"
            )

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise RangeError(
                    f"cannot combine residues modulo {self.p} and {other.p}"
                )
            return other.value
        return other

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return self.modulus.element(self.value + self._coerce(other))

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return self.modulus.element(self.value - self._coerce(other))

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return self.modulus.element(self.value * self._coerce(other))

    def __neg__(self) -> FieldElement:
        return self.modulus.element(-self.value)

    def inverse(self) -> FieldElement:
        """Return the multiplicative inverse; raises ``NotInvertible`` for zero."""
        return FieldElement(mod_inverse(self.value, self.p), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def mod_pow(base: FieldElement, exponent: int) -> FieldElement:
    """Return ``base ** exponent`` in the field of ``base``."""
    if exponent < 0:
        raise RangeError(f"exponent must be non-negative, got {exponent}")
    return FieldElement(pow(base.value, exponent, base.p), base.modulus)


def mod_inverse(a: int, m: int) -> int:
    """Return ``b`` in ``[0, m)`` with ``a * b = 1 (mod m)``."""
    if m < 1:
        raise RangeError(f"modulus must be positive, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotInvertible(f"{a} has no inverse modulo {m}") from None


def is_primitive_element(beta: FieldElement) -> bool:
    """Return whether ``beta`` generates the multiplicative group of ``F_p``."""
    if beta.value == 0:
        return False
    return bool(is_primitive_root(beta.value, beta.p))


def find_primitive_element(modulus: PrimeModulus) -> FieldElement:
    """Return the smallest primitive element ``beta >= 2`` of ``F_p``."""
    root = primitive_root(modulus.p)
    if root is None:  # pragma: no cover
        raise NotPrime(f"{modulus.p} has no primitive element")
    return FieldElement(int(root), modulus)
