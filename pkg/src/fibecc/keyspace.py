"""Key-space size and brute-force retrieval odds for ``n x n`` key matrices.

Key matrices are counted as the whole general linear group ``GL_n(F_p)``. Keys are
really drawn from the much smaller family ``{F_n^k}``, so these figures overstate the
key space; they are reproduced as published.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NotPrime, RangeError
from .field import is_prime

PUBLISHED_PRIMES = (29, 31, 37, 41, 43, 47, 53, 59, 61, 67)
PUBLISHED_DIMENSIONS = (3, 4)
DIGIT_ROUNDINGS = ("nearest", "down")
# "published" rounds key-space sizes down and probabilities to nearest.
ROUNDING_MODES = ("published", *DIGIT_ROUNDINGS)
TABLE_FORMATS = ("text", "csv")

Number = Union[int, Fraction]


@dataclass(frozen=True)
class KeyspaceReport:
    """``|GL_n(F_p)|`` and the chance of guessing one key matrix at random."""

    p: int
    n: int
    gl_order: int
    probability: Fraction

    def __post_init__(self) -> None:
        if self.gl_order <= 0 or self.probability * self.gl_order != 1:
            raise RangeError(f"inconsistent key-space report for p={self.p} n={self.n}")

    def render(self, digits: int = 5, rounding: str = "published") -> tuple[str, str]:
        """Return the key-space size and probability in scientific notation."""
        order_rounding, chance_rounding = _column_roundings(rounding)
        return (
            format_scientific(self.gl_order, digits, order_rounding),
            format_scientific(self.probability, digits, chance_rounding),
        )


def _column_roundings(rounding: str) -> tuple[str, str]:
    if rounding == "published":
        return "down", "nearest"
    if rounding not in DIGIT_ROUNDINGS:
        raise RangeError(f"unknown rounding mode {rounding!r}")
    return rounding, rounding


def gl_order(n: int, p: int) -> int:
    """Return ``(p^n - 1)(p^n - p)...(p^n - p^(n-1))`` exactly."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise RangeError(f"dimension must be at least 1, got {n}")
    size = p**n
    order = 1
    for i in range(n):
        order *= size - p**i
    return order


def retrieval_probability(n: int, p: int) -> Fraction:
    """Return ``1 / |GL_n(F_p)|`` as an exact fraction.

    :func:`format_scientific` (or :meth:`KeyspaceReport.render`) gives the decimal form.
    """
    return Fraction(1, gl_order(n, p))


def report(p: int, n: int) -> KeyspaceReport:
    order = gl_order(n, p)
    return KeyspaceReport(p, n, order, Fraction(1, order))


def build_tables(primes: Iterable[int], dims: Iterable[int]) -> list[KeyspaceReport]:
    """Return one report per ``(p, n)`` pair, ordered by ``p`` then ``n``."""
    dims = sorted(set(dims))
    return [report(p, n) for p in sorted(set(primes)) for n in dims]


def _decimal_exponent(value: Fraction) -> int:
    """Return ``e`` with ``10^e <= value < 10^(e+1)``."""
    exponent = len(str(value.numerator)) - len(str(value.denominator))
    while value < Fraction(10) ** exponent:
        exponent -= 1
    while value >= Fraction(10) ** (exponent + 1):
        exponent += 1
    return exponent


def scientific(
    value: Number, digits: int, rounding: str = "nearest"
) -> tuple[int, int]:
    """Return ``(mantissa, exponent)`` for ``value`` in scientific notation.

    ``value`` is about ``mantissa * 10^(exponent - digits + 1)`` and ``mantissa`` has
    exactly ``digits`` digits. The digits are extracted with exact
    rational arithmetic; ``rounding`` is ``"nearest"`` (half up) or ``"down"``.
    """
    if digits < 1:
        raise RangeError(f"need at least one significant digit, got {digits}")
    if rounding not in DIGIT_ROUNDINGS:
        raise RangeError(f"unknown rounding mode {rounding!r}")
    exact = Fraction(value)
    if exact <= 0:
        raise RangeError(f"cannot render {value} in scientific form; expected > 0")

    exponent = _decimal_exponent(exact)
    scaled = exact * Fraction(10) ** (digits - 1 - exponent)
    mantissa = scaled.numerator // scaled.denominator
    if rounding == "nearest" and scaled - mantissa >= Fraction(1, 2):
        mantissa += 1
    if mantissa == 10**digits:
        mantissa //= 10
        exponent += 1
    return mantissa, exponent


def format_scientific(value: Number, digits: int, rounding: str = "nearest") -> str:
    """Render ``value`` like ``1.3990e+13``."""
    mantissa, exponent = scientific(value, digits, rounding)
    text = str(mantissa)
    body = text if digits == 1 else f"{text[0]}.{text[1:]}"
    return f"{body}e{exponent:+03d}"


def _rows(
    reports: Sequence[KeyspaceReport], digits: int, rounding: str, exact: bool
) -> list[list[str]]:
    rows = []
    for item in reports:
        order, chance = item.render(digits, rounding)
        row = [str(item.p), str(item.n), order, chance]
        if exact:
            row.append(str(item.gl_order))
        rows.append(row)
    return rows


def render_table(
    reports: Sequence[KeyspaceReport],
    *,
    digits: int = 5,
    rounding: str = "published",
    table_format: str = "text",
    exact: bool = False,
) -> str:
    """Render reports as an aligned text table or as CSV rows with a header."""
    if table_format not in TABLE_FORMATS:
        raise RangeError(f"unknown table format {table_format!r}")
    _column_roundings(rounding)
    header = ["p", "n", "keyspace", "probability"]
    if exact:
        header.append("exact")
    rows = _rows(reports, digits, rounding, exact)

    if table_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()

    widths = [
        max(len(cell) for cell in column) for column in zip(header, *rows)
    ]
    lines = [
        "  ".join(cell.rjust(width) for cell, width in zip(line, widths)).rstrip()
        for line in [header, *rows]
    ]
    return "\n".join(lines) + "\n"
