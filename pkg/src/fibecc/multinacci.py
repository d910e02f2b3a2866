"""Multinacci (generalized Fibonacci) sequences and their key matrices.

The order-``n`` sequence starts ``t_0 = ... = t_{n-2} = 0``, ``t_{n-1} = 1`` and every
term is the sum of the ``n`` before it. Running the recurrence backwards defines the
negative-index terms, which are kept as canonical residues modulo ``m``.

Powers of the initial matrix are built entry by entry from a contiguous run of terms:
column 0 of ``F_n^k`` holds ``t_{k+n-1}, ..., t_k`` from top to bottom and entry
``(i, j)`` for ``j >= 1`` is ``t_{k+n-2-i} + ... + t_{k+j-1-i}``. The same formula
with a negative ``k`` yields the inverse, so no matrix inversion is ever needed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence

from .errors import DimensionMismatch, KeyFileError, RangeError

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MultinacciParams:
    """Sequence order ``n`` (also the matrix dimension) and reduction modulus ``m``."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise RangeError(f"multinacci order must be at least 2, got {self.n}")
        if self.m < 2:
            raise RangeError(f"modulus must be at least 2, got {self.m}")


@dataclass(frozen=True)
class MultinacciMatrix:
    """The matrix ``F_n^k`` reduced modulo ``m``."""

    params: MultinacciParams
    k: int
    entries: Matrix

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def det_sign(self) -> int:
        return det_sign(self.params.n, self.k)

    def __str__(self) -> str:
        return format_matrix(self.entries)


def _seed(n: int) -> list[int]:
    return [0] * (n - 1) + [1]


def _ascending(params: MultinacciParams) -> Iterator[int]:
    """Yield ``t_0, t_1, t_2, ...`` modulo ``m``."""
    m = params.m
    window = deque(_seed(params.n), maxlen=params.n)
    yield from window
    total = 1
    while True:
        value = total % m
        total = (total + value - window[0]) % m
        window.append(value)
        yield value


def _descending(params: MultinacciParams) -> Iterator[int]:
    """Yield ``t_{-1}, t_{-2}, ...`` modulo ``m``."""
    m = params.m
    window = deque(_seed(params.n), maxlen=params.n)
    total = 1
    while True:
        newest = window[-1]
        # t_j = t_{j+n} - (t_{j+1} + ... + t_{j+n-1})
        value = (2 * newest - total) % m
        total = (total - newest + value) % m
        window.appendleft(value)
        yield value


def terms(params: MultinacciParams, start: int, stop: int) -> list[int]:
    """Return ``[t_start, ..., t_stop]`` (inclusive) modulo ``m``."""
    if stop < start:
        return []
    found: dict[int, int] = {}
    if stop >= 0:
        for index, value in enumerate(islice(_ascending(params), stop + 1)):
            if index >= start:
                found[index] = value
    if start < 0:
        for offset, value in enumerate(islice(_descending(params), -start)):
            index = -1 - offset
            if index <= stop:
                found[index] = value
    return [found[index] for index in range(start, stop + 1)]


def term(params: MultinacciParams, k: int) -> int:
    """Return the ``k``-th multinacci term modulo ``m`` (``k`` of any sign)."""
    return terms(params, k, k)[0]


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def initial_matrix(n: int) -> Matrix:
    """Return ``F_n``: a first row of ones and ones on the subdiagonal."""
    if n < 2:
        raise RangeError(f"multinacci order must be at least 2, got {n}")
    return tuple(
        tuple(1 if i == 0 or j == i - 1 else 0 for j in range(n)) for i in range(n)
    )


def power_matrix(params: MultinacciParams, k: int) -> MultinacciMatrix:
    """Build ``F_n^k mod m`` directly from sequence terms."""
    n, m = params.n, params.m
    low = k - n + 1
    run = terms(params, low, k + n - 1)

    def t(index: int) -> int:
        return run[index - low]

    rows = []
    for i in range(n):
        row = [t(k + n - 1 - i)]
        for j in range(1, n):
            run_sum = sum(t(k + n - 1 - i - step) for step in range(1, n - j + 1))
            row.append(run_sum % m)
        rows.append(tuple(row))
    return MultinacciMatrix(params, k, tuple(rows))


def det_sign(n: int, k: int) -> int:
    """Return ``det(F_n^k) = (-1)^(k(n-1))``."""
    return -1 if (k * (n - 1)) % 2 else 1


def _shape(matrix: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if any(len(row) != cols for row in matrix):
        raise DimensionMismatch("matrix rows have different lengths")
    return rows, cols


def mat_mul_mod(
    left: Sequence[Sequence[int]], right: Sequence[Sequence[int]], m: int
) -> Matrix:
    """Return ``left @ right`` with entries reduced modulo ``m``."""
    left_rows, inner = _shape(left)
    right_rows, right_cols = _shape(right)
    if inner != right_rows:
        raise DimensionMismatch(
            f"cannot multiply {left_rows}x{inner} by {right_rows}x{right_cols}"
        )
    columns = list(zip(*right))
    return tuple(
        tuple(sum(a * b for a, b in zip(row, column)) % m for column in columns)
        for row in left
    )


def format_matrix(matrix: Sequence[Sequence[int]]) -> str:
    """Render rows separated by ``;`` and entries by ``,`` (e.g. ``34,21;21,13``)."""
    return ";".join(",".join(str(value) for value in row) for row in matrix)


def parse_matrix(text: str) -> Matrix:
    """Parse the ``;``/``,`` matrix form produced by :func:`format_matrix`."""
    try:
        rows = tuple(
            tuple(int(value) for value in row.split(","))
            for row in text.strip().split(";")
        )
    except ValueError:
        raise KeyFileError(f"cannot parse matrix {text!r}") from None
    _shape(rows)
    return rows
