"""Character-to-point alphabets and packing of point lists into square blocks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from .curve import (
    DEFAULT_ENUMERATION_LIMIT,
    INFINITY,
    CurveParams,
    Point,
    enumerate_points,
    format_point,
    group_order,
    is_on_curve,
    validate_curve,
)
from .errors import LengthOverflow, SizeMismatch, UnknownPoint, UnknownSymbol

PUBLISHED_CURVE = (47, 3, 41)
PUBLISHED_BASE_POINT = Point(2, 14)
PADDING_SYMBOL = ","

# The published table for y^2 = x^3 + 3x + 41 over F_47; "," stands for infinity.
_PUBLISHED_TABLE: tuple[tuple[str, Optional[tuple[int, int]]], ...] = (
    ("A", (2, 14)), ("B", (28, 9)), ("C", (21, 24)), ("D", (33, 34)),
    ("E", (40, 10)), ("F", (11, 29)), ("G", (42, 29)), ("H", (45, 11)),
    ("I", (27, 26)), ("J", (35, 4)), ("K", (46, 15)), ("L", (20, 39)),
    ("M", (41, 18)), ("N", (16, 40)), ("O", (43, 24)), ("P", (10, 15)),
    ("Q", (24, 42)), ("R", (30, 23)), ("S", (19, 46)), ("T", (38, 15)),
    ("U", (14, 17)), ("V", (34, 25)), ("W", (13, 16)), ("X", (13, 31)),
    ("Y", (34, 22)), ("Z", (14, 30)), ("0", (38, 32)), ("1", (19, 1)),
    ("2", (30, 24)), ("3", (24, 5)), ("4", (10, 32)), ("5", (43, 23)),
    ("6", (16, 7)), ("7", (41, 29)), ("8", (20, 8)), ("9", (46, 32)),
    ("~", (35, 43)), ("!", (27, 21)), ("@", (45, 36)), ("#", (42, 18)),
    ("$", (11, 18)), ("%", (40, 37)), ("^", (33, 13)), ("&", (21, 23)),
    ("*", (28, 38)), ("-", (2, 33)), (",", None),
)

PUBLISHED_CHARSET = "".join(char for char, _ in _PUBLISHED_TABLE)

# Used for derived alphabets when no alphabet file is given; the padding symbol
# stays last so that it lands on infinity.
DEFAULT_CHARSET = (
    PUBLISHED_CHARSET[:-1]
    + "abcdefghijklmnopqrstuvwxyz"
    + " .?:;'\"()[]{}<>/\\|_+=`"
    + PADDING_SYMBOL
)


@dataclass(frozen=True)
class AlphabetMap:
    """A bijection between characters and every point of a curve."""

    curve: CurveParams
    pairs: tuple[tuple[str, Point], ...]
    limit: int = field(default=DEFAULT_ENUMERATION_LIMIT, compare=False)
    _points: dict[str, Point] = field(init=False, repr=False, compare=False)
    _chars: dict[Point, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        points = {char: point for char, point in self.pairs}
        chars = {point: char for char, point in self.pairs}
        if len(points) != len(self.pairs) or len(chars) != len(self.pairs):
            raise SizeMismatch("alphabet characters and points must be unique")
        if any(len(char) != 1 for char in points):
            raise SizeMismatch("alphabet entries must be single characters")
        if INFINITY not in chars:
            raise SizeMismatch("one character must map to the point at infinity")
        for char, point in self.pairs:
            if not is_on_curve(self.curve, point):
                raise UnknownPoint(f"{char!r} maps to {point}, which is off the curve")
        order = group_order(self.curve, self.limit)
        if len(self.pairs) != order:
            raise SizeMismatch(
                f"alphabet has {len(self.pairs)} entries, the curve has {order} points"
            )
        object.__setattr__(self, "_points", points)
        object.__setattr__(self, "_chars", chars)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def charset(self) -> str:
        return "".join(char for char, _ in self.pairs)

    @property
    def padding(self) -> str:
        """The character that maps to infinity."""
        return self._chars[INFINITY]

    def point_for(self, char: str) -> Point:
        try:
            return self._points[char]
        except KeyError:
            raise UnknownSymbol(f"{char!r} is not in the alphabet") from None

    def char_for(self, point: Point) -> str:
        try:
            return self._chars[point]
        except KeyError:
            message = f"{format_point(point)} is not in the alphabet"
            raise UnknownPoint(message) from None


@lru_cache(maxsize=None)
def published_alphabet() -> AlphabetMap:
    """Return the 47-symbol table for ``E_F47(3, 41)``."""
    curve = validate_curve(*PUBLISHED_CURVE)
    pairs = tuple(
        (char, INFINITY if coords is None else Point(*coords))
        for char, coords in _PUBLISHED_TABLE
    )
    return AlphabetMap(curve, pairs)


def derive_alphabet(
    curve: CurveParams,
    charset: Sequence[str],
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> AlphabetMap:
    """Zip ``charset`` with the curve's points sorted by ``(x, y)``, infinity last."""
    points = sorted(enumerate_points(curve, limit), key=Point.sort_key)
    if len(charset) != len(points):
        raise SizeMismatch(
            f"charset has {len(charset)} symbols, the curve has {len(points)} points"
        )
    return AlphabetMap(curve, tuple(zip(charset, points)), limit)


def encode(alphabet: AlphabetMap, text: str) -> list[Point]:
    """Map each character of ``text`` to its point."""
    return [alphabet.point_for(char) for char in text]


def decode(alphabet: AlphabetMap, points: Iterable[Point]) -> str:
    """Map each point back to its character."""
    return "".join(alphabet.char_for(point) for point in points)


@dataclass(frozen=True)
class PointMatrix:
    """A square block of curve points.

    Adding ``kE J`` (``J`` the all-ones matrix) to a block is the same as adding the
    single point ``kE`` to every entry, which is what :meth:`map` is used for.
    """

    entries: tuple[tuple[Point, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_columns(cls, points: Sequence[Point], n: int) -> PointMatrix:
        """Fill an ``n x n`` block column by column from ``n*n`` points."""
        if len(points) != n * n:
            raise LengthOverflow(
                f"need {n * n} points for a {n}x{n} block, got {len(points)}"
            )
        return cls(
            tuple(
                tuple(points[col * n + row] for col in range(n)) for row in range(n)
            )
        )

    def column_major(self) -> list[Point]:
        """Return the entries in the order they were packed."""
        n = self.n
        return [self.entries[row][col] for col in range(n) for row in range(n)]

    def map(self, fn: Callable[[Point], Point]) -> PointMatrix:
        return PointMatrix(
            tuple(tuple(fn(point) for point in row) for row in self.entries)
        )

    def __str__(self) -> str:
        return ";".join(
            ",".join(format_point(point) for point in row) for row in self.entries
        )


def pack_blocks(points: Sequence[Point], n: int) -> list[PointMatrix]:
    """Pad with infinity to a multiple of ``n*n`` and fill blocks column-major."""
    size = n * n
    padded = list(points) + [INFINITY] * (-len(points) % size)
    return [
        PointMatrix.from_columns(padded[start : start + size], n)
        for start in range(0, len(padded), size)
    ]


def unpack_blocks(
    blocks: Sequence[PointMatrix], n: int, original_length: int
) -> list[Point]:
    """Read blocks column-major and drop padding beyond ``original_length``."""
    if any(block.n != n for block in blocks):
        raise LengthOverflow(f"every block must be {n}x{n}")
    capacity = len(blocks) * n * n
    if not 0 <= original_length <= capacity:
        raise LengthOverflow(
            f"recorded length {original_length} exceeds block capacity {capacity}"
        )
    points = [point for block in blocks for point in block.column_major()]
    return points[:original_length]
