"""Short-Weierstrass elliptic curves ``y^2 = x^3 + ax + b`` over ``F_p``."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import CurveTooLarge, KeyFileError, PointNotOnCurve, SingularCurve
from .field import FieldElement, PrimeModulus

DEFAULT_ENUMERATION_LIMIT = 10_000


@dataclass(frozen=True)
class Point:
    """An affine point ``(x, y)`` or the point at infinity.

    Coordinates are plain canonical residues; the owning curve supplies the modulus.
    Use :data:`INFINITY` for the identity rather than constructing it directly.
    """

    x: int = 0
    y: int = 0
    infinity: bool = False

    def sort_key(self) -> tuple[int, int, int]:
        """Order affine points by ``(x, y)`` with infinity last."""
        return (1, 0, 0) if self.infinity else (0, self.x, self.y)

    def __str__(self) -> str:
        return format_point(self)


INFINITY = Point(infinity=True)


@dataclass(frozen=True)
class CurveParams:
    """Validated curve coefficients over a prime field."""

    modulus: PrimeModulus
    a: FieldElement
    b: FieldElement

    def __post_init__(self) -> None:
        if (4 * self.a.value**3 + 27 * self.b.value**2) % self.p == 0:
            raise SingularCurve(f"curve {self} is singular (4a^3 + 27b^2 = 0 mod p)")

    @property
    def p(self) -> int:
        return self.modulus.p

    def __str__(self) -> str:
        return format_curve(self)


def validate_curve(p: int, a: int, b: int) -> CurveParams:
    """Build curve parameters, raising ``SingularCurve`` on a zero discriminant."""
    modulus = PrimeModulus(p)
    return CurveParams(modulus, modulus.element(a), modulus.element(b))


def is_on_curve(curve: CurveParams, point: Point) -> bool:
    """Return whether ``point`` satisfies the curve equation (infinity always does)."""
    if point.infinity:
        return True
    p = curve.p
    if not (0 <= point.x < p and 0 <= point.y < p):
        return False
    rhs = point.x**3 + curve.a.value * point.x + curve.b.value
    return (point.y * point.y - rhs) % p == 0


def require_on_curve(curve: CurveParams, *points: Point) -> None:
    """Raise ``PointNotOnCurve`` for the first point that is off ``curve``."""
    for point in points:
        if not is_on_curve(curve, point):
            raise PointNotOnCurve(f"{point} is not on the curve {curve}")


def negate(curve: CurveParams, point: Point) -> Point:
    """Return ``-P``: same x-coordinate, negated y-coordinate."""
    if point.infinity:
        return INFINITY
    return Point(point.x, (-point.y) % curve.p)


def _add(p: int, a: int, first: Point, second: Point) -> Point:
    if first.infinity:
        return second
    if second.infinity:
        return first

    x1, y1, x2, y2 = first.x, first.y, second.x, second.y
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return INFINITY
        slope = (3 * x1 * x1 + a) * pow(2 * y1, -1, p)
    else:
        slope = (y2 - y1) * pow(x2 - x1, -1, p)

    x3 = (slope * slope - x1 - x2) % p
    y3 = (slope * (x1 - x3) - y1) % p
    return Point(x3, y3)


def add(curve: CurveParams, first: Point, second: Point) -> Point:
    """Return ``P + Q`` under the chord-tangent group law."""
    require_on_curve(curve, first, second)
    return _add(curve.p, curve.a.value, first, second)


def _scalar_mul(p: int, a: int, multiplier: int, point: Point) -> Point:
    result = INFINITY
    addend = point
    while multiplier:
        if multiplier & 1:
            result = _add(p, a, result, addend)
        addend = _add(p, a, addend, addend)
        multiplier >>= 1
    return result


def scalar_mul(curve: CurveParams, multiplier: int, point: Point) -> Point:
    """Return ``m * P`` by double-and-add; ``0 * P`` is infinity."""
    if multiplier < 0:
        return scalar_mul(curve, -multiplier, negate(curve, point))
    require_on_curve(curve, point)
    return _scalar_mul(curve.p, curve.a.value, multiplier, point)


def hasse_interval(p: int) -> tuple[int, int]:
    """Return the inclusive range of group orders allowed by the Hasse bound."""
    # |#E - (p + 1)| <= 2 sqrt(p)  <=>  (#E - p - 1)^2 <= 4p
    width = math.isqrt(4 * p)
    return p + 1 - width, p + 1 + width


def enumerate_points(
    curve: CurveParams, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> list[Point]:
    """Return every point of the curve sorted by ``(x, y)``, infinity last."""
    p = curve.p
    if p > limit:
        raise CurveTooLarge(
            f"p={p} exceeds the enumeration limit {limit}; raise enumeration_limit"
        )

    roots: dict[int, list[int]] = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)

    a, b = curve.a.value, curve.b.value
    points = [
        Point(x, y)
        for x in range(p)
        for y in roots.get((x**3 + a * x + b) % p, [])
    ]
    points.append(INFINITY)
    return points


def group_order(curve: CurveParams, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """Return the number of points on ``curve``, infinity included."""
    return len(enumerate_points(curve, limit))


def order_of_point(curve: CurveParams, point: Point) -> int:
    """Return the least ``m >= 1`` with ``m * P`` equal to infinity."""
    require_on_curve(curve, point)
    p, a = curve.p, curve.a.value
    order = 1
    current = point
    while not current.infinity:
        current = _add(p, a, current, point)
        order += 1
    return order


def point_orders(
    curve: CurveParams, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> dict[Point, int]:
    """Map every point of ``curve`` to its order."""
    points = enumerate_points(curve, limit)
    return {point: order_of_point(curve, point) for point in points}


_POINT_RE = re.compile(r"^\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?$")
_CURVE_RE = re.compile(r"^p=(\d+)\s+a=(\d+)\s+b=(\d+)$")


def format_point(point: Point) -> str:
    """Render a point as ``O`` or ``(x,y)``."""
    return "O" if point.infinity else f"({point.x},{point.y})"


def parse_point(text: str) -> Point:
    """Parse ``O``, ``(x,y)`` or the bare ``x,y`` accepted on the command line."""
    normalized = text.strip()
    if normalized in {"O", "o"}:
        return INFINITY
    match = _POINT_RE.match(normalized)
    if match is None:
        raise KeyFileError(f"cannot parse point {text!r}; expected O or (x,y)")
    return Point(int(match.group(1)), int(match.group(2)))


def format_curve(curve: CurveParams) -> str:
    """Render curve parameters as ``p=<int> a=<int> b=<int>``."""
    return f"p={curve.p} a={curve.a.value} b={curve.b.value}"


def parse_curve(text: str) -> CurveParams:
    """Parse the ``p=<int> a=<int> b=<int>`` form produced by :func:`format_curve`."""
    match = _CURVE_RE.match(text.strip())
    if match is None:
        raise KeyFileError(f"cannot parse curve {text!r}; expected 'p=.. a=.. b=..'")
    return validate_curve(*(int(group) for group in match.groups()))
