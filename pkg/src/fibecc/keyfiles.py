"""Text formats for public keys, private keys, ciphertexts, and alphabets.

Key and ciphertext files are ``name=value`` lines with decimal integers and points
written ``(x,y)`` or ``O``. Ciphertext files follow the header with one line per block,
holding its points in column-major order separated by ``;``. Alphabet files hold one
``<char> <x> <y>`` or ``<char> O`` line per symbol.
"""

from __future__ import annotations

from typing import Optional

from .codec import AlphabetMap, PointMatrix
from .curve import (
    DEFAULT_ENUMERATION_LIMIT,
    INFINITY,
    CurveParams,
    Point,
    format_point,
    parse_point,
    validate_curve,
)
from .errors import KeyFileError
from .scheme import (
    MAX_DIMENSION,
    CiphertextBundle,
    PrivateKey,
    PublicKey,
    SchemeParams,
    check_exponent,
)

PUBLIC_KEY_FIELDS = ("p", "a", "b", "E", "beta", "E1", "n")
PRIVATE_KEY_FIELDS = ("r",)
CIPHERTEXT_FIELDS = ("a", "n", "len")


def _split_assignment(line: str) -> tuple[str, str]:
    name, sep, value = line.partition("=")
    if not sep or not name.strip():
        raise KeyFileError(f"expected 'name=value', got {line!r}")
    return name.strip(), value.strip()


def _parse_fields(lines: list[str], required: tuple[str, ...]) -> dict[str, str]:
    """Collect ``name=value`` pairs, rejecting duplicates, unknown and missing names."""
    fields: dict[str, str] = {}
    for line in lines:
        name, value = _split_assignment(line)
        if name not in required:
            raise KeyFileError(f"unexpected field {name!r}")
        if name in fields:
            raise KeyFileError(f"duplicate field {name!r}")
        fields[name] = value
    missing = [name for name in required if name not in fields]
    if missing:
        raise KeyFileError(f"missing field(s): {', '.join(missing)}")
    return fields


def _parse_int(fields: dict[str, str], name: str) -> int:
    try:
        return int(fields[name])
    except ValueError:
        message = f"{name}={fields[name]!r} is not a decimal integer"
        raise KeyFileError(message) from None


def _content_lines(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def dump_public_key(pub: PublicKey) -> str:
    curve = pub.params.curve
    return "".join(
        f"{name}={value}\n"
        for name, value in (
            ("p", curve.p),
            ("a", curve.a.value),
            ("b", curve.b.value),
            ("E", format_point(pub.params.base_point)),
            ("beta", pub.beta.value),
            ("E1", pub.e1.value),
            ("n", pub.dimension),
        )
    )


def load_public_key(text: str) -> PublicKey:
    """Parse a public key file and recompute the base point order."""
    fields = _parse_fields(_content_lines(text), PUBLIC_KEY_FIELDS)
    curve = validate_curve(
        _parse_int(fields, "p"), _parse_int(fields, "a"), _parse_int(fields, "b")
    )
    params = SchemeParams.from_curve(curve, parse_point(fields["E"]))
    return PublicKey(
        params,
        curve.modulus.element(_parse_int(fields, "beta")),
        curve.modulus.element(_parse_int(fields, "E1")),
        _parse_int(fields, "n"),
    )


def dump_private_key(priv: PrivateKey) -> str:
    return f"r={priv.r}\n"


def load_private_key(text: str, p: Optional[int] = None) -> PrivateKey:
    """Parse a private key file; with ``p`` given, also check ``1 < r < p - 1``."""
    fields = _parse_fields(_content_lines(text), PRIVATE_KEY_FIELDS)
    r = _parse_int(fields, "r")
    if p is not None:
        check_exponent(r, p, "r")
    return PrivateKey(r)


def dump_ciphertext(bundle: CiphertextBundle) -> str:
    header = f"a={bundle.a_value.value}\nn={bundle.n}\nlen={bundle.original_length}\n"
    blocks = "".join(
        ";".join(format_point(point) for point in block.column_major()) + "\n"
        for block in bundle.blocks
    )
    return header + blocks


def load_ciphertext(text: str, params: SchemeParams) -> CiphertextBundle:
    """Parse a ciphertext file; points are checked against the curve on decryption."""
    lines = _content_lines(text)
    header = [line for line in lines if "=" in line]
    block_lines = [line for line in lines if "=" not in line]
    fields = _parse_fields(header, CIPHERTEXT_FIELDS)
    n = _parse_int(fields, "n")
    if not 2 <= n <= MAX_DIMENSION:
        raise KeyFileError(f"n={n} must be between 2 and {MAX_DIMENSION}")
    original_length = _parse_int(fields, "len")

    blocks = []
    for line in block_lines:
        points = [parse_point(token) for token in line.split(";")]
        if len(points) != n * n:
            raise KeyFileError(
                f"block {line!r} has {len(points)} points, expected {n * n}"
            )
        blocks.append(PointMatrix.from_columns(points, n))
    if original_length < 0 or original_length > len(blocks) * n * n:
        raise KeyFileError(
            f"len={original_length} does not fit in {len(blocks)} block(s) of {n}x{n}"
        )
    return CiphertextBundle(
        params.curve.modulus.element(_parse_int(fields, "a")),
        tuple(blocks),
        original_length,
        n,
    )


def dump_alphabet(alphabet: AlphabetMap) -> str:
    return "".join(
        f"{char} O\n" if point.infinity else f"{char} {point.x} {point.y}\n"
        for char, point in alphabet.pairs
    )


def load_alphabet(
    text: str, curve: CurveParams, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> AlphabetMap:
    """Parse an alphabet file for ``curve``; the first column is the character."""
    pairs: list[tuple[str, Point]] = []
    for line in text.splitlines():
        if not line:
            continue
        char, coords = line[0], line[1:].split()
        if coords == ["O"]:
            pairs.append((char, INFINITY))
        elif len(coords) == 2 and all(part.isdigit() for part in coords):
            pairs.append((char, Point(int(coords[0]), int(coords[1]))))
        else:
            raise KeyFileError(f"cannot parse alphabet line {line!r}")
    return AlphabetMap(curve, tuple(pairs), limit)
