"""Alphabet, encoding and block-packing tests."""

from __future__ import annotations

import pytest

from fibecc.codec import (
    DEFAULT_CHARSET,
    PADDING_SYMBOL,
    PUBLISHED_CHARSET,
    AlphabetMap,
    PointMatrix,
    decode,
    derive_alphabet,
    encode,
    pack_blocks,
    published_alphabet,
    unpack_blocks,
)
from fibecc.curve import INFINITY, Point, enumerate_points, group_order, validate_curve
from fibecc.errors import (
    CurveTooLarge,
    LengthOverflow,
    SizeMismatch,
    UnknownPoint,
    UnknownSymbol,
)

COVID_POINTS = [
    Point(21, 24),
    Point(43, 24),
    Point(34, 25),
    Point(27, 26),
    Point(33, 34),
    Point(2, 33),
    Point(19, 1),
    Point(46, 32),
]


def test_published_alphabet_entries() -> None:
    alphabet = published_alphabet()

    assert len(alphabet) == 47
    assert alphabet.point_for("C") == Point(21, 24)
    assert alphabet.point_for(",") == INFINITY
    assert alphabet.point_for("9") == Point(46, 32)
    assert alphabet.padding == PADDING_SYMBOL
    assert alphabet.charset == PUBLISHED_CHARSET


def test_published_alphabet_covers_the_curve() -> None:
    alphabet = published_alphabet()
    points = {point for _, point in alphabet.pairs}
    assert points == set(enumerate_points(alphabet.curve))


def test_published_alphabet_is_a_bijection() -> None:
    alphabet = published_alphabet()
    assert decode(alphabet, encode(alphabet, PUBLISHED_CHARSET)) == PUBLISHED_CHARSET
    points = enumerate_points(alphabet.curve)
    assert encode(alphabet, decode(alphabet, points)) == points


def test_encode_and_decode() -> None:
    alphabet = published_alphabet()

    assert encode(alphabet, "COVID-19") == COVID_POINTS
    assert encode(alphabet, "") == []
    assert decode(alphabet, encode(alphabet, "KMNE!N6L")) == "KMNE!N6L"


def test_unknown_symbols_and_points() -> None:
    alphabet = published_alphabet()
    with pytest.raises(UnknownSymbol):
        encode(alphabet, "covid?")
    with pytest.raises(UnknownPoint):
        decode(alphabet, [Point(0, 0)])


def test_derive_alphabet_is_deterministic() -> None:
    curve = validate_curve(47, 3, 41)
    charset = DEFAULT_CHARSET[:46] + PADDING_SYMBOL
    alphabet = derive_alphabet(curve, charset)

    assert alphabet.point_for(PADDING_SYMBOL) == INFINITY
    assert alphabet.point_for(charset[0]) == Point(2, 14)
    assert alphabet.point_for(charset[1]) == Point(2, 33)
    assert decode(alphabet, encode(alphabet, charset)) == charset
    assert derive_alphabet(curve, charset) == alphabet


def test_derive_alphabet_rejects_wrong_size() -> None:
    curve = validate_curve(7, 1, 1)
    with pytest.raises(SizeMismatch):
        derive_alphabet(curve, "abcdef")
    alphabet = derive_alphabet(curve, "abcd,")
    assert alphabet.point_for("a") == Point(0, 1)
    assert alphabet.char_for(INFINITY) == ","


def test_alphabet_map_validation() -> None:
    curve = validate_curve(7, 1, 1)
    points = enumerate_points(curve)
    with pytest.raises(SizeMismatch):
        AlphabetMap(curve, (("a", points[0]), ("a", points[1])))
    with pytest.raises(SizeMismatch):
        AlphabetMap(curve, tuple(zip("abcde", points[:4] + [points[0]])))
    with pytest.raises(SizeMismatch):
        AlphabetMap(curve, tuple(zip("abcd", points[:4])))
    with pytest.raises(SizeMismatch):
        AlphabetMap(curve, tuple(zip(["a", "b", "c", "d", "ee"], points)))
    with pytest.raises(UnknownPoint):
        AlphabetMap(curve, tuple(zip("abcde", points[:3] + [Point(1, 1), INFINITY])))


def test_default_charset_has_unique_symbols_and_padding_last() -> None:
    assert len(set(DEFAULT_CHARSET)) == len(DEFAULT_CHARSET)
    assert DEFAULT_CHARSET.endswith(PADDING_SYMBOL)


def test_pack_blocks_fills_columns_first() -> None:
    first, second = pack_blocks(COVID_POINTS, 2)
    c, o, v, i, d, dash, one, nine = COVID_POINTS

    assert first.entries == ((c, v), (o, i))
    assert second.entries == ((d, one), (dash, nine))
    assert first.column_major() == [c, o, v, i]


def test_pack_blocks_pads_with_infinity() -> None:
    blocks = pack_blocks(COVID_POINTS[:5], 2)

    assert len(blocks) == 2
    assert blocks[1].column_major() == [COVID_POINTS[4], INFINITY, INFINITY, INFINITY]
    assert pack_blocks([], 2) == []


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pack_unpack_round_trip(n: int) -> None:
    points = enumerate_points(validate_curve(47, 3, 41))
    for length in range(3 * n * n + 1):
        chunk = [points[i % len(points)] for i in range(length)]
        blocks = pack_blocks(chunk, n)
        assert len(blocks) == -(-length // (n * n))
        assert unpack_blocks(blocks, n, length) == chunk


def test_unpack_blocks_rejects_bad_lengths() -> None:
    blocks = pack_blocks(COVID_POINTS, 2)
    with pytest.raises(LengthOverflow):
        unpack_blocks(blocks, 2, 9)
    with pytest.raises(LengthOverflow):
        unpack_blocks(blocks, 2, -1)
    with pytest.raises(LengthOverflow):
        unpack_blocks(blocks, 3, 8)


def test_point_matrix_helpers() -> None:
    block = PointMatrix.from_columns(COVID_POINTS[:4], 2)

    assert block.n == 2
    assert str(block) == "(21,24),(34,25);(43,24),(27,26)"
    assert block.map(lambda _: INFINITY).column_major() == [INFINITY] * 4
    with pytest.raises(LengthOverflow):
        PointMatrix.from_columns(COVID_POINTS[:3], 2)


def test_derive_alphabet_honours_a_raised_enumeration_limit() -> None:
    curve = validate_curve(10_007, 1, 1)
    count = group_order(curve, 20_000)
    charset = "".join(chr(0x4E00 + i) for i in range(count))

    alphabet = derive_alphabet(curve, charset, 20_000)

    assert len(alphabet) == count
    assert alphabet.point_for(charset[-1]) == INFINITY
    with pytest.raises(CurveTooLarge):
        derive_alphabet(curve, charset)
