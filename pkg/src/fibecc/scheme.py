"""ElGamal-style key exchange and affine block encryption over matrices of points.

Alice publishes ``(beta, E1 = beta^r mod p)``. Bob picks ``e``, sends
``a = beta^e mod p`` and derives ``k = E1^e mod p``; Alice recovers ``k = a^r mod p``.
Each ``n x n`` plaintext block ``P`` is encrypted as ``C = K (P + kE J)`` with
``K = F_n^k`` and decrypted as ``P = D C - kE J`` with ``D = F_n^-k``.

Integer coefficients act on points modulo the order ``N`` of the base point, so both key
matrices are reduced modulo ``N`` and the mask scalar is ``k mod N``. On the published
example curve ``N = p`` and this is the same as reducing modulo ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .codec import (
    AlphabetMap,
    PointMatrix,
    decode,
    encode,
    pack_blocks,
    unpack_blocks,
)
from .curve import (
    INFINITY,
    CurveParams,
    Point,
    add,
    negate,
    order_of_point,
    require_on_curve,
    scalar_mul,
)
from .errors import (
    DimensionMismatch,
    NotPrimitive,
    PointNotOnCurve,
    RangeError,
    SizeMismatch,
)
from .field import FieldElement, is_primitive_element, mod_pow
from .multinacci import MultinacciMatrix, MultinacciParams, power_matrix

DEFAULT_DIMENSION = 2
MAX_DIMENSION = 16


@dataclass(frozen=True)
class SchemeParams:
    """The curve, its base point ``E`` and the order ``N`` of ``E``."""

    curve: CurveParams
    base_point: Point
    order: int

    def __post_init__(self) -> None:
        require_on_curve(self.curve, self.base_point)
        if self.base_point.infinity:
            raise PointNotOnCurve("the base point must not be the point at infinity")
        multiple = scalar_mul(self.curve, self.order, self.base_point)
        if self.order < 2 or not multiple.infinity:
            raise RangeError(f"{self.order} is not a multiple of the base point order")

    @classmethod
    def from_curve(cls, curve: CurveParams, base_point: Point) -> SchemeParams:
        """Compute ``N = order_of_point(E)`` and build the parameters."""
        if base_point.infinity:
            raise PointNotOnCurve("the base point must not be the point at infinity")
        return cls(curve, base_point, order_of_point(curve, base_point))

    @property
    def p(self) -> int:
        return self.curve.p


def check_exponent(value: int, p: int, name: str) -> int:
    """Return ``value`` if ``1 < value < p - 1``, else raise ``RangeError``."""
    if not 1 < value < p - 1:
        raise RangeError(f"{name}={value} must satisfy 1 < {name} < {p - 1}")
    return value


def check_dimension(n: int) -> int:
    """Return ``n`` if it is a supported block dimension, else raise ``RangeError``."""
    if not 2 <= n <= MAX_DIMENSION:
        raise RangeError(
            f"block dimension must be between 2 and {MAX_DIMENSION}, got {n}"
        )
    return n


@dataclass(frozen=True)
class PrivateKey:
    """Alice's secret exponent ``r``."""

    r: int


@dataclass(frozen=True)
class EphemeralKey:
    """Bob's per-message secret exponent ``e``."""

    e: int


@dataclass(frozen=True)
class SharedSecret:
    """The shared value ``k``; used as the matrix index and the mask scalar."""

    k: int


@dataclass(frozen=True)
class PublicKey:
    """``(beta, E1)`` together with the public scheme parameters and block size."""

    params: SchemeParams
    beta: FieldElement
    e1: FieldElement
    dimension: int = DEFAULT_DIMENSION

    def __post_init__(self) -> None:
        if not is_primitive_element(self.beta):
            raise NotPrimitive(
                f"beta={self.beta} is not a primitive element mod {self.beta.p}"
            )
        if not 1 <= self.e1.value < self.e1.p:
            raise RangeError(f"E1={self.e1} must lie in [1, {self.e1.p})")
        check_dimension(self.dimension)


@dataclass(frozen=True)
class CiphertextBundle:
    """What Bob transmits: ``a``, the cipher blocks and the unpadded length."""

    a_value: FieldElement
    blocks: tuple[PointMatrix, ...]
    original_length: int
    n: int

    def __post_init__(self) -> None:
        check_dimension(self.n)


@dataclass(frozen=True)
class EncryptionTranscript:
    """Every intermediate value produced while encrypting one message."""

    ephemeral: EphemeralKey
    a_value: FieldElement
    secret: SharedSecret
    key: MultinacciMatrix
    mask: Point
    plain_blocks: tuple[PointMatrix, ...]
    cipher_blocks: tuple[PointMatrix, ...]


@dataclass(frozen=True)
class DecryptionTranscript:
    """Every intermediate value produced while decrypting one message."""

    secret: SharedSecret
    decryption_key: MultinacciMatrix
    negated_mask: Point
    cipher_blocks: tuple[PointMatrix, ...]
    plain_blocks: tuple[PointMatrix, ...]


def gen_keypair(
    params: SchemeParams,
    beta: int,
    r: int,
    dimension: int = DEFAULT_DIMENSION,
) -> tuple[PublicKey, PrivateKey]:
    """Return ``(beta, E1 = beta^r mod p)`` and the private key ``r``."""
    p = params.p
    beta_element = params.curve.modulus.element(beta)
    if not is_primitive_element(beta_element):
        raise NotPrimitive(f"beta={beta} is not a primitive element mod {p}")
    check_exponent(r, p, "r")
    e1 = mod_pow(beta_element, r)
    return PublicKey(params, beta_element, e1, dimension), PrivateKey(r)


def derive_shared_encrypt(
    pub: PublicKey, e: int
) -> tuple[FieldElement, SharedSecret]:
    """Return ``a = beta^e mod p`` and ``k = E1^e mod p``."""
    check_exponent(e, pub.params.p, "e")
    return mod_pow(pub.beta, e), SharedSecret(mod_pow(pub.e1, e).value)


def derive_shared_decrypt(
    a_value: FieldElement, priv: PrivateKey, p: int
) -> SharedSecret:
    """Return ``k = a^r mod p``."""
    if a_value.p != p:
        raise RangeError(f"a={a_value} is not a residue modulo {p}")
    return SharedSecret(mod_pow(a_value, priv.r).value)


def key_matrix(n: int, k: int, order: int) -> MultinacciMatrix:
    """Return ``K = F_n^k`` reduced modulo the base point order."""
    return power_matrix(MultinacciParams(n, order), k)


def decryption_matrix(n: int, k: int, order: int) -> MultinacciMatrix:
    """Return ``D = F_n^-k`` reduced modulo the base point order."""
    return power_matrix(MultinacciParams(n, order), -k)


def mat_point_mul(
    curve: CurveParams, matrix: Sequence[Sequence[int]], block: PointMatrix
) -> PointMatrix:
    """Act on a block of points with an integer matrix.

    Entry ``(i, j)`` of the result is ``sum_l matrix[i][l] * block[l][j]``.
    """
    n = block.n
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise DimensionMismatch(f"matrix does not match the {n}x{n} block")
    for row in block.entries:
        require_on_curve(curve, *row)

    rows = []
    for coefficients in matrix:
        out_row = []
        for col in range(n):
            total = INFINITY
            for coefficient, source in zip(coefficients, block.entries):
                total = add(curve, total, scalar_mul(curve, coefficient, source[col]))
            out_row.append(total)
        rows.append(tuple(out_row))
    return PointMatrix(tuple(rows))


def mask_point(params: SchemeParams, secret: SharedSecret) -> Point:
    """Return ``kE``, the point added to every plaintext entry."""
    return scalar_mul(params.curve, secret.k % params.order, params.base_point)


def negated_mask(params: SchemeParams, secret: SharedSecret) -> Point:
    """Return ``-kE``, which has the x-coordinate of ``kE`` and the negated y."""
    return negate(params.curve, mask_point(params, secret))


def is_trivial_mask(params: SchemeParams, secret: SharedSecret) -> bool:
    """Return whether ``kE`` is the point at infinity."""
    return secret.k % params.order == 0


def _translate(params: SchemeParams, block: PointMatrix, offset: Point) -> PointMatrix:
    return block.map(lambda point: add(params.curve, point, offset))


def encrypt_block(
    params: SchemeParams,
    key: MultinacciMatrix,
    secret: SharedSecret,
    block: PointMatrix,
) -> PointMatrix:
    """Return ``C = K (P + kE J)``."""
    shifted = _translate(params, block, mask_point(params, secret))
    return mat_point_mul(params.curve, key.entries, shifted)


def decrypt_block(
    params: SchemeParams,
    decryption_key: MultinacciMatrix,
    secret: SharedSecret,
    block: PointMatrix,
) -> PointMatrix:
    """Return ``P = D C - kE J``."""
    product = mat_point_mul(params.curve, decryption_key.entries, block)
    return _translate(params, product, negated_mask(params, secret))


def _check_alphabet(params: SchemeParams, alphabet: AlphabetMap) -> None:
    if alphabet.curve != params.curve:
        raise SizeMismatch(
            f"alphabet is defined on {alphabet.curve}, not on {params.curve}"
        )


def encrypt_with_transcript(
    pub: PublicKey,
    e: int,
    text: str,
    alphabet: AlphabetMap,
    n: Optional[int] = None,
) -> tuple[CiphertextBundle, EncryptionTranscript]:
    """Encrypt ``text`` and also return every intermediate value."""
    params = pub.params
    n = check_dimension(pub.dimension if n is None else n)
    _check_alphabet(params, alphabet)

    points = encode(alphabet, text)
    a_value, secret = derive_shared_encrypt(pub, e)
    key = key_matrix(n, secret.k, params.order)
    plain_blocks = tuple(pack_blocks(points, n)) if points else ()
    cipher_blocks = tuple(
        encrypt_block(params, key, secret, block) for block in plain_blocks
    )
    bundle = CiphertextBundle(a_value, cipher_blocks, len(points), n)
    transcript = EncryptionTranscript(
        EphemeralKey(e),
        a_value,
        secret,
        key,
        mask_point(params, secret),
        plain_blocks,
        cipher_blocks,
    )
    return bundle, transcript


def encrypt_message(
    pub: PublicKey,
    e: int,
    text: str,
    alphabet: AlphabetMap,
    n: Optional[int] = None,
) -> CiphertextBundle:
    """Encode, pack, and encrypt ``text`` block by block."""
    bundle, _ = encrypt_with_transcript(pub, e, text, alphabet, n)
    return bundle


def decrypt_with_transcript(
    priv: PrivateKey,
    params: SchemeParams,
    bundle: CiphertextBundle,
    alphabet: AlphabetMap,
) -> tuple[str, DecryptionTranscript]:
    """Decrypt ``bundle`` and also return every intermediate value."""
    _check_alphabet(params, alphabet)
    secret = derive_shared_decrypt(bundle.a_value, priv, params.p)
    decryption_key = decryption_matrix(bundle.n, secret.k, params.order)
    plain_blocks = tuple(
        decrypt_block(params, decryption_key, secret, block)
        for block in bundle.blocks
    )
    points = unpack_blocks(plain_blocks, bundle.n, bundle.original_length)
    transcript = DecryptionTranscript(
        secret,
        decryption_key,
        negated_mask(params, secret),
        bundle.blocks,
        plain_blocks,
    )
    return decode(alphabet, points), transcript


def decrypt_message(
    priv: PrivateKey,
    params: SchemeParams,
    bundle: CiphertextBundle,
    alphabet: AlphabetMap,
) -> str:
    """Decrypt every block, drop the padding, and decode back to text."""
    text, _ = decrypt_with_transcript(priv, params, bundle, alphabet)
    return text


def ciphertext_text(bundle: CiphertextBundle, alphabet: AlphabetMap) -> str:
    """Spell the cipher blocks (column-major, padding included) in ``alphabet``."""
    return decode(
        alphabet, (point for block in bundle.blocks for point in block.column_major())
    )
