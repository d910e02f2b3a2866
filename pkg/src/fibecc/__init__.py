"""Elliptic-curve ElGamal with multinacci key matrices over small prime fields."""

from .curve import CurveParams, Point, validate_curve
from .errors import FibeccError
from .scheme import (
    PrivateKey,
    PublicKey,
    SchemeParams,
    decrypt_message,
    encrypt_message,
    gen_keypair,
)

__all__ = [
    "CurveParams",
    "FibeccError",
    "Point",
    "PrivateKey",
    "PublicKey",
    "SchemeParams",
    "decrypt_message",
    "encrypt_message",
    "gen_keypair",
    "validate_curve",
]
