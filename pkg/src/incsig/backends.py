"""Inner signature backends.

The scheme only needs an existentially unforgeable signature over the
408-byte string mu || l.  Keys cross the API as raw bytes so the CLI can
store them in flat files.
"""

from __future__ import annotations

import hashlib
import hmac
import os
from abc import ABC, abstractmethod
from typing import Optional, Tuple

from cryptography.exceptions import InvalidSignature
from cryptography.hazmat.primitives.asymmetric.ed25519 import (
    Ed25519PrivateKey,
    Ed25519PublicKey,
)


class SignatureBackend(ABC):
    """Provider of keygen/sign/verify over opaque byte-string keys."""

    @abstractmethod
    def keygen(self, seed: Optional[bytes] = None) -> Tuple[bytes, bytes]:
        """Return (secret_key, public_key).  A seed makes generation deterministic."""

    @abstractmethod
    def derive_public(self, sk: bytes) -> bytes:
        """Public key corresponding to a secret key."""

    @abstractmethod
    def sign(self, sk: bytes, message: bytes) -> bytes:
        ...

    @abstractmethod
    def verify(self, pk: bytes, message: bytes, signature: bytes) -> bool:
        ...


class Ed25519Backend(SignatureBackend):
    """Default backend: Ed25519 with 32-byte raw keys."""

    def keygen(self, seed: Optional[bytes] = None) -> Tuple[bytes, bytes]:
        raw = hashlib.sha256(b"incsig-ed25519-keygen" + seed).digest() if seed else os.urandom(32)
        sk = Ed25519PrivateKey.from_private_bytes(raw)
        return raw, sk.public_key().public_bytes_raw()

    def derive_public(self, sk: bytes) -> bytes:
        return Ed25519PrivateKey.from_private_bytes(sk).public_key().public_bytes_raw()

    def sign(self, sk: bytes, message: bytes) -> bytes:
        return Ed25519PrivateKey.from_private_bytes(sk).sign(message)

    def verify(self, pk: bytes, message: bytes, signature: bytes) -> bool:
        try:
            Ed25519PublicKey.from_public_bytes(pk).verify(signature, message)
            return True
        except (InvalidSignature, ValueError):
            return False


class HmacTestBackend(SignatureBackend):
    """Deterministic test double based on HMAC-SHA256.

    The "public" key equals the secret key, so this is a MAC, not an
    asymmetric signature; it exists only to make tests reproducible and fast.
    """

    def keygen(self, seed: Optional[bytes] = None) -> Tuple[bytes, bytes]:
        sk = hashlib.sha256(b"incsig-hmac-keygen" + (seed if seed else os.urandom(32))).digest()
        return sk, sk

    def derive_public(self, sk: bytes) -> bytes:
        return sk

    def sign(self, sk: bytes, message: bytes) -> bytes:
        return hmac.digest(sk, message, hashlib.sha256)

    def verify(self, pk: bytes, message: bytes, signature: bytes) -> bool:
        return hmac.compare_digest(hmac.digest(pk, message, hashlib.sha256), signature)
