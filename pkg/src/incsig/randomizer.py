"""Counter-mode expansion of a 256-bit hash into the 3200-bit randomize map.

Each 2b-bit link is expanded with 13 independent counter blocks of the
underlying digest; the 3328-bit concatenation is truncated to its first
400 bytes.  The counter blocks are independent, so they may be computed
in parallel if needed; here they are sequential.
"""

from __future__ import annotations

import hashlib
from typing import Callable, Optional

from .accumulator import WIDTH_BYTES, Accumulator
from .errors import WrongInputLength

DEFAULT_DOMAIN_TAG = b"INCSIG-R-v1"

_DIGEST_BYTES = 32
# ceil(400 / 32) = 13 counter blocks; the last one is truncated.
_NUM_BLOCKS = 13


class RandomizeFn:
    """Deterministic map from a 2b-bit link to a 3200-bit accumulator value.

    ``digest`` is any hashlib-style constructor with a 32-byte output.
    ``input_bytes``, when set, rejects inputs of any other length.
    """

    def __init__(
        self,
        digest: Callable = hashlib.sha256,
        domain_tag: bytes = DEFAULT_DOMAIN_TAG,
        input_bytes: Optional[int] = None,
    ):
        if digest(b"").digest_size != _DIGEST_BYTES:
            raise ValueError("underlying digest must produce 256 bits")
        self.digest = digest
        self.domain_tag = domain_tag
        self.input_bytes = input_bytes

    @classmethod
    def for_params(cls, params, **kwargs) -> "RandomizeFn":
        """Randomizer whose input length is pinned to the 2b-bit link size."""
        return cls(input_bytes=params.b // 4, **kwargs)

    def __call__(self, link: bytes) -> Accumulator:
        if self.input_bytes is not None and len(link) != self.input_bytes:
            raise WrongInputLength(
                f"expected {self.input_bytes} bytes, got {len(link)}"
            )
        out = bytearray()
        for counter in range(_NUM_BLOCKS):
            h = self.digest(self.domain_tag)
            h.update(counter.to_bytes(4, "big"))
            h.update(link)
            out += h.digest()
        return Accumulator.from_bytes(bytes(out[:WIDTH_BYTES]))
