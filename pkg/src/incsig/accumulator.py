"""Additive group Z / 2^3200 Z that combines the link digests.

The group is fixed at 3200 bits; the width is part of the wire format and is
deliberately not parameterizable.  Values are immutable and always reduced.
"""

from __future__ import annotations

WIDTH_BITS = 3200
WIDTH_BYTES = WIDTH_BITS // 8  # 400
_MASK = (1 << WIDTH_BITS) - 1


class Accumulator:
    """A reduced residue modulo 2^3200 with a canonical 400-byte encoding."""

    __slots__ = ("_value",)

    def __init__(self, value: int):
        if not 0 <= value <= _MASK:
            raise ValueError("accumulator value out of range")
        self._value = value

    @property
    def value(self) -> int:
        return self._value

    def to_bytes(self) -> bytes:
        """Canonical big-endian fixed-width encoding (exactly 400 bytes)."""
        return self._value.to_bytes(WIDTH_BYTES, "big")

    @classmethod
    def from_bytes(cls, data: bytes) -> "Accumulator":
        if len(data) != WIDTH_BYTES:
            raise ValueError(f"expected {WIDTH_BYTES} bytes, got {len(data)}")
        return cls(int.from_bytes(data, "big"))

    def __eq__(self, other) -> bool:
        return isinstance(other, Accumulator) and self._value == other._value

    def __hash__(self) -> int:
        return hash((Accumulator, self._value))

    def __repr__(self) -> str:
        return f"Accumulator(0x{self._value:x})"


def acc_zero() -> Accumulator:
    """Additive identity."""
    return Accumulator(0)


def acc_add(a: Accumulator, b: Accumulator) -> Accumulator:
    """(a + b) mod 2^3200."""
    return Accumulator((a.value + b.value) & _MASK)


def acc_sub(a: Accumulator, b: Accumulator) -> Accumulator:
    """(a - b) mod 2^3200."""
    return Accumulator((a.value - b.value) & _MASK)
