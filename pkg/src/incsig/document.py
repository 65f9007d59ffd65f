"""Block model for documents: padding, and the insert/replace/delete algebra.

Documents are split into b-bit blocks.  Padding appends a 1-bit followed by
zeros; when the input already fills whole blocks a full pad block 10^(b-1)
is appended, so every block sequence is the image of exactly one raw string.
Edits operate at block granularity on the padded sequence and may never
touch the final pad block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import (
    EmptyResult,
    IndexOutOfRange,
    InvalidParams,
    MalformedPadding,
    MalformedScript,
)


@dataclass(frozen=True)
class SchemeParams:
    """Block geometry (b, k, d) with b = k*d, d >= 2."""

    b: int  # document block size, bits
    k: int  # random sub-block size, bits
    d: int  # chaining arity

    def __post_init__(self):
        if self.d < 2 or self.k < 1:
            raise InvalidParams(f"need d >= 2 and k >= 1, got (k={self.k}, d={self.d})")
        if self.b != self.k * self.d:
            raise InvalidParams(f"b = k*d violated: {self.b} != {self.k}*{self.d}")
        if self.b % 8 != 0:
            raise InvalidParams(f"b must be a multiple of 8, got {self.b}")

    @property
    def block_bytes(self) -> int:
        return self.b // 8


DEFAULT_PARAMS = SchemeParams(b=256, k=128, d=2)


@dataclass(frozen=True)
class BlockDocument:
    """A padded sequence of b-bit blocks plus the raw length in bits."""

    blocks: Tuple[bytes, ...]
    original_bit_length: int
    params: SchemeParams

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("document must contain at least one block")
        nbytes = self.params.block_bytes
        # min/max over map stays in C; updates revalidate large documents.
        sizes = tuple(map(len, self.blocks))
        if min(sizes) != nbytes or max(sizes) != nbytes:
            raise ValueError(f"every block must be exactly {nbytes} bytes")

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @classmethod
    def _from_trusted(
        cls, blocks: Tuple[bytes, ...], bit_length: int, params: SchemeParams
    ) -> "BlockDocument":
        # Splices of already-validated blocks skip the O(m) revalidation,
        # keeping single-block updates independent of document length.
        self = object.__new__(cls)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "original_bit_length", bit_length)
        object.__setattr__(self, "params", params)
        return self


@dataclass(frozen=True)
class EditOp:
    """A single block-level modification.

    ``i`` is 1-based except for insert, where i = 0 means prepend and the
    payload lands between blocks i and i+1.  ``j`` is only used by delete.
    """

    kind: str  # "insert" | "replace" | "delete"
    i: int
    j: Optional[int] = None
    payload: Optional[bytes] = None

    @classmethod
    def insert(cls, i: int, payload: bytes) -> "EditOp":
        return cls("insert", i, payload=payload)

    @classmethod
    def replace(cls, i: int, payload: bytes) -> "EditOp":
        return cls("replace", i, payload=payload)

    @classmethod
    def delete(cls, i: int, j: int) -> "EditOp":
        return cls("delete", i, j=j)


def payload_blocks(op: EditOp, params: SchemeParams) -> Tuple[bytes, ...]:
    """Split an insert/replace payload into b-bit blocks."""
    if op.payload is None:
        raise MalformedScript(f"{op.kind} requires a payload")
    nbytes = params.block_bytes
    if len(op.payload) == 0 or len(op.payload) % nbytes != 0:
        raise MalformedScript(
            f"payload must be a positive multiple of {nbytes} bytes"
        )
    return tuple(
        op.payload[pos : pos + nbytes] for pos in range(0, len(op.payload), nbytes)
    )


def pad(raw: bytes, params: SchemeParams) -> BlockDocument:
    """Pad a raw byte string into b-bit blocks with the strengthened 10* rule."""
    nbytes = params.block_bytes
    rem = len(raw) % nbytes
    padded = raw + b"\x80" + b"\x00" * ((nbytes - rem - 1) % nbytes)
    if rem == 0:
        # Whole-block input (including empty): mandatory extra pad block.
        assert len(padded) == len(raw) + nbytes
    blocks = tuple(padded[pos : pos + nbytes] for pos in range(0, len(padded), nbytes))
    return BlockDocument(blocks, len(raw) * 8, params)


def _padded_raw_bytes(blocks: Tuple[bytes, ...]) -> Optional[int]:
    """Byte length of the raw string under the pad marker, or None if absent.

    Scans whole blocks from the tail, so valid pad images cost O(1).
    """
    for bi in range(len(blocks) - 1, -1, -1):
        stripped = blocks[bi].rstrip(b"\x00")
        if stripped:
            if stripped[-1] != 0x80:
                return None
            return bi * len(blocks[bi]) + len(stripped) - 1
    return None


def unpad(doc: BlockDocument) -> bytes:
    """Recover the unique raw string with pad(raw) = doc."""
    raw_len = _padded_raw_bytes(doc.blocks)
    if raw_len is None:
        raise MalformedPadding("no 1-bit padding marker found")
    return b"".join(doc.blocks)[:raw_len]


def apply_edit(doc: BlockDocument, op: EditOp) -> BlockDocument:
    """Apply one edit to the padded block sequence.

    The final block is the pad block and is protected: it can be neither
    replaced nor deleted, and nothing may be inserted after it.
    """
    m = doc.num_blocks
    blocks = doc.blocks
    if op.kind == "insert":
        pb = payload_blocks(op, doc.params)
        if not 0 <= op.i <= m - 1:
            raise IndexOutOfRange(f"insert position {op.i} outside 0..{m - 1}")
        new_blocks = blocks[: op.i] + pb + blocks[op.i :]
    elif op.kind == "replace":
        pb = payload_blocks(op, doc.params)
        if not (1 <= op.i and op.i + len(pb) - 1 <= m - 1):
            raise IndexOutOfRange(
                f"replace of blocks {op.i}..{op.i + len(pb) - 1} outside 1..{m - 1}"
            )
        new_blocks = blocks[: op.i - 1] + pb + blocks[op.i - 1 + len(pb) :]
    elif op.kind == "delete":
        if op.j is None:
            raise MalformedScript("delete requires an end index")
        if not 1 <= op.i <= op.j:
            raise IndexOutOfRange(f"bad delete range {op.i}..{op.j}")
        if op.i == 1 and op.j >= m:
            raise EmptyResult("delete would remove every block")
        if op.j > m - 1:
            raise IndexOutOfRange(f"delete range {op.i}..{op.j} outside 1..{m - 1}")
        new_blocks = blocks[: op.i - 1] + blocks[op.j :]
    else:
        raise MalformedScript(f"unknown edit kind {op.kind!r}")

    raw_len = _padded_raw_bytes(new_blocks)
    bit_length = (
        raw_len * 8 if raw_len is not None else len(new_blocks) * doc.params.b
    )
    return BlockDocument._from_trusted(new_blocks, bit_length, doc.params)


def parse_edit_script(text: str, params: SchemeParams) -> list:
    """Parse the line-oriented edit-script format.

    One op per line: ``insert <i> <hex>``, ``replace <i> <hex>`` or
    ``delete <i> <j>``.  Indices are decimal; payload hex must cover a
    positive whole number of blocks.  Blank lines and ``#`` comments are
    skipped.
    """
    ops = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            if fields[0] == "insert" and len(fields) == 3:
                op = EditOp.insert(int(fields[1]), bytes.fromhex(fields[2]))
            elif fields[0] == "replace" and len(fields) == 3:
                op = EditOp.replace(int(fields[1]), bytes.fromhex(fields[2]))
            elif fields[0] == "delete" and len(fields) == 3:
                op = EditOp.delete(int(fields[1]), int(fields[2]))
            else:
                raise ValueError("unrecognized op")
        except ValueError as exc:
            raise MalformedScript(f"line {lineno}: {exc}") from exc
        if op.payload is not None:
            payload_blocks(op, params)  # validates alignment, raises MalformedScript
        ops.append(op)
    return ops
