"""The incremental signature scheme: sign, verify, update, and the codec.

The generic engine implements the d-wise chained construction; the original
pair-chained scheme is exactly the (k, d) = (b/2, 2) parametrization.
The inner signature covers mu || l where l is the padded block count, so a
signature binds both content and length.  The serialized mu is a cache for
updates only: verification always recomputes it.
"""

from __future__ import annotations

import random
import struct
from dataclasses import dataclass
from typing import Sequence, Tuple

from .accumulator import WIDTH_BYTES, Accumulator
from .backends import SignatureBackend
from .chainhash import RandomChain, delta_update_into, hash_full
from .document import BlockDocument, EditOp, SchemeParams, apply_edit, payload_blocks
from .errors import InvalidParams, MalformedSignature
from .randomizer import RandomizeFn

MAGIC = b"ISIG"
VERSION = 1

# Default randomness source; tests inject a seeded random.Random instead.
SYSTEM_RNG = random.SystemRandom()


@dataclass(frozen=True)
class IncrementalSignature:
    params: SchemeParams
    chain: RandomChain
    mu: Accumulator
    length_blocks: int
    inner_sig: bytes

    def __post_init__(self):
        if len(self.chain) != self.length_blocks + self.params.d - 1:
            raise ValueError("chain length inconsistent with block count")


def signed_message(mu: Accumulator, length_blocks: int) -> bytes:
    """The 408-byte string mu || l handed to the inner signature."""
    return mu.to_bytes() + struct.pack(">Q", length_blocks)


def _draw_chain(rng, k: int, count: int) -> Tuple[int, ...]:
    return tuple(rng.getrandbits(k) for _ in range(count))


def sign(
    sk: bytes,
    doc: BlockDocument,
    backend: SignatureBackend,
    rf: RandomizeFn,
    rng=SYSTEM_RNG,
    counters=None,
) -> IncrementalSignature:
    """Sign a padded document with a fresh random chain."""
    p = doc.params
    m = doc.num_blocks
    chain = RandomChain(_draw_chain(rng, p.k, m + p.d - 1), p)
    mu = hash_full(chain, doc, rf, counters=counters)
    s = backend.sign(sk, signed_message(mu, m))
    return IncrementalSignature(p, chain, mu, m, s)


def verify(
    pk: bytes,
    doc: BlockDocument,
    sig: IncrementalSignature,
    backend: SignatureBackend,
    rf: RandomizeFn,
) -> bool:
    """Recompute the hash from the document and chain; never trusts sig.mu."""
    try:
        m = doc.num_blocks
        if sig.params != doc.params:
            return False
        if sig.length_blocks != m or len(sig.chain) != m + sig.params.d - 1:
            return False
        mu = hash_full(sig.chain, doc, rf)
        return backend.verify(pk, signed_message(mu, m), sig.inner_sig)
    except Exception:
        return False


def update(
    sk: bytes,
    doc: BlockDocument,
    sig: IncrementalSignature,
    op: EditOp,
    backend: SignatureBackend,
    rf: RandomizeFn,
    rng=SYSTEM_RNG,
    counters=None,
) -> Tuple[BlockDocument, IncrementalSignature]:
    """Apply one edit and re-sign at cost independent of the document length.

    The caller is responsible for only updating (doc, sig) pairs that
    verify; the stored sig.mu is trusted here.
    """
    p = sig.params
    if op.kind == "insert":
        fresh = _draw_chain(rng, p.k, len(payload_blocks(op, p)))
    else:
        fresh = ()
    new_doc = apply_edit(doc, op)
    mu, chain = delta_update_into(
        sig.mu, sig.chain, doc, new_doc, op, fresh, rf, counters=counters
    )
    m = new_doc.num_blocks
    s = backend.sign(sk, signed_message(mu, m))
    return new_doc, IncrementalSignature(p, chain, mu, m, s)


# --- Serialization -----------------------------------------------------------
#
# magic "ISIG" | version u8 | b u16 | k u16 | d u16 | l u64 |
# chain (packed k-bit sub-blocks, MSB first, zero padded) | mu (400 bytes) |
# sig_len u32 | inner signature

_HEADER = struct.Struct(">4sBHHHQ")


def _chain_num_bytes(count: int, k: int) -> int:
    return (count * k + 7) // 8


def _pack_chain(chain: RandomChain) -> bytes:
    k = chain.params.k
    count = len(chain)
    acc = 0
    for r in chain.sub_blocks:
        acc = (acc << k) | r
    pad_bits = (-count * k) % 8
    return (acc << pad_bits).to_bytes(_chain_num_bytes(count, k), "big")


def _unpack_chain(data: bytes, count: int, params: SchemeParams) -> RandomChain:
    k = params.k
    pad_bits = (-count * k) % 8
    acc = int.from_bytes(data, "big")
    if acc & ((1 << pad_bits) - 1):
        raise MalformedSignature("nonzero padding bits in chain")
    acc >>= pad_bits
    mask = (1 << k) - 1
    subs = tuple((acc >> (k * (count - 1 - t))) & mask for t in range(count))
    return RandomChain(subs, params)


def encode_signature(sig: IncrementalSignature) -> bytes:
    p = sig.params
    header = _HEADER.pack(MAGIC, VERSION, p.b, p.k, p.d, sig.length_blocks)
    return (
        header
        + _pack_chain(sig.chain)
        + sig.mu.to_bytes()
        + struct.pack(">I", len(sig.inner_sig))
        + sig.inner_sig
    )


def decode_signature(data: bytes) -> IncrementalSignature:
    if len(data) < _HEADER.size:
        raise MalformedSignature("truncated header")
    magic, version, b, k, d, length_blocks = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise MalformedSignature("bad magic")
    if version != VERSION:
        raise MalformedSignature(f"unsupported version {version}")
    try:
        params = SchemeParams(b=b, k=k, d=d)
    except InvalidParams as exc:
        raise MalformedSignature(str(exc)) from exc
    pos = _HEADER.size
    count = length_blocks + d - 1
    chain_len = _chain_num_bytes(count, k)
    if len(data) < pos + chain_len + WIDTH_BYTES + 4:
        raise MalformedSignature("truncated body")
    chain = _unpack_chain(data[pos : pos + chain_len], count, params)
    pos += chain_len
    mu = Accumulator.from_bytes(data[pos : pos + WIDTH_BYTES])
    pos += WIDTH_BYTES
    (sig_len,) = struct.unpack_from(">I", data, pos)
    pos += 4
    if len(data) != pos + sig_len:
        raise MalformedSignature("inner signature length mismatch")
    return IncrementalSignature(params, chain, mu, length_blocks, data[pos:])
