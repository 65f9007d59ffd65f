"""The original pair-chaining hash and its structural collision patterns.

Kept as an executable demonstration of why the chained links must carry
random sub-blocks: pair-chaining over the document blocks alone collides
on simple block permutations regardless of the randomize function used.
Messages are supplied pre-blocked; the (broken) original padding is omitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable, List, Sequence, Tuple

from .errors import TooShort
from .randomizer import RandomizeFn

DIGEST_BITS = 160
_DIGEST_MOD = 1 << DIGEST_BITS

Rf160 = Callable[[bytes], int]


def rf160_from(rf: RandomizeFn) -> Rf160:
    """Truncate a full-width randomizer to the legacy 160-bit output."""

    def rf160(data: bytes) -> int:
        return int.from_bytes(rf(data).to_bytes()[: DIGEST_BITS // 8], "big")

    return rf160


def default_rf160() -> Rf160:
    return rf160_from(RandomizeFn(domain_tag=b"PCIHF-R-v1"))


def _check_blocks(blocks: Sequence[bytes]) -> None:
    if len(blocks) < 2:
        raise TooShort("pair chaining needs at least 2 blocks")


def pcihf_hash(blocks: Sequence[bytes], rf160: Rf160) -> int:
    """Sum of randomized consecutive pairs, modulo 2^160."""
    _check_blocks(blocks)
    mu = 0
    for left, right in zip(blocks, blocks[1:]):
        mu = (mu + rf160(left + right)) % _DIGEST_MOD
    return mu


def pcihf_xor_hash(blocks: Sequence[bytes], rf160: Rf160) -> int:
    """XOR-combining variant; weaker still (repeated pairs cancel)."""
    _check_blocks(blocks)
    mu = 0
    for left, right in zip(blocks, blocks[1:]):
        mu ^= rf160(left + right)
    return mu


@dataclass(frozen=True)
class CollisionPair:
    label: str
    combiner: str  # "modular": collides under pcihf_hash; "xor": only under pcihf_xor_hash
    left: Tuple[bytes, ...]
    right: Tuple[bytes, ...]


def collision_corpus() -> List[CollisionPair]:
    """The five colliding message-pair patterns, loaded from the fixture file."""
    text = resources.files("incsig.data").joinpath("collision_corpus.txt").read_text()
    corpus = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        label, combiner, left, right = (field.strip() for field in line.split("|"))
        corpus.append(
            CollisionPair(
                label,
                combiner,
                tuple(bytes.fromhex(h) for h in left.split()),
                tuple(bytes.fromhex(h) for h in right.split()),
            )
        )
    return corpus
