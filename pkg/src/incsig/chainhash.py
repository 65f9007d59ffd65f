"""The d-wise chained set hash and its constant-cost delta recomputation.

A document of m blocks is covered by a random chain R_1..R_{m+d-1} of k-bit
sub-blocks.  Link i is R_i || ... || R_{i+d-1} || D_i (2b bits) and the hash
is the sum of the randomized links modulo 2^3200.  Because the combining
group is commutative, an edit only requires recomputing the links whose
sub-block window or document block it touches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .accumulator import Accumulator, acc_add, acc_sub, acc_zero
from .document import BlockDocument, EditOp, SchemeParams, apply_edit, payload_blocks
from .errors import (
    ChainLengthMismatch,
    FreshBlockCountMismatch,
    IndexOutOfRange,
)
from .randomizer import RandomizeFn


@dataclass(frozen=True)
class RandomChain:
    """The k-bit random sub-blocks R_1..R_{m+d-1}, stored as integers."""

    sub_blocks: Tuple[int, ...]
    params: SchemeParams

    def __post_init__(self):
        if self.sub_blocks and not (
            0 <= min(self.sub_blocks) and max(self.sub_blocks) < 1 << self.params.k
        ):
            raise ValueError(f"sub-blocks must fit in {self.params.k} bits")

    def __len__(self) -> int:
        return len(self.sub_blocks)

    @classmethod
    def _from_trusted(cls, sub_blocks: Tuple[int, ...], params: SchemeParams) -> "RandomChain":
        # Splices of an already-validated chain skip the O(m) range check.
        self = object.__new__(cls)
        object.__setattr__(self, "sub_blocks", sub_blocks)
        object.__setattr__(self, "params", params)
        return self


def _check_lengths(chain: RandomChain, doc: BlockDocument) -> None:
    want = doc.num_blocks + chain.params.d - 1
    if len(chain) != want:
        raise ChainLengthMismatch(
            f"chain has {len(chain)} sub-blocks, need {want} for {doc.num_blocks} blocks"
        )


def link_bytes(chain: RandomChain, doc: BlockDocument, i: int) -> bytes:
    """The 2b-bit link R_i || ... || R_{i+d-1} || D_i (1-based i)."""
    if not 1 <= i <= doc.num_blocks:
        raise IndexOutOfRange(f"link index {i} outside 1..{doc.num_blocks}")
    p = chain.params
    window = 0
    for r in chain.sub_blocks[i - 1 : i - 1 + p.d]:
        window = (window << p.k) | r
    return window.to_bytes(p.block_bytes, "big") + doc.blocks[i - 1]


def hash_full(
    chain: RandomChain,
    doc: BlockDocument,
    rf: RandomizeFn,
    counters=None,
) -> Accumulator:
    """Hash the whole document: sum of all m randomized links."""
    _check_lengths(chain, doc)
    mu = acc_zero()
    first = True
    for i in range(1, doc.num_blocks + 1):
        digest = rf(link_bytes(chain, doc, i))
        if counters is not None:
            counters.hash_evals += 1
        if first:
            mu = digest
            first = False
        else:
            mu = acc_add(mu, digest)
            if counters is not None:
                counters.adds += 1
    return mu


def _splice(seq: Tuple, at: int, remove: int, new: Sequence) -> Tuple:
    return seq[:at] + tuple(new) + seq[at + remove :]


def delta_update(
    old_mu: Accumulator,
    chain: RandomChain,
    doc: BlockDocument,
    op: EditOp,
    fresh: Sequence[int],
    rf: RandomizeFn,
    counters=None,
) -> Tuple[Accumulator, RandomChain]:
    """Recompute the hash after one edit, touching only the affected links.

    ``old_mu`` must equal hash_full(chain, doc).  ``fresh`` supplies one new
    k-bit sub-block per inserted payload block and must be empty for replace
    and delete.  Returns (mu', chain') with
    mu' == hash_full(chain', apply_edit(doc, op)).
    """
    new_doc = apply_edit(doc, op)  # also validates indices
    mu, chain2 = delta_update_into(old_mu, chain, doc, new_doc, op, fresh, rf, counters)
    return mu, chain2


def delta_update_into(
    old_mu: Accumulator,
    chain: RandomChain,
    doc: BlockDocument,
    new_doc: BlockDocument,
    op: EditOp,
    fresh: Sequence[int],
    rf: RandomizeFn,
    counters=None,
) -> Tuple[Accumulator, RandomChain]:
    """delta_update for callers that already hold apply_edit(doc, op)."""
    _check_lengths(chain, doc)
    p = chain.params
    m = doc.num_blocks
    d = p.d

    if op.kind == "insert":
        h = len(payload_blocks(op, p))
        if len(fresh) != h:
            raise FreshBlockCountMismatch(f"insert of {h} blocks needs {h} fresh sub-blocks")
        if fresh and not (0 <= min(fresh) and max(fresh) < 1 << p.k):
            raise ValueError(f"fresh sub-blocks must fit in {p.k} bits")
        i = op.i
        new_subs = _splice(chain.sub_blocks, i, 0, fresh)
        sub_old = range(max(1, i - d + 2), min(m, i) + 1)
        add_new = range(max(1, i - d + 2), i + h + 1)
    elif op.kind == "replace":
        h = len(payload_blocks(op, p))
        if fresh:
            raise FreshBlockCountMismatch("replace draws no fresh sub-blocks")
        new_subs = chain.sub_blocks
        sub_old = range(op.i, op.i + h)
        add_new = sub_old
    else:  # delete
        if fresh:
            raise FreshBlockCountMismatch("delete draws no fresh sub-blocks")
        i, h = op.i, op.j - op.i + 1
        # Deleting blocks i..j drops sub-blocks R_{i+1}..R_{i+h}.
        new_subs = _splice(chain.sub_blocks, i, h, ())
        sub_old = range(max(1, i - d + 2), min(m, i + h) + 1)
        add_new = range(max(1, i - d + 2), min(m - h, i) + 1)

    new_chain = RandomChain._from_trusted(new_subs, p)
    _check_lengths(new_chain, new_doc)

    mu = old_mu
    for t in sub_old:
        mu = acc_sub(mu, rf(link_bytes(chain, doc, t)))
        if counters is not None:
            counters.hash_evals += 1
            counters.subs += 1
    for t in add_new:
        mu = acc_add(mu, rf(link_bytes(new_chain, new_doc, t)))
        if counters is not None:
            counters.hash_evals += 1
            counters.adds += 1
    return mu, new_chain
