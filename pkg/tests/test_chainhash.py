import random

import pytest

from incsig import BlockDocument, EditOp, RandomChain, SchemeParams, apply_edit
from incsig.accumulator import acc_add, acc_zero
from incsig.bench import OpCounters
from incsig.chainhash import delta_update, hash_full, link_bytes
from incsig.errors import (
    ChainLengthMismatch,
    FreshBlockCountMismatch,
    IndexOutOfRange,
)
from conftest import SMALL_PARAMS, make_rf


def random_doc(params, m, rng):
    blocks = tuple(rng.randbytes(params.block_bytes) for _ in range(m))
    return BlockDocument(blocks, m * params.b, params)


def random_chain(params, m, rng):
    return RandomChain(
        tuple(rng.getrandbits(params.k) for _ in range(m + params.d - 1)), params
    )


def brute_force_hash(chain, doc, rf):
    """Independent oracle: materialize every link explicitly, sum with ints."""
    p = chain.params
    total = 0
    for i in range(doc.num_blocks):
        bits = 0
        for r in chain.sub_blocks[i : i + p.d]:
            bits = (bits << p.k) | r
        link = bits.to_bytes(p.b // 8, "big") + doc.blocks[i]
        total = (total + int.from_bytes(rf(link).to_bytes(), "big")) % (1 << 3200)
    return total


class TestLinkBytes:
    def test_d2(self):
        p = SMALL_PARAMS[2]
        doc = BlockDocument((b"\x01\x02",), 16, p)
        chain = RandomChain((0xAA, 0xBB), p)
        assert link_bytes(chain, doc, 1) == b"\xaa\xbb\x01\x02"

    def test_d3(self):
        p = SMALL_PARAMS[3]
        doc = BlockDocument((b"\x01\x02\x03", b"\x04\x05\x06"), 48, p)
        chain = RandomChain((1, 2, 3, 4), p)
        assert link_bytes(chain, doc, 2) == b"\x02\x03\x04\x04\x05\x06"

    def test_out_of_range(self):
        p = SMALL_PARAMS[2]
        doc = BlockDocument((b"\x01\x02",), 16, p)
        chain = RandomChain((1, 2), p)
        with pytest.raises(IndexOutOfRange):
            link_bytes(chain, doc, 0)
        with pytest.raises(IndexOutOfRange):
            link_bytes(chain, doc, 2)


class TestHashFull:
    def test_single_block_is_single_link(self):
        p = SMALL_PARAMS[2]
        rf = make_rf(p)
        rng = random.Random(1)
        doc = random_doc(p, 1, rng)
        chain = random_chain(p, 1, rng)
        assert hash_full(chain, doc, rf) == rf(link_bytes(chain, doc, 1))

    def test_matches_brute_force_oracle(self):
        rng = random.Random(2)
        for d, p in SMALL_PARAMS.items():
            rf = make_rf(p)
            doc = random_doc(p, 6, rng)
            chain = random_chain(p, 6, rng)
            assert hash_full(chain, doc, rf).value == brute_force_hash(chain, doc, rf)

    def test_order_independent(self):
        p = SMALL_PARAMS[4]
        rf = make_rf(p)
        rng = random.Random(3)
        doc = random_doc(p, 8, rng)
        chain = random_chain(p, 8, rng)
        digests = [rf(link_bytes(chain, doc, i + 1)) for i in range(8)]
        reference = hash_full(chain, doc, rf)
        for _ in range(5):
            rng.shuffle(digests)
            total = acc_zero()
            for dg in digests:
                total = acc_add(total, dg)
            assert total == reference

    def test_chain_length_checked(self):
        p = SMALL_PARAMS[2]
        rng = random.Random(4)
        doc = random_doc(p, 3, rng)
        with pytest.raises(ChainLengthMismatch):
            hash_full(random_chain(p, 2, rng), doc, make_rf(p))

    def test_block_swap_changes_hash(self):
        # Distinct sub-blocks bind block order; swapping two document
        # blocks must move the digest.
        p = SMALL_PARAMS[2]
        rf = make_rf(p)
        rng = random.Random(5)
        for _ in range(100):
            doc = random_doc(p, 3, rng)
            if len(set(doc.blocks)) < 3:
                continue
            subs = tuple(rng.sample(range(1 << p.k), 4))
            chain = RandomChain(subs, p)
            swapped = BlockDocument(
                (doc.blocks[1], doc.blocks[0], doc.blocks[2]), doc.original_bit_length, p
            )
            assert hash_full(chain, doc, rf) != hash_full(chain, swapped, rf)


def random_op(doc, rng, multi=True):
    m = doc.num_blocks
    nbytes = doc.params.block_bytes
    kind = rng.choice(["insert", "replace", "delete"] if m > 1 else ["insert"])
    if kind == "insert":
        h = rng.randint(1, 3) if multi else 1
        return EditOp.insert(rng.randint(0, m - 1), rng.randbytes(h * nbytes))
    if kind == "replace":
        h = rng.randint(1, min(3, m - 1)) if multi else 1
        i = rng.randint(1, m - h)
        return EditOp.replace(i, rng.randbytes(h * nbytes))
    i = rng.randint(1, m - 1)
    j = rng.randint(i, m - 1) if multi else i
    return EditOp.delete(i, j)


def run_delta(doc, chain, op, rf, rng, counters=None):
    if op.kind == "insert":
        fresh = tuple(
            rng.getrandbits(doc.params.k)
            for _ in range(len(op.payload) // doc.params.block_bytes)
        )
    else:
        fresh = ()
    mu = hash_full(chain, doc, rf)
    return delta_update(mu, chain, doc, op, fresh, rf, counters=counters)


class TestDeltaUpdate:
    @pytest.mark.parametrize("d", [2, 3, 4, 8])
    def test_matches_from_scratch(self, d):
        p = SMALL_PARAMS[d]
        rf = make_rf(p)
        rng = random.Random(100 + d)
        for _ in range(150):
            m = rng.randint(1, 24)
            doc = random_doc(p, m, rng)
            chain = random_chain(p, m, rng)
            op = random_op(doc, rng)
            mu2, chain2 = run_delta(doc, chain, op, rf, rng)
            doc2 = apply_edit(doc, op)
            assert mu2 == hash_full(chain2, doc2, rf)

    @pytest.mark.parametrize("d", [2, 4, 8])
    def test_boundary_positions(self, d):
        p = SMALL_PARAMS[d]
        rf = make_rf(p)
        rng = random.Random(200 + d)
        m = 12
        ops = [EditOp.insert(0, b"\x11" * p.block_bytes)]
        ops += [EditOp.insert(i, b"\x22" * p.block_bytes) for i in (1, m - 1)]
        ops += [EditOp.replace(i, b"\x33" * p.block_bytes) for i in (1, m - 1)]
        ops += [EditOp.delete(1, 1), EditOp.delete(m - 1, m - 1), EditOp.delete(1, m - 1)]
        for op in ops:
            doc = random_doc(p, m, rng)
            chain = random_chain(p, m, rng)
            mu2, chain2 = run_delta(doc, chain, op, rf, rng)
            assert mu2 == hash_full(chain2, apply_edit(doc, op), rf)

    @pytest.mark.parametrize("d", [2, 4, 8])
    def test_interior_costs_match_closed_forms(self, d):
        p = SMALL_PARAMS[d]
        rf = make_rf(p)
        rng = random.Random(300 + d)
        m = 4 * d
        i = 2 * d  # interior: d-1 <= i <= m-d
        cases = {
            EditOp.insert(i, b"\x55" * p.block_bytes): (2 * d - 1, d, d - 1),
            EditOp.replace(i, b"\x55" * p.block_bytes): (2, 1, 1),
            EditOp.delete(i, i): (2 * d - 1, d - 1, d),
        }
        for op, want in cases.items():
            doc = random_doc(p, m, rng)
            chain = random_chain(p, m, rng)
            counters = OpCounters()
            run_delta(doc, chain, op, rf, rng, counters=counters)
            assert counters.as_tuple() == want

    def test_replace_cost_independent_of_d_and_m(self):
        for d in (2, 8):
            p = SMALL_PARAMS[d]
            rf = make_rf(p)
            rng = random.Random(42)
            for m in (3, 40):
                doc = random_doc(p, m, rng)
                chain = random_chain(p, m, rng)
                counters = OpCounters()
                run_delta(doc, chain, EditOp.replace(1, b"\x01" * p.block_bytes), rf, rng, counters)
                assert counters.as_tuple() == (2, 1, 1)

    def test_fresh_count_mismatch(self):
        p = SMALL_PARAMS[2]
        rf = make_rf(p)
        rng = random.Random(6)
        doc = random_doc(p, 4, rng)
        chain = random_chain(p, 4, rng)
        mu = hash_full(chain, doc, rf)
        with pytest.raises(FreshBlockCountMismatch):
            delta_update(mu, chain, doc, EditOp.insert(1, b"\x00\x00"), (), rf)
        with pytest.raises(FreshBlockCountMismatch):
            delta_update(mu, chain, doc, EditOp.delete(1, 1), (7,), rf)

    def test_multiblock_insert_cost_linear(self):
        d = 4
        p = SMALL_PARAMS[d]
        rf = make_rf(p)
        rng = random.Random(8)
        m = 20
        for h in (1, 2, 5):
            doc = random_doc(p, m, rng)
            chain = random_chain(p, m, rng)
            counters = OpCounters()
            run_delta(doc, chain, EditOp.insert(10, bytes(h * p.block_bytes)), rf, rng, counters)
            assert counters.as_tuple() == (2 * d - 2 + h, d - 1 + h, d - 1)
