"""Operation counters and a wall-clock harness for the length-independence claim.

Counters are threaded through the hash engine as an optional argument, so
the production path pays nothing; every randomize call and group operation
in a counted run increments them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .backends import HmacTestBackend
from .document import BlockDocument, EditOp, SchemeParams
from .randomizer import RandomizeFn
from .scheme import sign, update


@dataclass
class OpCounters:
    hash_evals: int = 0
    adds: int = 0
    subs: int = 0

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.hash_evals, self.adds, self.subs)


def _random_doc(params: SchemeParams, m: int, rng: random.Random) -> BlockDocument:
    blocks = tuple(rng.randbytes(params.block_bytes) for _ in range(m))
    return BlockDocument(blocks, m * params.b, params)


def measure_sign(
    params: SchemeParams, m: int, seed: int = 0
) -> Tuple[OpCounters, float]:
    """Counters and wall time for one signature of an m-block document."""
    rng = random.Random(seed)
    backend = HmacTestBackend()
    sk, _ = backend.keygen(b"bench")
    doc = _random_doc(params, m, rng)
    rf = RandomizeFn.for_params(params)
    counters = OpCounters()
    start = time.perf_counter()
    sign(sk, doc, backend, rf, rng=rng, counters=counters)
    return counters, time.perf_counter() - start


def _interior_op(params: SchemeParams, m: int, op_kind: str, rng: random.Random) -> EditOp:
    i = m // 2
    if op_kind == "insert":
        return EditOp.insert(i, rng.randbytes(params.block_bytes))
    if op_kind == "replace":
        return EditOp.replace(i, rng.randbytes(params.block_bytes))
    if op_kind == "delete":
        return EditOp.delete(i, i)
    raise ValueError(f"unknown op kind {op_kind!r}")


def measure_update(
    params: SchemeParams, m: int, op_kind: str, seed: int = 0
) -> Tuple[OpCounters, float]:
    """Counters and wall time for one interior single-block update at m // 2."""
    if m < 2 * params.d + 2:
        raise ValueError(f"need m >= {2 * params.d + 2} for an interior index")
    rng = random.Random(seed)
    backend = HmacTestBackend()
    sk, _ = backend.keygen(b"bench")
    doc = _random_doc(params, m, rng)
    rf = RandomizeFn.for_params(params)
    sig = sign(sk, doc, backend, rf, rng=rng)
    op = _interior_op(params, m, op_kind, rng)
    counters = OpCounters()
    start = time.perf_counter()
    update(sk, doc, sig, op, backend, rf, rng=rng, counters=counters)
    return counters, time.perf_counter() - start


@dataclass
class SpeedupRow:
    m: int
    sign_counters: OpCounters
    update_counters: OpCounters
    sign_seconds: float
    update_seconds: float

    @property
    def wall_ratio(self) -> float:
        return self.sign_seconds / max(self.update_seconds, 1e-12)

    @property
    def eval_ratio(self) -> float:
        return self.sign_counters.hash_evals / self.update_counters.hash_evals


def speedup_report(
    params: SchemeParams, m_values: Sequence[int], op_kind: str = "replace"
) -> List[SpeedupRow]:
    """Full-sign vs. single-update cost for each document size."""
    rows = []
    for m in m_values:
        sign_counters, sign_seconds = measure_sign(params, m)
        update_counters, update_seconds = measure_update(params, m, op_kind)
        rows.append(
            SpeedupRow(m, sign_counters, update_counters, sign_seconds, update_seconds)
        )
    return rows


def format_report(rows: Sequence[SpeedupRow]) -> str:
    """Aligned plain-text table."""
    lines = [
        f"{'m':>8}  {'sign (h,a,s)':>16}  {'update (h,a,s)':>16}  "
        f"{'sign s':>10}  {'update s':>10}  {'ratio':>8}"
    ]
    for r in rows:
        lines.append(
            f"{r.m:>8}  {str(r.sign_counters.as_tuple()):>16}  "
            f"{str(r.update_counters.as_tuple()):>16}  "
            f"{r.sign_seconds:>10.6f}  {r.update_seconds:>10.6f}  {r.wall_ratio:>8.1f}"
        )
    return "\n".join(lines)


def format_csv(rows: Sequence[SpeedupRow]) -> str:
    """Machine-readable comma-separated rows."""
    lines = [
        "m,sign_hash_evals,sign_adds,sign_subs,"
        "update_hash_evals,update_adds,update_subs,sign_seconds,update_seconds,wall_ratio"
    ]
    for r in rows:
        lines.append(
            f"{r.m},{r.sign_counters.hash_evals},{r.sign_counters.adds},"
            f"{r.sign_counters.subs},{r.update_counters.hash_evals},"
            f"{r.update_counters.adds},{r.update_counters.subs},"
            f"{r.sign_seconds:.6f},{r.update_seconds:.6f},{r.wall_ratio:.2f}"
        )
    return "\n".join(lines)
