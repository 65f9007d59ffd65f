"""Closed-form security bounds and the cost model, in exact rationals.

The unforgeability bounds add a birthday term over the random chain to the
assumed advantages against the set hash and the inner signature scheme.
Denominators like 2^385 rule out floating point; everything is a Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .document import SchemeParams

RationalLike = Fraction  # also accepts int in practice

ONE = Fraction(1)


@dataclass(frozen=True)
class AttackBudget:
    """Adversary resources: oracle query counts and assumed primitive advantages."""

    q_s: int  # signature queries
    q_i: int  # update queries
    n_max: int  # maximum document length in blocks
    eps_hash: Fraction = Fraction(0)  # set-collision advantage of the hash
    eps_sig: Fraction = Fraction(0)  # forgery advantage against the backend

    def __post_init__(self):
        if min(self.q_s, self.q_i, self.n_max) < 0:
            raise ValueError("query counts must be nonnegative")
        for eps in (self.eps_hash, self.eps_sig):
            if not 0 <= eps <= 1:
                raise ValueError("advantages must lie in [0, 1]")


def bound_pair_chained(budget: AttackBudget, b: int) -> Fraction:
    """Forgery-advantage bound for the pair-chained scheme (d = 2, k = b/2).

    (q^2 - q) / 2^(b/2 + 1) + eps_hash + eps_sig with
    q = q_s (n_max + 1) + q_i, clamped to 1.
    """
    q = budget.q_s * (budget.n_max + 1) + budget.q_i
    bound = (
        Fraction(q * q - q, 2 ** (b // 2 + 1)) + budget.eps_hash + budget.eps_sig
    )
    return min(bound, ONE)


def bound_d_chained(budget: AttackBudget, b: int, d: int) -> Fraction:
    """Forgery-advantage bound for the d-wise chained scheme.

    (q_s + q_i)(n_max + 1)^2 / 2^((d-1)b/2 + 1) + eps_hash + eps_sig,
    clamped to 1.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    bound = (
        Fraction(
            (budget.q_s + budget.q_i) * (budget.n_max + 1) ** 2,
            2 ** ((d - 1) * b // 2 + 1),
        )
        + budget.eps_hash
        + budget.eps_sig
    )
    return min(bound, ONE)


def hash_queries_pair_chained(budget: AttackBudget) -> int:
    """Random-function query count q_h attributed to the reduction (d = 2)."""
    return budget.q_s * budget.n_max + 3 * budget.q_i


def hash_queries_d_chained(budget: AttackBudget, d: int) -> int:
    """Random-function query count q_h attributed to the reduction (general d)."""
    return budget.q_s * budget.n_max + (2 * d - 1) * budget.q_i


Counters = Tuple[int, int, int]  # (hash evals, additions, subtractions)


@dataclass(frozen=True)
class CostModel:
    """Predicted operation counts for signing and single-block updates."""

    sign: Counters
    overhead_bits: int  # chain size beyond mu, l and the inner signature
    insert: Counters
    replace: Counters
    delete: Counters


def cost_model(params: SchemeParams, m: int) -> CostModel:
    """Closed-form costs for an m-block document under (b, k, d)."""
    if m < 1:
        raise ValueError("document must have at least one block")
    d, k = params.d, params.k
    return CostModel(
        sign=(m, m - 1, 0),
        overhead_bits=(m + d - 1) * k,
        insert=(2 * d - 1, d, d - 1),
        replace=(2, 1, 1),
        delete=(2 * d - 1, d - 1, d),
    )
