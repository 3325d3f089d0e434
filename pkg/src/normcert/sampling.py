"""Seeded random vectors for the demos and the acceptance suite."""

from __future__ import annotations

import random
from fractions import Fraction

from .finsupp import ZERO, FinSuppVec


def random_rational(rng: random.Random, max_num: int = 9, max_den: int = 6, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        if x or not nonzero:
            return x


def random_vec(rng: random.Random, max_index: int = 12, max_terms: int = 6) -> FinSuppVec:
    k = rng.randint(1, max_terms)
    idx = rng.sample(range(1, max_index + 1), k)
    return FinSuppVec((i, random_rational(rng, nonzero=True)) for i in idx)


def random_triples(seed: int, count: int, max_index: int = 12) -> list[tuple[FinSuppVec, FinSuppVec, Fraction]]:
    """``(u, v, lam)`` triples; some ``v`` are nonnegative multiples of ``u``
    and some vectors are zero so the equality branches get exercised."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        u = random_vec(rng, max_index)
        roll = rng.random()
        if roll < 0.1:
            v = Fraction(rng.randint(0, 5), rng.randint(1, 3)) * u
        elif roll < 0.15:
            v = ZERO
        else:
            v = random_vec(rng, max_index)
        out.append((u, v, random_rational(rng)))
    return out


def random_vectors(seed: int, count: int, max_index: int = 12) -> list[FinSuppVec]:
    rng = random.Random(seed)
    return [random_vec(rng, max_index) for _ in range(count)]


def random_pairs(seed: int, count: int, max_index: int = 12) -> list[tuple[FinSuppVec, FinSuppVec]]:
    rng = random.Random(seed)
    return [(random_vec(rng, max_index), random_vec(rng, max_index)) for _ in range(count)]
