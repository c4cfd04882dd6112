"""Shared fixtures and independent oracles.

The oracles here are deliberately naive re-implementations (full
enumeration, double loops) kept separate from the package's own search
paths, so each test checks two independent routes to the same value.
"""

from __future__ import annotations

import random
from itertools import product

import pytest

from punclab import codes, gf, rs


def oracle_min_distance(words) -> int:
    best = None
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            d = sum(1 for a, b in zip(words[i], words[j]) if a != b)
            if best is None or d < best:
                best = d
    return best


def oracle_ball_count(words, beta, t) -> int:
    return sum(1 for w in words
               if sum(1 for a, b in zip(w, beta) if a == b) >= t)


def oracle_max_ball_full(words, q, n, t) -> int:
    """Maximum ball count over every center in the full space [q]^n."""
    best = 0
    for beta in product(range(q), repeat=n):
        c = oracle_ball_count(words, beta, t)
        if c > best:
            best = c
    return best


def falling_factorial(m: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= m - i
    return out


def random_code(rng: random.Random, q: int, n: int, n_words: int) -> codes.Code:
    space = q**n
    n_words = min(n_words, space)
    seen = set()
    while len(seen) < n_words:
        seen.add(tuple(rng.randrange(q) for _ in range(n)))
    return codes.Code(q, n, sorted(seen))


def random_rs_punctured(rng: random.Random, q_spec: tuple[int, int], k: int,
                        n: int) -> codes.Code:
    """A materialized full RS code punctured to n random positions."""
    ctx = gf.field_create(*q_spec)
    base = rs.rs_materialize(rs.rs_full(ctx, k))
    plan = codes.sample_puncturing(base.m, n, rng.randrange(2**32))
    return codes.puncture(base, plan)


@pytest.fixture
def rng():
    return random.Random(0xC0DEC)
