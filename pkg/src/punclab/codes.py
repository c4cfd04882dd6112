"""Generic q-ary block codes: words, distances, Hamming balls, puncturing.

A codeword is a plain tuple of alphabet indices in [0, q).  A ``Code`` is a
finite set of such words with cached exact-distance metadata.  Radii are
exact rationals throughout; threshold comparisons never touch floating
point.

Text formats (used by the CLI):

* code file: first line ``q m N``, then N lines of m space-separated
  symbol indices;
* puncturing plan: first line ``m n``, then one line with the n entries of
  the tuple (1-based positions).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    CodeTooLarge,
    LengthMismatch,
    NTooLarge,
    PlanMismatch,
    RadiusOutOfRange,
    TooFewCodewords,
)

Word = tuple[int, ...]

DEFAULT_WORD_CAP = 1 << 20


class Code:
    """Finite set of length-m words over a q-ary alphabet.

    Words are deduplicated preserving first occurrence; ``collapsed`` records
    whether any duplicates were dropped (puncturing uses this to flag
    degenerate restrictions).  Distance metadata is memoized, never mutated
    to a different value, so instances are safe to share between threads.
    """

    __slots__ = ("q", "m", "words", "collapsed", "cached_distance",
                 "distance_provenance", "_matrix", "_index")

    def __init__(self, q: int, m: int, words: Iterable[Sequence[int]],
                 word_cap: int = DEFAULT_WORD_CAP):
        if q < 2:
            raise ValueError(f"alphabet size must be >= 2, got {q}")
        if m < 1:
            raise ValueError(f"block length must be >= 1, got {m}")
        seen = {}
        total = 0
        for w in words:
            total += 1
            if total > word_cap:
                raise CodeTooLarge(f"more than {word_cap} words")
            tw = tuple(int(s) for s in w)
            if len(tw) != m:
                raise LengthMismatch(f"word {tw} has length {len(tw)}, expected {m}")
            for s in tw:
                if not 0 <= s < q:
                    raise ValueError(f"symbol {s} outside [0, {q})")
            if tw not in seen:
                seen[tw] = None
        self.q = q
        self.m = m
        self.words = tuple(seen)
        self.collapsed = len(self.words) < total
        self.cached_distance: int | None = None
        self.distance_provenance: str | None = None
        self._matrix = None
        self._index = None

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        if self._index is None:
            self._index = {w: i for i, w in enumerate(self.words)}
        return tuple(w) in self._index

    def __repr__(self):
        return f"Code(q={self.q}, m={self.m}, |C|={len(self.words)})"

    def matrix(self) -> np.ndarray:
        """Word rows as an int32 array (cached), for the kernels."""
        if self._matrix is None:
            self._matrix = np.array(self.words, dtype=np.int32).reshape(
                len(self.words), self.m)
        return self._matrix

    @property
    def h(self) -> int | None:
        """Distance defect m - d when the distance is known."""
        if self.cached_distance is None:
            return None
        return self.m - self.cached_distance

    def set_distance(self, d: int, provenance: str) -> None:
        if self.cached_distance is not None and self.cached_distance != d:
            raise ValueError(
                f"distance already cached as {self.cached_distance}, refusing {d}")
        self.cached_distance = d
        self.distance_provenance = provenance


@dataclass(frozen=True)
class PuncturingPlan:
    """Ordered distinct positions (1-based) selecting n out of m columns."""

    m: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.entries)) != len(self.entries):
            raise ValueError(f"plan entries must be distinct: {self.entries}")
        for a in self.entries:
            if not 1 <= a <= self.m:
                raise ValueError(f"plan entry {a} outside [1, {self.m}]")
        if len(self.entries) > self.m:
            raise NTooLarge(f"{len(self.entries)} positions from [{self.m}]")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.entries)


def hamming_distance(x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} != {len(y)}")
    return sum(1 for a, b in zip(x, y) if a != b)


def agreement(x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} != {len(y)}")
    return sum(1 for a, b in zip(x, y) if a == b)


def agreement_threshold(r: Fraction, n: int) -> int:
    """Smallest agreement count satisfying "at least (1-r)n positions"."""
    return math.ceil((1 - r) * n)


def check_radius(r) -> Fraction:
    r = Fraction(r)
    if not 0 < r < 1:
        raise RadiusOutOfRange(f"radius must lie in (0,1), got {r}")
    return r


def min_distance(code: Code) -> int:
    """Exact minimum pairwise Hamming distance, brute force over all pairs."""
    if len(code) < 2:
        raise TooFewCodewords("need at least two codewords")
    if code.cached_distance is not None and code.distance_provenance == "verified":
        return code.cached_distance
    d = kernels.pairwise_min_distance(code.matrix())
    code.set_distance(d, "verified")
    return d


def ball_member(center: Sequence[int], word: Sequence[int], r) -> bool:
    """Whether word agrees with center on at least (1-r)n positions.

    Decided on exact rationals; when (1-r)n is an integer the boundary
    counts as inside.
    """
    r = check_radius(r)
    a = agreement(center, word)
    return Fraction(a) >= (1 - r) * len(center)


def puncture(code: Code, plan: PuncturingPlan) -> Code:
    """Restrict every word to the plan's positions, in plan order.

    Set semantics: equal restrictions collapse to one word and the result's
    ``collapsed`` flag records that.  Cached distance is not carried over.
    """
    if plan.m != code.m:
        raise PlanMismatch(f"plan is for length {plan.m}, code has length {code.m}")
    cols = [a - 1 for a in plan.entries]
    return Code(code.q, plan.n, (tuple(w[c] for c in cols) for w in code.words))


def identity_plan(m: int) -> PuncturingPlan:
    return PuncturingPlan(m, tuple(range(1, m + 1)))


def sample_puncturing(m: int, n: int, seed: int) -> PuncturingPlan:
    """Uniform ordered n-tuple of distinct positions from [m].

    Partial Fisher-Yates shuffle driven by ``random.Random(seed)``, so the
    plan is a deterministic function of (m, n, seed) and uniform over all
    m(m-1)...(m-n+1) ordered tuples.
    """
    if n > m:
        raise NTooLarge(f"cannot pick {n} distinct positions from [{m}]")
    rng = random.Random(seed)
    pool = list(range(1, m + 1))
    for i in range(n):
        j = rng.randrange(i, m)
        pool[i], pool[j] = pool[j], pool[i]
    return PuncturingPlan(m, tuple(pool[:n]))


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def code_to_text(code: Code) -> str:
    lines = [f"{code.q} {code.m} {len(code.words)}"]
    lines.extend(" ".join(str(s) for s in w) for w in code.words)
    return "\n".join(lines) + "\n"


def code_from_text(text: str) -> Code:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    q, m, n_words = (int(tok) for tok in lines[0].split())
    words = [tuple(int(tok) for tok in ln.split()) for ln in lines[1 : 1 + n_words]]
    if len(words) != n_words:
        raise ValueError(f"expected {n_words} words, file has {len(words)}")
    return Code(q, m, words)


def plan_to_text(plan: PuncturingPlan) -> str:
    head = f"{plan.m} {plan.n}"
    return head + "\n" + " ".join(str(a) for a in plan.entries) + "\n"


def plan_from_text(text: str) -> PuncturingPlan:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    m, n = (int(tok) for tok in lines[0].split())
    entries = tuple(int(tok) for tok in lines[1].split())
    if len(entries) != n:
        raise ValueError(f"expected {n} entries, got {len(entries)}")
    return PuncturingPlan(m, entries)
