"""Agreement-set systems and the bad-tuple counting machinery.

A tuple (a_1, ..., a_n) of distinct positions in [m] is *bad* for sets
I_1..I_{L+1} when some center beta and L+1 distinct codewords gamma_j agree
with beta at a_i for every i in I_j.  This module provides the overlap
weight condition, exhaustive bad-tuple counting at desk scale, the M and Z
index-set constructions, a rejection sampler for Z, and exact
arbitrary-precision verification of the final counting chain.

Positions are 1-based everywhere (matching the [n] and [m] conventions of
the rest of the package); beta is a full length-m word but only its values
at tuple positions ever matter, so the enumeration canonicalizes beta to
its restriction on the tuple.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, NamedTuple, Sequence

from .codes import Code, Word
from .errors import (
    BudgetExceeded,
    DuplicateTupleEntry,
    DuplicateWord,
    HypothesisUnmet,
    NotSubset,
    RetriesExhausted,
)

DEFAULT_COUNT_BUDGET = 10**8
DEFAULT_RETRY_CAP = 10**4


@dataclass(frozen=True)
class AgreementSystem:
    """Sets I_1..I_{L+1} inside [n] with the constants c and h.

    c >= 2 is required (the Z-set size bound divides by 2c - 2); the
    counting bound additionally assumes c >= 5, which the chain verifier
    reports as a hypothesis rather than enforcing here.
    """

    n: int
    L: int
    sets: tuple[frozenset[int], ...]
    c: int
    h: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.L < 0:
            raise ValueError(f"L must be >= 0, got {self.L}")
        if self.c < 2:
            raise ValueError(f"c must be >= 2, got {self.c}")
        if self.h < 0:
            raise ValueError(f"h must be >= 0, got {self.h}")
        sets = tuple(frozenset(int(i) for i in s) for s in self.sets)
        if len(sets) != self.L + 1:
            raise ValueError(f"expected {self.L + 1} sets, got {len(sets)}")
        for s in sets:
            for i in s:
                if not 1 <= i <= self.n:
                    raise ValueError(f"position {i} outside [1, {self.n}]")
        object.__setattr__(self, "sets", sets)


def system_to_json(sys_: AgreementSystem) -> dict:
    return {"n": sys_.n, "L": sys_.L, "I": [sorted(s) for s in sys_.sets]}


def system_from_json(data: dict, c: int, h: int) -> AgreementSystem:
    return AgreementSystem(n=int(data["n"]), L=int(data["L"]),
                           sets=tuple(frozenset(s) for s in data["I"]),
                           c=c, h=h)


def weight_condition(sys_: AgreementSystem) -> bool:
    """Exact check of the overlap weight: sum |I_j| - |union I_j| > 2chL."""
    total = sum(len(s) for s in sys_.sets)
    union = len(frozenset().union(*sys_.sets)) if sys_.sets else 0
    return total - union > 2 * sys_.c * sys_.h * sys_.L


def compute_M(sys_: AgreementSystem) -> frozenset[int]:
    """Positions contained in at least two of the sets."""
    counts: dict[int, int] = {}
    for s in sys_.sets:
        for i in s:
            counts[i] = counts.get(i, 0) + 1
    return frozenset(i for i, k in counts.items() if k >= 2)


def is_bad(tup: Sequence[int], sys_: AgreementSystem, code: Code,
           beta: Sequence[int], words: Sequence[Word]) -> bool:
    """Direct check of the defining condition for one explicit witness."""
    if len(set(tup)) != len(tup):
        raise DuplicateTupleEntry(f"tuple entries must be distinct: {tup}")
    if len(tup) != sys_.n:
        raise ValueError(f"tuple length {len(tup)} != n = {sys_.n}")
    for a in tup:
        if not 1 <= a <= code.m:
            raise ValueError(f"tuple entry {a} outside [1, {code.m}]")
    ws = [tuple(w) for w in words]
    if len(set(ws)) != len(ws):
        raise DuplicateWord("codewords must be distinct")
    if len(ws) != sys_.L + 1:
        raise ValueError(f"expected {sys_.L + 1} codewords, got {len(ws)}")
    for w in ws:
        if w not in code:
            raise ValueError(f"{w} is not a codeword")
    if len(beta) != code.m:
        raise ValueError(f"beta length {len(beta)} != m = {code.m}")
    for j, I_j in enumerate(sys_.sets):
        w = ws[j]
        for i in I_j:
            col = tup[i - 1] - 1
            if w[col] != beta[col]:
                return False
    return True


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget: int):
        self.left = budget

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("bad-tuple enumeration budget exhausted")


def _tuple_is_bad(word_rows: Sequence[Word], cols_per_set: list[list[int]],
                  budget: _Budget) -> bool:
    """Feasibility of the badness condition for one fixed tuple.

    Backtracks over j choosing a codeword for each set while growing a
    partial beta on the constrained columns; any completed assignment
    yields a witness (beta extends arbitrarily elsewhere).
    """
    n_sets = len(cols_per_set)
    n_words = len(word_rows)
    if n_words < n_sets:
        return False
    beta: dict[int, int] = {}
    used = [False] * n_words

    def extend(j: int) -> bool:
        if j == n_sets:
            return True
        for w in range(n_words):
            if used[w]:
                continue
            budget.spend()
            row = word_rows[w]
            touched = []
            ok = True
            for col in cols_per_set[j]:
                v = row[col]
                cur = beta.get(col)
                if cur is None:
                    beta[col] = v
                    touched.append(col)
                elif cur != v:
                    ok = False
                    break
            if ok:
                used[w] = True
                if extend(j + 1):
                    return True
                used[w] = False
            for col in touched:
                del beta[col]
        return False

    return extend(0)


def count_bad_tuples(sys_: AgreementSystem, code: Code,
                     budget: int = DEFAULT_COUNT_BUDGET) -> int:
    """Exact number of distinct-entry tuples admitting a bad witness.

    Brute force intended for desk scale (roughly m <= 8, n <= 4, |C| <= 30,
    L <= 2); raises BudgetExceeded rather than returning a truncated count.
    """
    if sys_.n > code.m:
        return 0
    counter = _Budget(budget)
    count = 0
    sorted_sets = [sorted(s) for s in sys_.sets]
    for tup0 in permutations(range(code.m), sys_.n):
        cols = [[tup0[i - 1] for i in s] for s in sorted_sets]
        if _tuple_is_bad(code.words, cols, counter):
            count += 1
    return count


def bad_tuple_set(sys_: AgreementSystem, code: Code,
                  budget: int = DEFAULT_COUNT_BUDGET) -> set[tuple[int, ...]]:
    """The bad tuples themselves (1-based entries), for monotonicity checks."""
    if sys_.n > code.m:
        return set()
    counter = _Budget(budget)
    out = set()
    sorted_sets = [sorted(s) for s in sys_.sets]
    for tup0 in permutations(range(code.m), sys_.n):
        cols = [[tup0[i - 1] for i in s] for s in sorted_sets]
        if _tuple_is_bad(code.words, cols, counter):
            out.add(tuple(a + 1 for a in tup0))
    return out


def induction_monotonicity_check(sys_: AgreementSystem, code: Code,
                                 budget: int = DEFAULT_COUNT_BUDGET) -> bool:
    """Every tuple bad for I_1..I_{L+1} is bad for I_1..I_L.

    A False return would be a logical impossibility, i.e. an implementation
    bug, so callers treat it as a failure.
    """
    if sys_.L < 1:
        raise ValueError("need L >= 1 to drop the last set")
    reduced = AgreementSystem(n=sys_.n, L=sys_.L - 1, sets=sys_.sets[:-1],
                              c=sys_.c, h=sys_.h)
    full_bad = bad_tuple_set(sys_, code, budget)
    reduced_bad = bad_tuple_set(reduced, code, budget)
    return full_bad <= reduced_bad


# ---------------------------------------------------------------------------
# M / Z machinery
# ---------------------------------------------------------------------------

def verify_Z(sys_: AgreementSystem, M: frozenset[int], Z: Iterable[int]) -> bool:
    """Exact check of both Z postconditions.

    |Z| <= |M|/(2c-2) via cross-multiplication and |Z intersect I_t| > h
    for every t (strict).
    """
    Z = frozenset(Z)
    if not Z <= frozenset(M):
        raise NotSubset(f"Z {sorted(Z)} is not a subset of M")
    if len(Z) * (2 * sys_.c - 2) > len(M):
        return False
    return all(len(Z & I_t) > sys_.h for I_t in sys_.sets)


def sample_Z(sys_: AgreementSystem, M: frozenset[int], seed: int,
             max_retries: int = DEFAULT_RETRY_CAP) -> frozenset[int]:
    """Rejection-sample Z from M until both postconditions hold.

    Each element of M enters Z independently with probability exactly
    1/(2c-1).  The standing hypothesis |M intersect I_t| >= 2ch is checked
    up front; exhausting the retries signals parameters outside the
    effective regime (expected at desk scale when h is tiny) and raises.
    """
    M = frozenset(M)
    if M != compute_M(sys_):
        raise ValueError("M does not equal the set of positions in >= 2 sets")
    for t, I_t in enumerate(sys_.sets, start=1):
        if len(M & I_t) < 2 * sys_.c * sys_.h:
            raise HypothesisUnmet(
                f"|M & I_{t}| = {len(M & I_t)} < 2ch = {2 * sys_.c * sys_.h}")
    rng = random.Random(seed)
    den = 2 * sys_.c - 1
    ordered = sorted(M)
    for _ in range(max_retries):
        Z = frozenset(i for i in ordered if rng.randrange(den) == 0)
        if verify_Z(sys_, M, Z):
            return Z
    raise RetriesExhausted(f"no valid Z within {max_retries} attempts")


# ---------------------------------------------------------------------------
# exact counting chain
# ---------------------------------------------------------------------------

class ChainReport(NamedTuple):
    inequality_holds: bool
    hypotheses_hold: bool
    hyp_h_bound: bool
    hyp_c_ge_5: bool
    hyp_z_bound: bool
    hyp_m_lower: bool


def counting_chain_check(m: int, q: int, h: int, c: int, size_m: int,
                         size_z: int, n: int) -> ChainReport:
    """Exact verdict on m^|Z| q^|Z| h^(|M|-|Z|) m^(n-|M|) <= q^(-h/2) m^n.

    Evaluated in big integers as (LHS)^2 * q^h <= m^(2n), which handles odd
    h without any rounding.  Also reports the sufficient hypotheses used in
    the derivation: h <= q^(-1/c) m (as h^c q <= m^c), c >= 5,
    |Z|(2c-2) <= |M| and |M| >= 2ch.
    """
    if h < 1 or n < 1:
        raise ValueError(f"need h >= 1 and n >= 1, got h={h}, n={n}")
    if not 0 <= size_z <= size_m <= n <= m:
        raise ValueError(
            f"need 0 <= |Z| <= |M| <= n <= m, got {size_z}, {size_m}, {n}, {m}")
    if q < 2 or c < 1:
        raise ValueError(f"need q >= 2 and c >= 1, got q={q}, c={c}")
    lhs = m**size_z * q**size_z * h ** (size_m - size_z) * m ** (n - size_m)
    inequality = lhs * lhs * q**h <= m ** (2 * n)
    hyp_h = h**c * q <= m**c
    hyp_c = c >= 5
    hyp_z = size_z * (2 * c - 2) <= size_m
    hyp_m = size_m >= 2 * c * h
    return ChainReport(
        inequality_holds=inequality,
        hypotheses_hold=hyp_h and hyp_c and hyp_z and hyp_m,
        hyp_h_bound=hyp_h,
        hyp_c_ge_5=hyp_c,
        hyp_z_bound=hyp_z,
        hyp_m_lower=hyp_m,
    )


class ChainSweepResult(NamedTuple):
    points_checked: int
    full_points_covered: int
    violations: list[tuple[int, int, int, int, int, int]]


def chain_sweep(ms: Sequence[int], qs: Sequence[int], cs: Sequence[int],
                h_max: int, size_cap: int = 256) -> ChainSweepResult:
    """Sweep every hypothesis-respecting grid point and collect violations.

    The stated inequality carries the identical factor m^(2(n-|M|)) on both
    sides, so its truth value does not depend on n; each (m, q, c, h, |M|,
    |Z|) point is therefore checked once via the equivalent reduced
    comparison m^(2|Z|) q^(2|Z|+h) h^(2(|M|-|Z|)) <= m^(2|M|), and the
    result covers every admissible n in [|M|, min(size_cap, m)] exactly.
    ``counting_chain_check`` cross-validates sampled full points in the
    test suite.
    """
    violations: list[tuple[int, int, int, int, int, int]] = []
    checked = 0
    covered = 0
    for m in ms:
        for q in qs:
            for c in cs:
                for h in range(1, h_max + 1):
                    if h**c * q > m**c:  # hypothesis h <= q^(-1/c) m
                        continue
                    m_lo = 2 * c * h
                    m_hi = min(size_cap, m)
                    if m_lo > m_hi:
                        continue
                    mp2 = [m ** (2 * i) for i in range(m_hi + 1)]
                    hp2 = [h ** (2 * i) for i in range(m_hi + 1)]
                    z_top = m_hi // (2 * c - 2)
                    qp = [q**i for i in range(2 * z_top + h + 1)]
                    for size_m in range(m_lo, m_hi + 1):
                        n_count = min(size_cap, m) - size_m + 1
                        for size_z in range(size_m // (2 * c - 2) + 1):
                            checked += 1
                            covered += n_count
                            lhs = (mp2[size_z] * qp[2 * size_z + h]
                                   * hp2[size_m - size_z])
                            if lhs > mp2[size_m]:
                                violations.append((m, q, c, h, size_m, size_z))
    return ChainSweepResult(checked, covered, violations)
