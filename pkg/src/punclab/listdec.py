"""Exact deciders for (r, L)-list-decodability.

Two independent routes with provably equal verdicts:

* ``decide_exhaustive`` walks every center in a reduced space (per position
  the symbols appearing in that column plus, when the column is not
  saturated, one sentinel symbol matching nothing) and looks for a ball
  holding more than L codewords.  Replacing a center symbol absent from a
  column by any other absent symbol changes no agreement count, so the
  reduction is exact.
* ``decide_witness_search`` enumerates (L+1)-subsets of codewords in colex
  order and asks a backtracking solver whether some center gives every
  member at least t agreements; the first feasible subset (lowest colex
  index) is reported.

Threshold semantics: "at least (1-r)n positions" is agreement >= t with
t = ceil((1-r)n) on exact rationals, equality included when (1-r)n is
integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .codes import Code, Word, check_radius
from .errors import BudgetExceeded, LengthMismatch, SearchSpaceTooLarge

DEFAULT_SPACE_CAP = 1 << 24
DEFAULT_SUBSET_BUDGET = 10**6


@dataclass(frozen=True)
class ListDecParams:
    """Radius (exact rational), list size, block length; t is derived."""

    r: Fraction
    L: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "r", check_radius(self.r))
        if self.L < 1:
            raise ValueError(f"list size must be >= 1, got {self.L}")
        if self.n < 1:
            raise ValueError(f"block length must be >= 1, got {self.n}")

    @property
    def t(self) -> int:
        """Smallest integer agreement count >= (1-r)n."""
        return math.ceil((1 - self.r) * self.n)


@dataclass(frozen=True)
class Witness:
    """A center and L+1 distinct codewords inside its ball."""

    center: Word
    members: tuple[Word, ...]

    def agreements(self) -> tuple[int, ...]:
        return tuple(sum(1 for a, b in zip(self.center, w) if a == b)
                     for w in self.members)


@dataclass(frozen=True)
class SearchStats:
    nodes: int = 0
    subsets: int = 0


@dataclass(frozen=True)
class Decision:
    decodable: bool
    witness: Witness | None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def verdict(self) -> str:
        return "decodable" if self.decodable else "witness"


def verify_witness(w: Witness, t: int) -> bool:
    """Re-check a witness: members pairwise distinct, each agreement >= t."""
    if len(set(w.members)) != len(w.members):
        return False
    return all(a >= t for a in w.agreements())


def ball_count(code: Code, center: Sequence[int], params: ListDecParams) -> int:
    """Exact number of codewords within radius r of the center."""
    if len(center) != code.m or params.n != code.m:
        raise LengthMismatch(
            f"center length {len(center)}, params n {params.n}, code length {code.m}")
    return kernels.ball_count(code.matrix(), np.asarray(center, dtype=np.int32),
                              params.t)


def colex_combinations(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of range(n) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for last in range(k - 1, n):
        for rest in colex_combinations(last, k - 1):
            yield rest + (last,)


def _center_space(mat: np.ndarray, q: int):
    """Flattened candidate tables for the reduced center space.

    Per position: the symbols present in that column in ascending order,
    then (if the column misses some symbol) the smallest absent symbol as a
    sentinel matching nothing.
    """
    n = mat.shape[1]
    cand_sym: list[int] = []
    cand_off = [0]
    match_idx: list[int] = []
    match_off = [0]
    space = 1
    for pos in range(n):
        col = mat[:, pos]
        present = sorted({int(s) for s in col})
        cands = list(present)
        present_set = set(present)
        sentinel = next((s for s in range(q) if s not in present_set), None)
        if sentinel is not None:
            cands.append(sentinel)
        space *= len(cands)
        for s in cands:
            cand_sym.append(s)
            match_idx.extend(int(r) for r in np.nonzero(col == s)[0])
            match_off.append(len(match_idx))
        cand_off.append(len(cand_sym))
    return cand_sym, cand_off, match_idx, match_off, space


def decide_exhaustive(code: Code, params: ListDecParams, *,
                      space_cap: int = DEFAULT_SPACE_CAP,
                      node_budget: int | None = None) -> Decision:
    """Walk the reduced center space; return the first over-full ball found."""
    if params.n != code.m:
        raise LengthMismatch(f"params n={params.n} but code length is {code.m}")
    if params.L >= len(code):
        return Decision(True, None)  # a ball can never exceed |C|
    mat = code.matrix()
    cs, co, mi, mo, space = _center_space(mat, code.q)
    if space > space_cap:
        raise SearchSpaceTooLarge(f"center space {space} exceeds cap {space_cap}")
    t = params.t
    status, path, nodes = kernels.dfs_find_center(
        mat, t, params.L + 1, cs, co, mi, mo,
        -1 if node_budget is None else node_budget)
    stats = SearchStats(nodes=nodes)
    if status == 2:
        raise BudgetExceeded(f"exhausted node budget {node_budget} after {nodes} nodes")
    if status == 0:
        return Decision(True, None, stats)
    center = tuple(int(s) for s in path)
    agr = (mat == path[None, :]).sum(axis=1)
    rows = np.nonzero(agr >= t)[0][: params.L + 1]
    members = tuple(code.words[int(i)] for i in rows)
    return Decision(False, Witness(center, members), stats)


def max_ball_count(code: Code, t: int, *, space_cap: int = DEFAULT_SPACE_CAP,
                   node_budget: int | None = None) -> int:
    """Exact max over centers of |C intersect ball| at agreement threshold t."""
    mat = code.matrix()
    cs, co, mi, mo, space = _center_space(mat, code.q)
    if space > space_cap:
        raise SearchSpaceTooLarge(f"center space {space} exceeds cap {space_cap}")
    status, best, _nodes = kernels.dfs_max_ball(
        mat, t, cs, co, mi, mo, -1 if node_budget is None else node_budget)
    if status == 2:
        raise BudgetExceeded(f"exhausted node budget {node_budget}")
    return best


def _backtrack_tables(mat: np.ndarray):
    """Candidate tables for the feasibility solver, most-constrained first.

    Positions are processed in descending order of their largest
    single-symbol multiplicity (ties by index); the verdict is
    order-independent, the ordering only helps pruning.
    """
    n_words, n = mat.shape
    mult = []
    for pos in range(n):
        col = mat[:, pos]
        _, counts = np.unique(col, return_counts=True)
        mult.append(int(counts.max()))
    order = sorted(range(n), key=lambda p: (-mult[p], p))
    cand_sym: list[int] = []
    cand_off = [0]
    match_idx: list[int] = []
    match_off = [0]
    for pos in order:
        col = mat[:, pos]
        for s in sorted({int(v) for v in col}):
            cand_sym.append(s)
            match_idx.extend(int(r) for r in np.nonzero(col == s)[0])
            match_off.append(len(match_idx))
        cand_off.append(len(cand_sym))
    return order, cand_sym, cand_off, match_idx, match_off


def _materialize_center(mat: np.ndarray, q: int, order: list[int],
                        assign: np.ndarray) -> Word:
    """Turn a credit assignment into a concrete center word.

    "No credit" positions take the smallest symbol absent from that column;
    a saturated column gets its smallest symbol instead, which only adds
    agreements and cannot invalidate the assignment.
    """
    n = mat.shape[1]
    center = [0] * n
    for depth, pos in enumerate(order):
        s = int(assign[depth])
        if s < 0:
            col_syms = {int(v) for v in mat[:, pos]}
            s = next((v for v in range(q) if v not in col_syms), min(col_syms))
        center[pos] = s
    return tuple(center)


def _center_exists_impl(words: Sequence[Word], t: int, q: int):
    mat = np.array(words, dtype=np.int32)
    order, cs, co, mi, mo = _backtrack_tables(mat)
    found, assign, nodes = kernels.backtrack_center(mat, t, cs, co, mi, mo)
    if not found:
        return None, nodes
    return _materialize_center(mat, q, order, assign), nodes


def center_exists(words: Sequence[Word], t: int, q: int) -> Word | None:
    """A center giving every word >= t agreements, or None if impossible."""
    if len(words) < 2:
        raise ValueError("need at least two words")
    lengths = {len(w) for w in words}
    if len(lengths) != 1:
        raise LengthMismatch(f"words of differing lengths: {sorted(lengths)}")
    center, _ = _center_exists_impl(words, t, q)
    return center


def decide_witness_search(code: Code, params: ListDecParams, *,
                          subset_budget: int = DEFAULT_SUBSET_BUDGET) -> Decision:
    """Search (L+1)-subsets of codewords for one sharing a feasible center.

    Budget exhaustion raises: an incomplete exact search never reports a
    verdict.
    """
    if params.n != code.m:
        raise LengthMismatch(f"params n={params.n} but code length is {code.m}")
    if params.L >= len(code):
        return Decision(True, None)
    t = params.t
    need = params.L + 1
    agr = kernels.agreements_matrix(code.matrix())
    # Both members of a pair agreeing with beta on >= t of n positions must
    # agree with each other on >= 2t - n positions, so subsets violating
    # that can be skipped without calling the solver.
    pair_min = 2 * t - code.m
    subsets = 0
    nodes = 0
    for subset in colex_combinations(len(code), need):
        subsets += 1
        if subsets > subset_budget:
            raise BudgetExceeded(
                f"witness search stopped after {subset_budget} subsets")
        if pair_min > 0 and any(
                agr[a, b] < pair_min for a, b in combinations(subset, 2)):
            continue
        words = tuple(code.words[i] for i in subset)
        center, nd = _center_exists_impl(words, t, code.q)
        nodes += nd
        if center is not None:
            return Decision(False, Witness(center, words),
                            SearchStats(nodes=nodes, subsets=subsets))
    return Decision(True, None, SearchStats(nodes=nodes, subsets=subsets))
