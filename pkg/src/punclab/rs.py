"""Reed-Solomon codes: evaluation of all degree-<k polynomials at chosen points.

Codewords are generated lazily in lexicographic coefficient order: the
coefficient vector (c_0, ..., c_{k-1}) ranges over element indices with c_0
(the constant term) most significant, so the all-zero word always comes
first and iteration order is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import codes, kernels
from .errors import (
    DegreeOutOfRange,
    DuplicateEvalPoint,
    TooLargeToMaterialize,
    WrongCoefficientCount,
)
from .gf import FieldCtx, FieldElement

MATERIALIZE_CAP = 1 << 20
BRUTE_VERIFY_CAP = 1 << 12
SCAN_CAP = 1 << 24


@dataclass(frozen=True)
class RSCode:
    """[n, k] Reed-Solomon code over ctx with fixed evaluation points."""

    ctx: FieldCtx
    k: int
    evals: tuple[FieldElement, ...]

    @property
    def n(self) -> int:
        return len(self.evals)

    @property
    def q(self) -> int:
        return self.ctx.q

    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def codeword_count(self) -> int:
        return self.ctx.q**self.k

    @property
    def designed_distance(self) -> int:
        """n - k + 1, the MDS distance every RS code attains."""
        return self.n - self.k + 1

    def eval_indices(self) -> tuple[int, ...]:
        return tuple(self.ctx.index(a) for a in self.evals)


def rs_create(ctx: FieldCtx, k: int, evals: Iterable) -> RSCode:
    """Build an RS code; eval points may be elements or canonical indices."""
    pts = tuple(a if isinstance(a, FieldElement) else ctx.from_index(int(a))
                for a in evals)
    for a in pts:
        ctx.check(a)
    if len(set(pts)) != len(pts):
        raise DuplicateEvalPoint(f"evaluation points not distinct: {pts}")
    n = len(pts)
    if not 1 <= k < n:
        raise DegreeOutOfRange(f"need 1 <= k < n, got k={k}, n={n}")
    if n > ctx.q:
        raise DegreeOutOfRange(f"block length {n} exceeds field order {ctx.q}")
    return RSCode(ctx, k, pts)


def rs_full(ctx: FieldCtx, k: int) -> RSCode:
    """The "full" [q, k] code evaluated at every field element."""
    if not 1 <= k < ctx.q:
        raise DegreeOutOfRange(f"need 1 <= k < q, got k={k}, q={ctx.q}")
    return RSCode(ctx, k, tuple(ctx.elements()))


def rs_encode(code: RSCode, coeffs: Sequence) -> codes.Word:
    """Evaluate f = c_0 + c_1 x + ... + c_{k-1} x^{k-1} at every point.

    Returns the codeword as a tuple of symbol indices (Horner evaluation).
    """
    ctx = code.ctx
    cs = tuple(c if isinstance(c, FieldElement) else ctx.from_index(int(c))
               for c in coeffs)
    if len(cs) != code.k:
        raise WrongCoefficientCount(f"expected {code.k} coefficients, got {len(cs)}")
    for c in cs:
        ctx.check(c)
    out = []
    for alpha in code.evals:
        acc = cs[-1]
        for c in reversed(cs[:-1]):
            acc = ctx.add(ctx.mul(acc, alpha), c)
        out.append(ctx.index(acc))
    return tuple(out)


def _power_table(code: RSCode) -> np.ndarray:
    """powtable[j, i] = index(alpha_i ** j) for j < k."""
    ctx = code.ctx
    table = np.zeros((code.k, code.n), dtype=np.int32)
    for i, alpha in enumerate(code.evals):
        acc = ctx.one()
        for j in range(code.k):
            table[j, i] = ctx.index(acc)
            acc = ctx.mul(acc, alpha)
    return table


def iter_codewords(code: RSCode) -> Iterator[codes.Word]:
    """All q^k codewords in lexicographic coefficient order."""
    ctx = code.ctx
    q, k, n = ctx.q, code.k, code.n
    try:
        add, _, mul = ctx.tables()
    except Exception:
        add = mul = None  # very large field: fall back to element arithmetic
    pows = _power_table(code)
    # digits[j] = c_j; c_0 most significant, c_{k-1} fastest
    digits = [0] * k
    elements = ctx.elements() if add is None else None
    while True:
        if add is None:
            coeffs = [elements[d] for d in digits]
            yield rs_encode(code, coeffs)
        else:
            word = [0] * n
            for i in range(n):
                acc = 0
                for j in range(k):
                    cj = digits[j]
                    if cj:
                        acc = add[acc, mul[cj, pows[j, i]]]
                word[i] = int(acc)
            yield tuple(word)
        j = k - 1
        while j >= 0:
            digits[j] += 1
            if digits[j] < q:
                break
            digits[j] = 0
            j -= 1
        if j < 0:
            return


def rs_materialize(code: RSCode, cap: int = MATERIALIZE_CAP) -> codes.Code:
    """Explicit Code with all q^k words.

    The distance cache is brute-force verified for q^k <= BRUTE_VERIFY_CAP
    and otherwise set from the MDS formula with provenance "asserted".
    """
    if code.codeword_count > cap:
        raise TooLargeToMaterialize(
            f"q^k = {code.codeword_count} exceeds cap {cap}")
    out = codes.Code(code.q, code.n, iter_codewords(code), word_cap=cap)
    if code.codeword_count <= BRUTE_VERIFY_CAP:
        d = codes.min_distance(out)
        if d != code.designed_distance:
            raise AssertionError(
                f"MDS violation: measured {d}, designed {code.designed_distance}")
    else:
        out.set_distance(code.designed_distance, "asserted")
    return out


def rs_min_weight(code: RSCode, scan_cap: int = SCAN_CAP) -> int:
    """Exact minimum distance measured as the minimum nonzero-codeword weight.

    Valid because RS codes are linear: differences of codewords are
    codewords, so the pairwise minimum distance equals the minimum weight.
    Scans one representative per scalar class, (q^k - 1)/(q - 1) words.
    """
    ctx = code.ctx
    q, k, n = ctx.q, code.k, code.n
    reps = (q**k - 1) // (q - 1)
    if reps > scan_cap:
        raise TooLargeToMaterialize(f"{reps} scalar classes exceed cap {scan_cap}")
    add, sub, mul = ctx.tables()
    pows = _power_table(code)
    # contrib[j, a, i] = index(element_a * alpha_i^j)
    contrib = mul[np.arange(q)[None, :, None], pows[:, None, :]].astype(np.int32)
    best, scanned = kernels.rs_min_weight(contrib, add, sub, ctx.one_index)
    if scanned != reps:
        raise AssertionError(f"scanned {scanned} representatives, expected {reps}")
    return best
