"""Exact arithmetic in GF(p^e), the alphabet of every code in this package.

An element of GF(p^e) is a coefficient vector of length e over GF(p),
low-order coefficient first, always kept in canonical reduced form.  The
canonical enumeration orders elements lexicographically by that vector
(low-order coefficient compared first), so index 0 is the zero element and
for prime fields an element's index equals its integer value.  Codes store
these indices, not element objects.

The reduction modulus for e >= 2 is the lexicographically smallest monic
irreducible polynomial of degree e over GF(p), found by exhaustive search;
no external tables are consulted, so contexts are reproducible from (p, e)
alone.  Contexts are immutable and all operations are pure.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegreeZero,
    DivisionByZero,
    FieldTooLarge,
    MixedFields,
    NotPrime,
    NotPrimePower,
)

DEFAULT_ORDER_CAP = 1 << 20
TABLE_CAP = 1 << 10  # largest q for which dense index tables are built

_ctx_tokens = itertools.count(1)


def is_prime(n: int) -> bool:
    """Primality by trial division; exact and fast enough below the cap."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = q
    for f in range(2, q + 1):
        if f * f > q:
            break
        if q % f == 0:
            p = f
            break
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists low-order first
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, mi in enumerate(mod):
            a[shift + i] = (a[shift + i] - factor * mi) % p
        _poly_trim(a)
    return a


def _poly_divmod(a, b, p):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        factor = (a[-1] * inv_lead) % p
        q[shift] = factor
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_inv(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Inverse of a modulo mod via the extended Euclidean algorithm."""
    r0, r1 = list(mod), _poly_trim(list(a))
    s0, s1 = [], [1]
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        qs = _poly_mul(q, s1, p)
        new_s = [0] * max(len(s0), len(qs))
        for i in range(len(new_s)):
            v0 = s0[i] if i < len(s0) else 0
            v1 = qs[i] if i < len(qs) else 0
            new_s[i] = (v0 - v1) % p
        s0, s1 = s1, _poly_trim(new_s)
    # r0 is now gcd(a, mod); a unit since mod is irreducible and a != 0
    scale = pow(r0[0], p - 2, p)
    return _poly_mod([c * scale % p for c in s0], mod, p)


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by all monic polynomials of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] == 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            _, rem = _poly_divmod(list(poly), divisor, p)
            if not rem:
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over GF(p).

    Candidates are compared by their coefficient list read low-order
    coefficient first.
    """
    for low in itertools.product(range(p), repeat=e):
        cand = list(low) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found (impossible)")


# ---------------------------------------------------------------------------
# elements and contexts
# ---------------------------------------------------------------------------

class FieldElement:
    """Canonical element of some GF(p^e).

    Carries only its coefficient vector plus the identity token of the
    context that produced it; all arithmetic goes through the context.
    """

    __slots__ = ("rep", "tok")

    def __init__(self, rep: tuple[int, ...], tok: int):
        self.rep = rep
        self.tok = tok

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.rep == other.rep
            and self.tok == other.tok
        )

    def __hash__(self):
        return hash((self.rep, self.tok))

    def __repr__(self):
        return f"FieldElement{self.rep}"


class FieldCtx:
    """Immutable context for GF(p^e) arithmetic.

    Safe for unrestricted concurrent use; the element list and index tables
    are memoized on first use but their values are deterministic.
    """

    __slots__ = ("p", "e", "q", "modulus", "tok", "_elements", "_tables")

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self.tok = next(_ctx_tokens)
        self._elements = None
        self._tables = None

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.e}), modulus={list(self.modulus)})"

    # -- element construction ------------------------------------------------

    def check(self, a: FieldElement) -> None:
        if not isinstance(a, FieldElement) or a.tok != self.tok:
            raise MixedFields(f"element {a!r} does not belong to {self!r}")

    def element(self, coeffs: Iterable[int]) -> FieldElement:
        rep = tuple(int(c) % self.p for c in coeffs)
        if len(rep) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(rep)}")
        return FieldElement(rep, self.tok)

    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.e, self.tok)

    def one(self) -> FieldElement:
        return FieldElement((1,) + (0,) * (self.e - 1), self.tok)

    def from_index(self, i: int) -> FieldElement:
        """Element at position i of the canonical enumeration."""
        if not 0 <= i < self.q:
            raise ValueError(f"index {i} out of range for field of order {self.q}")
        digits = []
        for k in range(self.e):
            digits.append(i // self.p ** (self.e - 1 - k) % self.p)
        return FieldElement(tuple(digits), self.tok)

    def index(self, a: FieldElement) -> int:
        """Rank of a in the canonical enumeration (inverse of from_index)."""
        self.check(a)
        i = 0
        for c in a.rep:
            i = i * self.p + c
        return i

    @property
    def one_index(self) -> int:
        return self.p ** (self.e - 1)

    def elements(self) -> list[FieldElement]:
        """All q elements in canonical order (cached)."""
        if self._elements is None:
            self._elements = [
                FieldElement(rep, self.tok)
                for rep in itertools.product(range(self.p), repeat=self.e)
            ]
        return self._elements

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self.check(a)
        self.check(b)
        p = self.p
        return FieldElement(tuple((x + y) % p for x, y in zip(a.rep, b.rep)), self.tok)

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self.check(a)
        self.check(b)
        p = self.p
        return FieldElement(tuple((x - y) % p for x, y in zip(a.rep, b.rep)), self.tok)

    def neg(self, a: FieldElement) -> FieldElement:
        self.check(a)
        p = self.p
        return FieldElement(tuple((-x) % p for x in a.rep), self.tok)

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self.check(a)
        self.check(b)
        if self.e == 1:
            return FieldElement(((a.rep[0] * b.rep[0]) % self.p,), self.tok)
        prod = _poly_mul(a.rep, b.rep, self.p)
        red = _poly_mod(prod, self.modulus, self.p)
        red += [0] * (self.e - len(red))
        return FieldElement(tuple(red), self.tok)

    def inv(self, a: FieldElement) -> FieldElement:
        self.check(a)
        if all(c == 0 for c in a.rep):
            raise DivisionByZero("0 has no multiplicative inverse")
        if self.e == 1:
            return FieldElement((pow(a.rep[0], self.p - 2, self.p),), self.tok)
        rep = _poly_inv(a.rep, self.modulus, self.p)
        rep += [0] * (self.e - len(rep))
        return FieldElement(tuple(rep), self.tok)

    def pow(self, a: FieldElement, k: int) -> FieldElement:
        self.check(a)
        if k < 0:
            raise ValueError("negative exponent")
        acc = self.one()
        base = a
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    # -- dense index tables (for the kernels) --------------------------------

    def tables(self):
        """(add, sub, mul) int32 index tables; only for q <= TABLE_CAP."""
        if self._tables is None:
            if self.q > TABLE_CAP:
                raise FieldTooLarge(
                    f"index tables capped at q <= {TABLE_CAP}, got q = {self.q}"
                )
            q, p, e = self.q, self.p, self.e
            idx = np.arange(q, dtype=np.int64)
            digits = np.empty((e, q), dtype=np.int64)
            for k in range(e):
                digits[k] = idx // p ** (e - 1 - k) % p
            weights = np.array([p ** (e - 1 - k) for k in range(e)], dtype=np.int64)
            add = np.zeros((q, q), dtype=np.int32)
            sub = np.zeros((q, q), dtype=np.int32)
            for k in range(e):
                col = digits[k][None, :]
                row = digits[k][:, None]
                add += ((row + col) % p * weights[k]).astype(np.int32)
                sub += ((row - col) % p * weights[k]).astype(np.int32)
            mul = np.zeros((q, q), dtype=np.int32)
            els = self.elements()
            for i in range(q):
                for j in range(i, q):
                    v = self.index(self.mul(els[i], els[j]))
                    mul[i, j] = v
                    mul[j, i] = v
            self._tables = (add, sub, mul)
        return self._tables


def field_create(p: int, e: int = 1, order_cap: int = DEFAULT_ORDER_CAP) -> FieldCtx:
    """Build the canonical GF(p^e) context.

    The modulus for e >= 2 is the lexicographically smallest monic
    irreducible degree-e polynomial over GF(p); for e = 1 it is the
    degenerate polynomial x, which is never used.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise DegreeZero(f"extension degree must be >= 1, got {e}")
    if p**e > order_cap:
        raise FieldTooLarge(f"p^e = {p**e} exceeds the cap {order_cap}")
    if e == 1:
        modulus = (0, 1)
    else:
        modulus = _smallest_irreducible(p, e)
    return FieldCtx(p, e, modulus)


def enumerate_elements(ctx: FieldCtx) -> list[FieldElement]:
    """All q elements in the documented canonical order (zero first)."""
    return list(ctx.elements())


def parse_field_spec(spec: str) -> tuple[int, int]:
    """Parse "p" or "p^e" into (p, e)."""
    spec = spec.strip()
    if "^" in spec:
        left, right = spec.split("^", 1)
        return int(left), int(right)
    return int(spec), 1
