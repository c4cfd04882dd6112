"""Finite-field arithmetic tests, exhaustive at small orders."""

import itertools

import numpy as np
import pytest

from punclab import gf
from punclab.errors import (
    DegreeZero,
    DivisionByZero,
    FieldTooLarge,
    MixedFields,
    NotPrime,
    NotPrimePower,
)

PRIME_POWERS_64 = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29,
                   31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64]


def gf2_poly_mulmod(a, b, mod):
    """Independent oracle: multiply coefficient tuples over GF(2) mod mod."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] ^= ai & bj
    deg_m = len(mod) - 1
    while len(prod) > deg_m:
        if prod[-1]:
            shift = len(prod) - len(mod)
            for i, mi in enumerate(mod):
                prod[shift + i] ^= mi
        prod.pop()
    prod += [0] * (deg_m - len(prod))
    return tuple(prod)


def test_field_create_prime():
    ctx = gf.field_create(7, 1)
    assert (ctx.p, ctx.e, ctx.q) == (7, 1, 7)
    assert ctx.modulus == (0, 1)  # degenerate x, unused


def test_field_create_gf4_modulus_from_exhaustive_oracle():
    # degree-2 polynomials over GF(2) are irreducible iff they have no root
    candidates = []
    for c0, c1 in itertools.product((0, 1), repeat=2):
        poly = (c0, c1, 1)
        has_root = any((c0 + c1 * x + x * x) % 2 == 0 for x in (0, 1))
        if not has_root:
            candidates.append(poly)
    assert candidates == [(1, 1, 1)]  # x^2 + x + 1 is the only one
    ctx = gf.field_create(2, 2)
    assert ctx.modulus == (1, 1, 1)


def test_field_create_rejects_composite():
    with pytest.raises(NotPrime):
        gf.field_create(4, 1)


def test_field_create_rejects_degree_zero():
    with pytest.raises(DegreeZero):
        gf.field_create(2, 0)


def test_field_create_rejects_oversize():
    with pytest.raises(FieldTooLarge):
        gf.field_create(2, 21)


def test_gf7_mul_and_inv():
    ctx = gf.field_create(7)
    three, five = ctx.from_index(3), ctx.from_index(5)
    assert ctx.index(ctx.mul(three, five)) == 1
    assert ctx.index(ctx.inv(three)) == 5


def test_gf4_mul_matches_polynomial_reduction_oracle():
    ctx = gf.field_create(2, 2)
    for a in ctx.elements():
        for b in ctx.elements():
            got = ctx.mul(a, b).rep
            want = gf2_poly_mulmod(a.rep, b.rep, ctx.modulus)
            assert got == want


def test_inv_of_zero_raises():
    ctx = gf.field_create(5)
    with pytest.raises(DivisionByZero):
        ctx.inv(ctx.zero())


def test_mixed_fields_detected():
    a = gf.field_create(5)
    b = gf.field_create(5)
    with pytest.raises(MixedFields):
        a.add(a.one(), b.one())


def test_enumerate_gf3():
    ctx = gf.field_create(3)
    assert [ctx.index(x) for x in gf.enumerate_elements(ctx)] == [0, 1, 2]
    assert [x.rep for x in ctx.elements()] == [(0,), (1,), (2,)]


def test_enumerate_gf4_zero_first():
    ctx = gf.field_create(2, 2)
    els = gf.enumerate_elements(ctx)
    assert len(els) == 4
    assert len(set(els)) == 4
    assert els[0] == ctx.zero()


def test_enumerate_gf7_distinct():
    ctx = gf.field_create(7)
    els = gf.enumerate_elements(ctx)
    assert len(els) == 7 == len(set(els))


def test_enumeration_is_a_bijection():
    for q in (4, 8, 9, 27):
        p, e = gf.factor_prime_power(q)
        ctx = gf.field_create(p, e)
        els = ctx.elements()
        assert len({x.rep for x in els}) == q
        for i, x in enumerate(els):
            assert ctx.index(x) == i
            assert ctx.from_index(i) == x


@pytest.mark.parametrize("q", PRIME_POWERS_64)
def test_field_axioms_exhaustive(q):
    """All field axioms for every pair/triple, via the dense index tables.

    The tables are built elementwise from the arithmetic ops, so axiom
    checks on them are axiom checks on the ops; a few triples are also
    re-checked on raw elements below.
    """
    p, e = gf.factor_prime_power(q)
    ctx = gf.field_create(p, e)
    add, sub, mul = (np.asarray(t, dtype=np.int64) for t in ctx.tables())
    idx = np.arange(q)
    zero, one = 0, ctx.one_index

    assert np.array_equal(add, add.T)  # commutativity
    assert np.array_equal(mul, mul.T)
    assert np.array_equal(add[:, zero], idx)  # identities
    assert np.array_equal(mul[:, one], idx)
    assert np.array_equal(mul[:, zero], np.zeros(q, dtype=np.int64))
    # associativity over all triples
    assert np.array_equal(add[add[idx[:, None], idx[None, :]][:, :, None],
                              idx[None, None, :]],
                          add[idx[:, None, None],
                              add[idx[None, :, None], idx[None, None, :]]])
    assert np.array_equal(mul[mul[idx[:, None], idx[None, :]][:, :, None],
                              idx[None, None, :]],
                          mul[idx[:, None, None],
                              mul[idx[None, :, None], idx[None, None, :]]])
    # distributivity over all triples
    assert np.array_equal(mul[idx[:, None, None],
                              add[idx[None, :, None], idx[None, None, :]]],
                          add[mul[idx[:, None, None], idx[None, :, None]],
                              mul[idx[:, None, None], idx[None, None, :]]])
    # additive and multiplicative inverses exist uniquely
    for a in range(q):
        assert (add[a] == 0).sum() == 1
    for a in range(1, q):
        assert (mul[a] == one).sum() == 1
    # subtraction consistent with addition
    assert np.array_equal(add[sub[idx[:, None], idx[None, :]], idx[None, :]],
                          idx[:, None].repeat(q, 1))


@pytest.mark.parametrize("q", [4, 7, 9, 16])
def test_field_axioms_spotchecks_on_elements(q, rng):
    p, e = gf.factor_prime_power(q)
    ctx = gf.field_create(p, e)
    els = ctx.elements()
    for _ in range(60):
        a, b, c = (els[rng.randrange(q)] for _ in range(3))
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(ctx.add(a, b), c) == ctx.add(ctx.mul(a, c), ctx.mul(b, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.sub(ctx.add(a, b), b) == a


@pytest.mark.parametrize("q", PRIME_POWERS_64)
def test_inv_involution(q):
    p, e = gf.factor_prime_power(q)
    ctx = gf.field_create(p, e)
    one = ctx.one()
    for a in ctx.elements()[1:]:
        inv = ctx.inv(a)
        assert ctx.mul(a, inv) == one
        assert ctx.inv(inv) == a


def test_factor_prime_power():
    assert gf.factor_prime_power(8) == (2, 3)
    assert gf.factor_prime_power(7) == (7, 1)
    assert gf.factor_prime_power(729) == (3, 6)
    for bad in (1, 6, 12, 100):
        with pytest.raises(NotPrimePower):
            gf.factor_prime_power(bad)


def test_parse_field_spec():
    assert gf.parse_field_spec("101") == (101, 1)
    assert gf.parse_field_spec("2^4") == (2, 4)


def test_modulus_is_irreducible_for_small_extensions():
    # spot-check reducibility oracle: the modulus never factors with a root
    for p, e in ((2, 3), (3, 2), (2, 4), (5, 2), (2, 5)):
        ctx = gf.field_create(p, e)
        mod = ctx.modulus
        assert len(mod) == e + 1 and mod[-1] == 1
        # no linear factors: f(x) != 0 for all x in GF(p)
        for x in range(p):
            acc = 0
            for coef in reversed(mod):
                acc = (acc * x + coef) % p
            assert acc != 0
