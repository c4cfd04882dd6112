"""Decider tests: oracles first, then cross-validation of the two routes."""

import random
from fractions import Fraction
from itertools import product

import pytest

from conftest import oracle_ball_count, oracle_max_ball_full, random_code
from punclab import codes, gf, listdec, rs
from punclab.codes import Code
from punclab.errors import BudgetExceeded, LengthMismatch, SearchSpaceTooLarge
from punclab.listdec import (
    ListDecParams,
    ball_count,
    center_exists,
    colex_combinations,
    decide_exhaustive,
    decide_witness_search,
    max_ball_count,
    verify_witness,
)

RADII = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4))


def full_rs(q, k):
    return rs.rs_materialize(rs.rs_full(gf.field_create(q), k))


def test_params_threshold():
    p = ListDecParams(Fraction(2, 3), 2, 3)
    assert p.t == 1
    assert ListDecParams(Fraction(1, 2), 1, 5).t == 3
    for r in (Fraction(0), Fraction(1)):
        with pytest.raises(Exception):
            ListDecParams(r, 1, 3)
    for n in range(1, 9):
        for r in RADII:
            t = ListDecParams(r, 1, n).t
            assert 1 <= t <= n


def test_ball_count_distance_n_code():
    code = Code(2, 3, [(0, 0, 0), (1, 1, 1)])
    params = ListDecParams(Fraction(1, 4), 1, 3)  # r < 1/n, t = 3
    assert ball_count(code, (0, 0, 0), params) == 1


def test_ball_count_constants():
    code = Code(3, 3, [(0, 0, 0), (1, 1, 1), (2, 2, 2)])
    params = ListDecParams(Fraction(2, 3), 1, 3)  # t = 1
    assert ball_count(code, (0, 1, 2), params) == 3


def test_ball_count_full_rs_5_2_at_zero():
    # only the zero polynomial agrees with 0^5 on >= 2 positions
    mat = full_rs(5, 2)
    params = ListDecParams(Fraction(3, 5), 1, 5)
    assert params.t == 2
    assert ball_count(mat, (0, 0, 0, 0, 0), params) == 1
    assert oracle_ball_count(mat.words, (0, 0, 0, 0, 0), 2) == 1


def test_ball_count_length_mismatch():
    code = Code(2, 3, [(0, 0, 0)])
    with pytest.raises(LengthMismatch):
        ball_count(code, (0, 0), ListDecParams(Fraction(1, 2), 1, 3))


def test_decide_trivial_when_list_size_covers_code():
    code = Code(3, 3, [(0, 0, 0), (1, 1, 1), (2, 2, 2)])
    for r in RADII:
        d = decide_exhaustive(code, ListDecParams(r, 3, 3))
        assert d.decodable
        d = decide_witness_search(code, ListDecParams(r, 3, 3))
        assert d.decodable


def test_decide_exhaustive_constants_witness():
    code = Code(3, 3, [(0, 0, 0), (1, 1, 1), (2, 2, 2)])
    d = decide_exhaustive(code, ListDecParams(Fraction(2, 3), 2, 3))
    assert not d.decodable
    assert d.witness.center == (0, 1, 2)
    assert len(d.witness.members) == 3
    assert verify_witness(d.witness, 1)


def test_full_rs_5_2_smallest_decodable_L_is_10():
    """Frozen from the unrestricted-center oracle (max ball count 10)."""
    mat = full_rs(5, 2)
    t = ListDecParams(Fraction(3, 5), 1, 5).t
    assert max_ball_count(mat, t) == 10
    assert decide_exhaustive(mat, ListDecParams(Fraction(3, 5), 9, 5)).decodable is False
    assert decide_exhaustive(mat, ListDecParams(Fraction(3, 5), 10, 5)).decodable is True


def test_center_exists_examples():
    assert center_exists([(0, 0), (1, 1)], 1, 2) == (0, 1)
    assert center_exists([(0, 0), (1, 1)], 2, 2) is None


def test_center_exists_matches_enumeration_oracle(rng):
    for _ in range(40):
        q, n = 5, 6
        words = [tuple(rng.randrange(q) for _ in range(n)) for _ in range(3)]
        if len(set(words)) < 3:
            continue
        for t in (2, 3, 4):
            got = center_exists(words, t, q)
            feasible = any(
                all(sum(1 for a, b in zip(w, beta) if a == b) >= t
                    for w in words)
                for beta in product(range(q), repeat=n))
            assert (got is not None) == feasible
            if got is not None:
                assert all(sum(1 for a, b in zip(w, got) if a == b) >= t
                           for w in words)


def test_witness_search_pair_agreement_shortcut():
    # two words sharing t positions are a witness at L = 1
    code = Code(3, 4, [(0, 0, 0, 0), (0, 0, 1, 2), (1, 2, 2, 1)])
    params = ListDecParams(Fraction(1, 2), 1, 4)  # t = 2
    d = decide_witness_search(code, params)
    assert not d.decodable
    assert set(d.witness.members) == {(0, 0, 0, 0), (0, 0, 1, 2)}
    assert verify_witness(d.witness, 2)


def test_witness_search_trivial_full_rs_5_1():
    # the five constants all meet the ball around (0,1,2,3,4) at t = 1, so
    # L = 4 fails and L = 5 >= |C| is trivially decodable
    mat = full_rs(5, 1)
    d4 = decide_witness_search(mat, ListDecParams(Fraction(4, 5), 4, 5))
    assert not d4.decodable
    assert verify_witness(d4.witness, 1)
    assert decide_exhaustive(mat, ListDecParams(Fraction(4, 5), 4, 5)).decodable is False
    d5 = decide_witness_search(mat, ListDecParams(Fraction(4, 5), 5, 5))
    assert d5.decodable  # L + 1 = 6 exceeds |C| = 5


def test_budget_exceeded_is_an_error():
    mat = full_rs(5, 2)
    params = ListDecParams(Fraction(3, 5), 10, 5)  # decodable: search must finish
    with pytest.raises(BudgetExceeded):
        decide_witness_search(mat, params, subset_budget=10)
    with pytest.raises(BudgetExceeded):
        decide_exhaustive(mat, params, node_budget=5)


def test_space_cap():
    mat = full_rs(7, 2)
    with pytest.raises(SearchSpaceTooLarge):
        decide_exhaustive(mat, ListDecParams(Fraction(1, 2), 2, 7),
                          space_cap=100)


def test_cross_validation_sweep(rng):
    """Exhaustive and witness-search verdicts agree; witnesses re-verify.

    A slice of acceptance criterion 2 (the full >= 200-instance sweep
    lives in the acceptance suite).
    """
    instances = 0
    for _ in range(12):
        q = rng.choice([2, 3, 4, 5])
        n = rng.randrange(3, 6)
        code = random_code(rng, q, n, rng.randrange(2, 13))
        for r in RADII:
            for L in (1, 2, 3):
                params = ListDecParams(r, L, n)
                d1 = decide_exhaustive(code, params)
                d2 = decide_witness_search(code, params)
                assert d1.decodable == d2.decodable, (code.words, r, L)
                for d in (d1, d2):
                    if d.witness is not None:
                        assert verify_witness(d.witness, params.t)
                instances += 1
    assert instances >= 100


def test_center_reduction_soundness_small(rng):
    """Reduced-space max ball count equals the full q^n enumeration."""
    for _ in range(30):
        q = rng.choice([2, 3, 4])
        n = rng.randrange(2, 5)
        code = random_code(rng, q, n, rng.randrange(2, 10))
        for t in range(1, n + 1):
            assert max_ball_count(code, t) == oracle_max_ball_full(
                code.words, q, n, t)


def test_monotonicity_in_r_and_L(rng):
    for _ in range(10):
        code = random_code(rng, 3, 4, 8)
        for L in (1, 2):
            decs = [decide_exhaustive(code, ListDecParams(r, L, 4)).decodable
                    for r in RADII]
            # decodable at r implies decodable at any smaller radius
            for smaller, larger in zip(decs, decs[1:]):
                if larger:
                    assert smaller
        for r in RADII:
            decs = [decide_exhaustive(code, ListDecParams(r, L, 4)).decodable
                    for L in (1, 2, 3)]
            for smaller, larger in zip(decs, decs[1:]):
                if smaller:
                    assert larger


def test_colex_order_frozen():
    assert list(colex_combinations(4, 2)) == [
        (0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert list(colex_combinations(3, 3)) == [(0, 1, 2)]


def test_witness_search_reports_lowest_colex_witness():
    # all three pairs are witnesses at t = 1; colex-first is (0, 1)
    code = Code(2, 2, [(0, 0), (0, 1), (1, 0)])
    d = decide_witness_search(code, ListDecParams(Fraction(1, 2), 1, 2))
    assert d.witness.members == ((0, 0), (0, 1))
