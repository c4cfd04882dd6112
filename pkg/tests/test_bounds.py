"""Parameter validators: exact checks, certified comparisons, windows."""

from fractions import Fraction

import gmpy2
import pytest

from punclab import bounds, certify
from punclab.bounds import (
    JohnsonProfile,
    check_eq2,
    check_eq3,
    check_eq4,
    check_field_size,
    check_window_1_3,
    johnson_profile,
    main_params,
    puncturing_params,
    singleton_gap,
    window_empty,
)
from punclab.errors import (
    FieldSizeTooSmall,
    InvalidDistance,
    NotPrimePower,
    UncertifiedComparison,
)


def test_check_field_size_equality_point():
    assert check_field_size(32, 16, 5)  # 32^4 == 16^5 == 2^20
    assert 32**4 == 16**5
    assert not check_field_size(31, 16, 5)


def test_check_field_size_q_equals_n():
    for n in (2, 5, 16, 1000):
        assert not check_field_size(n, n, 5)
        assert not check_field_size(n, n, 7)


def test_window_empty_at_small_parameters():
    # upper sqrt window is exactly 10 here, far below 3ch = 60
    assert window_empty(5, 2**10, 4)
    report = check_window_1_3(5, 2**10, 4, m=2**10, n=61)
    by_name = {e.name: e for e in report.entries}
    assert by_name["h_le_q^(-1/c)m"].holds
    assert by_name["3ch_lt_n"].holds
    assert not by_name["n_le_sqrt_window"].holds
    assert not by_name["n_le_exp_window"].holds
    assert report.window_empty
    assert report.ok is False
    assert all(e.certified for e in report.entries)


def test_window_large_field_point():
    # sqrt window is ~sqrt(40)*h ~ 6.32e4 < n = 2e5: violated even though
    # the exp window holds; the n-window is empty for every q < 2^360 at c=5
    report = check_window_1_3(5, 2**64, 10**4, m=2**70, n=2 * 10**5)
    by_name = {e.name: e for e in report.entries}
    assert by_name["h_le_q^(-1/c)m"].holds
    assert by_name["3ch_lt_n"].holds
    assert not by_name["n_le_sqrt_window"].holds
    assert by_name["n_le_exp_window"].holds
    assert report.window_empty


def test_window_satisfiable_only_for_enormous_fields():
    q = 2**512
    h = 896
    m = h * 2**103
    report = check_window_1_3(5, q, h, m=m, n=15 * h + 1)
    assert report.ok is True
    assert not report.window_empty
    # and the lower edge itself is excluded (strict)
    report_edge = check_window_1_3(5, q, h, m=m, n=15 * h)
    assert {e.name: e.holds for e in report_edge.entries}["3ch_lt_n"] is False


def test_window_rejects_bad_parameters():
    with pytest.raises(ValueError):
        check_window_1_3(1, 4, 1)
    with pytest.raises(ValueError):
        check_window_1_3(5, 4, 0)


def test_eq2_exact():
    assert check_eq2(30, 5, 2, 3)  # n = chL exactly, L = 3
    assert check_eq2(45, 5, 3, 3)
    with pytest.raises(ValueError):
        check_eq2(30, 5, 2, 4)  # L not equal floor(n/(ch))
    with pytest.raises(ValueError):
        check_eq2(5, 5, 2, 0)  # L = 0: the regime needs L >= 3


def test_eq3_values():
    # (c/8) log2 q / q^(2/c) = 0.390625 at q = 2^10, c = 5: not < 1/4
    assert check_eq3(5, 2**10) is False
    assert check_eq3(5, 2**512) is True
    # non-power-of-two fields decide through the exact power route
    assert check_eq3(5, 1000) is False  # sqrt(0.625*log2(1000))/1000^(1/5) ~ 0.63
    assert check_eq3(5, 10**6 + 3) is True
    assert check_eq3(5, 10**150 + 7) is True


def test_eq4_strict():
    assert check_eq4(2, 10**6, 5, 2**16, 10) is True
    assert check_eq4(100, 100, 5, 4, 1) is False


def test_johnson_profile_examples():
    assert johnson_profile(Fraction(1, 10), 10, 11) == JohnsonProfile(
        Fraction(1, 100), Fraction(9, 10), 1100)
    assert johnson_profile(Fraction(1, 2), 4, 5) == JohnsonProfile(
        Fraction(1, 4), Fraction(1, 2), 80)
    with pytest.raises(ValueError):
        johnson_profile(Fraction(1), 4, 5)
    with pytest.raises(ValueError):
        johnson_profile(Fraction(0), 4, 5)


def test_singleton_gap():
    assert singleton_gap(5, 5, 4, k=2) == 0  # any RS code is MDS
    assert singleton_gap(3, 2, 3, size=2) == 0  # binary repetition
    assert singleton_gap(4, 3, 2, k=2) == 1
    with pytest.raises(InvalidDistance):
        singleton_gap(3, 2, 3, size=4)  # would beat Singleton
    with pytest.raises(InvalidDistance):
        singleton_gap(3, 2, 0, size=2)
    with pytest.raises(ValueError):
        singleton_gap(3, 2, 3)


def test_main_params_examples():
    p = main_params(5, Fraction(3, 10), 100_000, 2**21)
    assert p.L_main == 10
    assert p.rate_bound == Fraction(1, 50)
    assert p.k == 2000  # eps*n/(3c) integral: ceiling is exact
    assert p.m == p.q and p.h == p.k - 1
    assert p.failure_exponent == Fraction(3, 10) * 100_000 / 65
    assert Fraction(p.h) <= p.epsilon * p.n / (3 * p.c)
    assert p.rate() >= p.rate_bound

    p2 = main_params(5, Fraction(1, 2), 100_000, 2**21)
    assert p2.L_main == 6
    assert p2.rate_bound == Fraction(1, 30)


def test_main_params_rejections():
    with pytest.raises(NotPrimePower):
        main_params(5, Fraction(1, 2), 100, 12**3)
    with pytest.raises(FieldSizeTooSmall):
        main_params(5, Fraction(1, 2), 1000, 1009)  # ~n^(5/4) needed
    with pytest.raises(ValueError):
        main_params(4, Fraction(1, 2), 100, 2**21)
    with pytest.raises(ValueError):
        main_params(5, Fraction(3, 2), 100, 2**21)


def test_puncturing_params():
    p = puncturing_params(5, 2**10, 2, 2**10, 50)
    assert p.radius == 1 - Fraction(30, 50)
    assert p.list_size == 5
    assert p.failure_exponent == Fraction(1, 2)


def test_window_pass_implies_eq234():
    """On every grid point where the window fully holds, the derived
    inequalities hold too."""
    q = 2**512
    c = 5
    checked = 0
    for h in (896, 1000, 1200):
        m = h * 2**103
        for n in range(15 * h + 1, 15 * h + 40):
            report = check_window_1_3(c, q, h, m=m, n=n)
            if report.ok:
                L = n // (c * h)
                assert check_eq2(n, c, h, L)
                assert check_eq3(c, q)
                assert check_eq4(n, m, c, q, h)
                checked += 1
    assert checked > 50


# ---------------------------------------------------------------------------
# certified comparison layer
# ---------------------------------------------------------------------------

def test_log2_brackets():
    assert certify.log2_brackets(1024) == (10, 10)
    assert certify.log2_brackets(1000) == (9, 10)
    assert certify.log2_brackets(2) == (1, 1)
    assert certify.log2_brackets(3) == (1, 2)


def test_compare_to_log2_multiple_signs():
    # 8*X vs c*h^2*log2(q): exact equality at a power of two
    assert certify.compare_to_log2_multiple(Fraction(10), Fraction(1), 2**10) == 0
    assert certify.compare_to_log2_multiple(Fraction(9), Fraction(1), 2**10) == -1
    assert certify.compare_to_log2_multiple(Fraction(11), Fraction(1), 2**10) == 1
    # non-power-of-two: decided by 2^a vs q^b
    assert certify.compare_to_log2_multiple(Fraction(19, 2), Fraction(1), 1000) == -1
    assert certify.compare_to_log2_multiple(Fraction(10), Fraction(1), 1000) == 1


def test_compare_ln_fast_paths_and_interval():
    assert certify.compare_ln(Fraction(1), Fraction(0)) == 0
    assert certify.compare_ln(Fraction(2), Fraction(0)) == 1
    assert certify.compare_ln(Fraction(1, 2), Fraction(0)) == -1
    assert certify.compare_ln(Fraction(3), Fraction(1)) == 1   # ln 3 > 1
    assert certify.compare_ln(Fraction(5, 2), Fraction(1)) == -1  # ln 2.5 < 1


def test_uncertified_comparison_raised_at_precision_cap():
    """A rational v agreeing with e^x to ~300 bits cannot be separated at
    64-bit interval precision: the comparison refuses to answer."""
    x = Fraction(1, 3)
    with gmpy2.context(precision=320):
        v_mpfr = gmpy2.exp(gmpy2.mpfr(gmpy2.mpq(1, 3)))
    r = gmpy2.mpq(v_mpfr)
    v = Fraction(int(r.numerator), int(r.denominator))
    with pytest.raises(UncertifiedComparison):
        certify.compare_ln(v, x, max_prec=64)
    # at full escalation the same comparison is certified
    assert certify.compare_ln(v, x) in (-1, 1)


def test_certified_verdicts_are_never_bare_floats():
    for q in (999, 1024, 10**6):
        sign = certify.compare_to_log2_multiple(Fraction(97, 7), Fraction(10, 7), q)
        assert sign in (-1, 0, 1)
