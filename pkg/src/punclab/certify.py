"""Certified comparisons against log2(q) and ln(v).

The parameter windows involve strict inequalities against transcendental
quantities, so a wrong boundary verdict would poison experiments.  Every
comparison here is decided by one of three certified routes:

1. integer bracketing of log2(q) by bit length (exact when q is a power of
   two, otherwise strict on both sides);
2. exact big-integer power comparison (2^a vs q^b), which settles any
   rational-vs-log2 comparison whenever the powers fit in memory;
3. directed-rounding interval evaluation with gmpy2 at escalating
   precision (64 -> 256 -> 1024 -> 4096 bits), returning a verdict only
   when the interval separates from the threshold.

If no route certifies, UncertifiedComparison is raised; a plain boolean is
never returned uncertified.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2

from .errors import UncertifiedComparison

PRECISIONS = (64, 256, 1024, 4096)
EXACT_POW_BIT_CAP = 1 << 23  # operands up to ~8 Mbit take the exact route


def is_power_of_two(q: int) -> bool:
    return q > 0 and q & (q - 1) == 0


def log2_brackets(q: int) -> tuple[int, int]:
    """Integers lo <= log2(q) <= hi; lo == hi iff q is a power of two."""
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    lo = q.bit_length() - 1
    hi = lo if is_power_of_two(q) else q.bit_length()
    return lo, hi


def _mpfr_to_fraction(x) -> Fraction:
    r = gmpy2.mpq(x)
    return Fraction(int(r.numerator), int(r.denominator))


def _fraction_to_mpq(x: Fraction):
    return gmpy2.mpq(x.numerator, x.denominator)


def log2_interval(q: int, prec: int) -> tuple[Fraction, Fraction]:
    """Certified enclosure of log2(q) as exact dyadic rationals."""
    with gmpy2.context(precision=prec, round=gmpy2.RoundDown):
        lo = gmpy2.log2(gmpy2.mpfr(q))
    with gmpy2.context(precision=prec, round=gmpy2.RoundUp):
        hi = gmpy2.log2(gmpy2.mpfr(q))
    return _mpfr_to_fraction(lo), _mpfr_to_fraction(hi)


def ln_interval(v: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """Certified enclosure of ln(v) for rational v > 0.

    ln is increasing, so rounding the argument and the operation in the
    same direction yields valid bounds.
    """
    if v <= 0:
        raise ValueError(f"ln defined for positive arguments, got {v}")
    mv = _fraction_to_mpq(v)
    with gmpy2.context(precision=prec, round=gmpy2.RoundDown):
        lo = gmpy2.log(gmpy2.mpfr(mv))
    with gmpy2.context(precision=prec, round=gmpy2.RoundUp):
        hi = gmpy2.log(gmpy2.mpfr(mv))
    return _mpfr_to_fraction(lo), _mpfr_to_fraction(hi)


def compare_to_log2_multiple(lhs: Fraction, coeff: Fraction, q: int,
                             max_prec: int | None = None) -> int:
    """Certified sign of lhs - coeff * log2(q) for coeff > 0.

    Never returns 0 unless the two sides are exactly equal (only possible
    when q is a power of two or lhs/coeff matches log2(q) exactly).
    """
    lhs = Fraction(lhs)
    coeff = Fraction(coeff)
    if coeff <= 0:
        raise ValueError(f"coefficient must be positive, got {coeff}")
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    lo, hi = log2_brackets(q)
    if lo == hi:
        diff = lhs - coeff * lo
        return (diff > 0) - (diff < 0)
    # log2(q) lies strictly between the brackets here
    if lhs <= coeff * lo:
        return -1
    if lhs >= coeff * hi:
        return 1
    # exact route: lhs ? coeff*log2(q)  <=>  2^a ? q^b  with a/b = lhs/coeff
    ratio = lhs / coeff
    a, b = ratio.numerator, ratio.denominator
    if a <= 0:
        return -1  # log2(q) >= 1 > 0 >= a/b
    if max(a, b * q.bit_length()) <= EXACT_POW_BIT_CAP:
        left = 1 << a
        right = q**b
        return (left > right) - (left < right)
    # interval fallback for enormous exponents
    for prec in PRECISIONS:
        if max_prec is not None and prec > max_prec:
            break
        flo, fhi = log2_interval(q, prec)
        if lhs < coeff * flo:
            return -1
        if lhs > coeff * fhi:
            return 1
    raise UncertifiedComparison(
        f"could not certify {lhs} vs {coeff}*log2({q}) at max precision")


def compare_ln(v: Fraction, x: Fraction, max_prec: int | None = None) -> int:
    """Certified sign of ln(v) - x for rational v > 0.

    Exact equality is only possible at v = 1, x = 0; for any other rational
    pair ln(v) != x, so precision escalation terminates mathematically and
    the cap exists purely as a safety valve.
    """
    v = Fraction(v)
    x = Fraction(x)
    if v <= 0:
        raise ValueError(f"need v > 0, got {v}")
    if v == 1:
        return (0 > x) - (0 < x)
    if v > 1 and x <= 0:
        return 1
    if v < 1 and x >= 0:
        return -1
    for prec in PRECISIONS:
        if max_prec is not None and prec > max_prec:
            break
        lo, hi = ln_interval(v, prec)
        if lo > x:
            return 1
        if hi < x:
            return -1
    raise UncertifiedComparison(
        f"could not certify ln({v}) vs {x} at max precision")


def approx_float(x: Fraction) -> float | None:
    """Best-effort float image of an exact value, for report margins only."""
    try:
        with gmpy2.context(precision=64):
            return float(gmpy2.mpfr(_fraction_to_mpq(x)))
    except (OverflowError, ValueError):
        return None
