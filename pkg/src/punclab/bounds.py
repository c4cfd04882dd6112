"""Exact validators for every named parameter condition and bound.

Purely rational conditions are decided by integer arithmetic; conditions
involving log2(q) or e^x go through punclab.certify and either come back
certified or raise UncertifiedComparison.  Reported margins are advisory
floats and never feed back into a verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import certify
from .errors import FieldSizeTooSmall, InvalidDistance, UncertifiedComparison
from .gf import factor_prime_power


# ---------------------------------------------------------------------------
# parameter bundles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MainTheoremParams:
    """Derived quantities of the rate guarantee for random evaluation points."""

    c: int
    epsilon: Fraction
    n: int
    q: int
    k: int
    L_main: int
    rate_bound: Fraction
    failure_exponent: Fraction
    m: int  # instantiation used by the reduction: the full code length, q
    h: int  # and its distance defect, k - 1

    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)


@dataclass(frozen=True)
class PuncturingTheoremParams:
    """Derived quantities of the random-puncturing guarantee."""

    c: int
    q: int
    h: int
    m: int
    n: int
    radius: Fraction
    list_size: int
    failure_exponent: Fraction


class JohnsonProfile(NamedTuple):
    rate_threshold: Fraction
    radius: Fraction
    list_size: int


@dataclass(frozen=True)
class CheckEntry:
    name: str
    holds: bool
    certified: bool
    margin: float | None

    def to_json(self) -> dict:
        return {"name": self.name, "holds": self.holds,
                "certified": self.certified, "margin": self.margin}


@dataclass(frozen=True)
class WindowReport:
    entries: tuple[CheckEntry, ...]
    window_empty: bool
    ok: bool | None  # conjunction of the entries, None without (m, n)

    def to_json(self) -> dict:
        return {"checks": [e.to_json() for e in self.entries],
                "window_empty": self.window_empty, "ok": self.ok}


# ---------------------------------------------------------------------------
# individual validators
# ---------------------------------------------------------------------------

def check_field_size(q: int, n: int, c: int) -> bool:
    """q >= n^(c/(c-1)), decided exactly as q^(c-1) >= n^c."""
    if q < 2 or n < 2:
        raise ValueError(f"need q, n >= 2, got q={q}, n={n}")
    if c < 5:
        raise ValueError(f"need c >= 5, got c={c}")
    return q ** (c - 1) >= n**c


def sqrt_window_holds(c: int, q: int, h: int, n: int) -> bool:
    """n <= sqrt(log2 q) * sqrt(c/8) * h, squared to 8n^2 <= c h^2 log2 q."""
    sign = certify.compare_to_log2_multiple(
        Fraction(8 * n * n), Fraction(c * h * h), q)
    return sign <= 0


def exp_window_holds(c: int, h: int, n: int) -> bool:
    """n <= e^(h/(4c^3)) * (c/2) * h, via ln(2n/(ch)) <= h/(4c^3)."""
    v = Fraction(2 * n, c * h)
    x = Fraction(h, 4 * c**3)
    return certify.compare_ln(v, x) <= 0


def h_bound_holds(c: int, q: int, h: int, m: int) -> bool:
    """h <= q^(-1/c) * m, decided exactly as h^c * q <= m^c."""
    return h**c * q <= m**c


def window_empty(c: int, q: int, h: int) -> bool:
    """No integer n satisfies 3ch < n <= min(sqrt-window, exp-window)."""
    x_int = 3 * c * h + 1
    u1_below = certify.compare_to_log2_multiple(
        Fraction(8 * x_int * x_int), Fraction(c * h * h), q) > 0
    u2_below = certify.compare_ln(
        Fraction(2 * x_int, c * h), Fraction(h, 4 * c**3)) > 0
    return u1_below or u2_below


def _sqrt_margin(c, q, h, n):
    lo, hi = certify.log2_interval(q, 64)
    mid = (lo + hi) / 2
    return certify.approx_float(Fraction(c * h * h) * mid - 8 * n * n)


def _exp_margin(c, h, n):
    v = Fraction(2 * n, c * h)
    if v <= 0:
        return None
    lo, hi = certify.ln_interval(v, 64)
    return certify.approx_float(Fraction(h, 4 * c**3) - (lo + hi) / 2)


def check_window_1_3(c: int, q: int, h: int, m: int | None = None,
                     n: int | None = None) -> WindowReport:
    """All window conditions of the random-puncturing guarantee.

    With m/n omitted the report still decides emptiness of the n-window,
    which depends only on (c, q, h).
    """
    if c < 2 or q < 2 or h < 1:
        raise ValueError(f"need c >= 2, q >= 2, h >= 1, got {c}, {q}, {h}")
    entries = []
    if m is not None:
        hb = h_bound_holds(c, q, h, m)
        entries.append(CheckEntry(
            "h_le_q^(-1/c)m", hb, True,
            certify.approx_float(Fraction(m**c - h**c * q, m**c))))
    if n is not None:
        lower = 3 * c * h < n
        entries.append(CheckEntry("3ch_lt_n", lower, True,
                                  float(n - 3 * c * h)))
        entries.append(CheckEntry("n_le_sqrt_window",
                                  sqrt_window_holds(c, q, h, n), True,
                                  _sqrt_margin(c, q, h, n)))
        entries.append(CheckEntry("n_le_exp_window",
                                  exp_window_holds(c, h, n), True,
                                  _exp_margin(c, h, n)))
    empty = window_empty(c, q, h)
    ok = all(e.holds for e in entries) if (m is not None and n is not None) else None
    return WindowReport(tuple(entries), empty, ok)


def check_eq2(n: int, c: int, h: int, L: int) -> bool:
    """(n + 2chL)/(L+1) < 3ch, exact rationals; L is recomputed, not trusted."""
    if h < 1 or c < 1 or n < 1:
        raise ValueError(f"need positive parameters, got n={n}, c={c}, h={h}")
    expected = n // (c * h)
    if L != expected:
        raise ValueError(f"L must equal floor(n/(ch)) = {expected}, got {L}")
    if L < 3:
        raise ValueError(f"the puncturing regime needs L >= 3, got L={L}")
    return n + 2 * c * h * L < 3 * c * h * (L + 1)


def check_eq3(c: int, q: int) -> bool:
    """sqrt(c/8) * sqrt(log2 q) / q^(1/c) < 1/2.

    Raised to the c-th power this is c^c (log2 q)^c < 2^c q^2, decided on
    integer brackets of log2 q and, when those straddle, on certified
    interval enclosures with exact rational endpoint arithmetic.
    """
    if c < 1 or q < 2:
        raise ValueError(f"need c >= 1 and q >= 2, got c={c}, q={q}")
    rhs = 2**c * q * q
    cc = c**c
    lo, hi = certify.log2_brackets(q)
    if lo == hi:
        return cc * lo**c < rhs
    if cc * hi**c <= rhs:
        return True
    if cc * lo**c >= rhs:
        return False
    for prec in certify.PRECISIONS:
        flo, fhi = certify.log2_interval(q, prec)
        if cc * fhi**c < rhs:
            return True
        if cc * flo**c >= rhs:
            return False
    raise UncertifiedComparison(f"could not certify eq3 at c={c}, q={q}")


def check_eq4(n: int, m: int, c: int, q: int, h: int) -> bool:
    """2n^2/m < (1/12) h log2 q, decided as 24 n^2 < h m log2 q."""
    if min(n, m, c, q, h) < 1:
        raise ValueError("all parameters must be positive")
    sign = certify.compare_to_log2_multiple(
        Fraction(24 * n * n), Fraction(h * m), q)
    return sign < 0


def johnson_profile(epsilon, n: int, q: int) -> JohnsonProfile:
    """Rate threshold eps^2, radius 1 - eps, guaranteed list size q n^2."""
    eps = Fraction(epsilon)
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must lie in (0,1), got {eps}")
    if n < 1 or q < 2:
        raise ValueError(f"need n >= 1 and q >= 2, got n={n}, q={q}")
    return JohnsonProfile(eps * eps, 1 - eps, q * n * n)


def singleton_gap(n: int, q: int, d: int, *, size: int | None = None,
                  k: int | None = None) -> int:
    """(n - d + 1) - ceil(log_q |C|); zero exactly for MDS codes.

    A negative gap means the metadata violates the Singleton bound and is
    rejected as an impossible input.
    """
    if d < 1 or d > n:
        raise InvalidDistance(f"distance {d} outside [1, {n}]")
    if (size is None) == (k is None):
        raise ValueError("give exactly one of size= or k=")
    if k is None:
        if size < 1:
            raise ValueError(f"need |C| >= 1, got {size}")
        k = 0
        while q**k < size:
            k += 1
    gap = (n - d + 1) - k
    if gap < 0:
        raise InvalidDistance(
            f"gap {gap} < 0: no code with |C| >= q^{k} can have distance {d}")
    return gap


def main_params(c: int, epsilon, n: int, q: int) -> MainTheoremParams:
    """Validate and derive every quantity of the main rate guarantee.

    Also emits the instantiation used by the reduction to the puncturing
    setting: m = q and h = k - 1.
    """
    if c < 5:
        raise ValueError(f"need c >= 5, got c={c}")
    eps = Fraction(epsilon)
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must lie in (0,1), got {eps}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    factor_prime_power(q)  # NotPrimePower if q is not one
    if not check_field_size(q, n, c):
        raise FieldSizeTooSmall(f"q={q} < n^(c/(c-1)) for n={n}, c={c}")
    k = math.ceil(eps * n / (3 * c))
    return MainTheoremParams(
        c=c, epsilon=eps, n=n, q=q, k=k,
        L_main=math.ceil(Fraction(3) / eps),
        rate_bound=eps / (3 * c),
        failure_exponent=eps * n / (13 * c),
        m=q, h=k - 1)


def puncturing_params(c: int, q: int, h: int, m: int, n: int) -> PuncturingTheoremParams:
    if min(c, h, n) < 1 or q < 2 or m < n:
        raise ValueError("need c, h, n >= 1, q >= 2, m >= n")
    return PuncturingTheoremParams(
        c=c, q=q, h=h, m=m, n=n,
        radius=1 - Fraction(3 * c * h, n),
        list_size=n // (c * h),
        failure_exponent=Fraction(h, 4))


def main_report(p: MainTheoremParams) -> dict:
    """JSON-friendly report for the CLI; the capacity comparison is the
    informational ratio rate/epsilon only, with no verdict."""
    return {
        "c": p.c,
        "epsilon": str(p.epsilon),
        "n": p.n,
        "q": p.q,
        "k": p.k,
        "L": p.L_main,
        "rate": str(p.rate()),
        "rate_bound": str(p.rate_bound),
        "failure_exponent": str(p.failure_exponent),
        "reduction_m": p.m,
        "reduction_h": p.h,
        "capacity_ratio_rate_over_eps": str(p.rate() / p.epsilon),
        "checks": [
            {"name": "q_ge_n^(c/(c-1))", "holds": check_field_size(p.q, p.n, p.c),
             "certified": True, "margin": None},
            {"name": "rate_ge_eps/(3c)",
             "holds": p.rate() >= p.rate_bound, "certified": True,
             "margin": certify.approx_float(p.rate() - p.rate_bound)},
            {"name": "h_le_eps*n/(3c)",
             "holds": Fraction(p.h) <= p.epsilon * p.n / (3 * p.c),
             "certified": True, "margin": None},
        ],
    }
