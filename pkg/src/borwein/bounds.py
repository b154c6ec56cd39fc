"""Numeric error budgets for the coefficient positivity certificate.

The coefficient [q^m] of a family polynomial is written as a circle
integral around the saddle radius and split into a Gaussian main term plus
four relative errors:

  eps0  Gaussian approximation error of the primary peak (j=0, small angle),
  eps1  secondary peaks (1 <= j <= j0, small angle),
  eps2  tails (j <= j0, angle beyond the cut-off),
  eps3  remainders (j > j0).

Each is evaluated here as its proven closed-form upper bound; once their
sum drops below 1 the coefficient is certifiably positive with the stated
logarithmic lower bound.  The defining integrals themselves are only
sampled indirectly (see :func:`gaussian_estimate` and its exact-coefficient
oracle in the tests), since their suprema are not directly computable.

Everything is deterministic: the quadrature refines a fixed way, so
certificates reproduce bit-for-bit in one floating-point environment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .polyring import q_binomial
from .saddle import (
    ALPHA,
    j_cutoff,
    lam,
    log_p0,
    r_cutoff,
    solve_saddle,
)

FAMILIES = ("D", "E", "F")

# per-family constants of the secondary-peak and tail bounds
EPS1_CONST = {"D": 0.187, "E": 0.043, "F": 0.043}
TAIL_FACTOR_BOUND = {"D": 1.185, "E": 1.329, "F": 1.329}

REFERENCE_N = 7000  # fixed reference point of the tail bound's monotonicity argument


# ---------------------------------------------------------------------------
# complementary error function
#
# Implemented from scratch (the certificate chain should not silently depend
# on libm behaviour): Maclaurin series below 2, Legendre continued fraction
# beyond.  Validated in the tests against an embedded high-precision table.


def erfc(x: float) -> float:
    """Complementary error function.

    Relative error below ~1e-13 on [0, 6]; far smaller absolute error
    beyond, where the value itself decays like exp(-x^2).
    """
    if x < 0:
        return 2.0 - erfc(-x)
    if x < 2.0:
        return 1.0 - _erf_series(x)
    return _erfc_continued_fraction(x)


def _erf_series(x: float) -> float:
    # erf(x) = 2/sqrt(pi) sum_k (-1)^k x^{2k+1} / (k! (2k+1))
    term = x
    total = x
    k = 0
    xx = x * x
    while True:
        term *= -xx * (2 * k + 1) / ((k + 1) * (2 * k + 3))
        total += term
        k += 1
        if abs(term) < 1e-18 * abs(total) or k > 200:
            break
    return 2.0 / math.sqrt(math.pi) * total


def _erfc_continued_fraction(x: float) -> float:
    # erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    # evaluated by the modified Lentz algorithm.
    tiny = 1e-300
    b = x
    c = 1e300
    d = 0.0
    h = b if b != 0 else tiny
    for k in range(1, 300):
        a = k / 2.0
        d = b + a * d
        d = 1.0 / (d if d != 0 else tiny)
        c = b + a / (c if c != 0 else tiny)
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-17:
            break
    scale = math.exp(-x * x)
    if scale == 0.0:
        return 0.0
    return scale / math.sqrt(math.pi) / h


# ---------------------------------------------------------------------------
# closed-form error bounds


def eps0_bound(lam_value: float) -> float:
    """Primary-peak error bound 7 sqrt(2)/sqrt(3 pi L) + erfc(sqrt(L/84))."""
    if lam_value <= 0:
        raise ValueError("lambda must be positive")
    return 7.0 * math.sqrt(2.0) / math.sqrt(3.0 * math.pi * lam_value) + erfc(
        math.sqrt(lam_value / 84.0)
    )


def eps1_bound(family: str, lam_value: float) -> float:
    """Secondary-peak bound c_family * (1 + sqrt(5)/(3 sqrt(3 L)))."""
    if lam_value <= 0:
        raise ValueError("lambda must be positive")
    return EPS1_CONST[family] * (1.0 + math.sqrt(5.0) / (3.0 * math.sqrt(3.0 * lam_value)))


def secondary_series(family: str, boost: float) -> float:
    """sum_{j>=1} boost^j 27^{-j} C(3j+1, j) w_j with w_j = 1 (D) or 1/(3j+1) (E, F).

    The boost absorbs the uniform per-step slack of the peak-quotient bound
    (1.006, optionally times the 1.0003 radius correction for E).  Terms are
    added until they drop below 1e-14.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if boost < 1.0:
        raise ValueError("boost must be at least 1")
    total = 0.0
    j = 1
    while True:
        term = boost**j * math.comb(3 * j + 1, j) / 27.0**j
        if family != "D":
            term /= 3 * j + 1
        total += term
        if term < 1e-14:
            return total
        j += 1


def eps3_bound(family: str, n: int) -> float:
    """Remainder bound: sqrt(c log2 / (3 n log n)) + 2^{s - 4n/21} n^2.

    (c, s) = (4, -1/2) for D and (16, 1/2) for E; F shares E's form through
    the reciprocal tilde quotients.
    """
    if n <= 32:
        raise ValueError("remainder bound requires n > 32")
    if family == "D":
        c, s = 4.0, -0.5
    else:
        c, s = 16.0, 0.5
    return math.sqrt(c * math.log(2.0) / (3.0 * n * math.log(n))) + 2.0 ** (
        s - 4.0 * n / 21.0
    ) * float(n) ** 2


def phi_star(n: int, r: float, rho: float) -> float:
    """Tail-exponent minorant (5/12)(1 - sqrt((1+1e-4)/(1+rho^2))) (1-r^{n/12})/(1-r).

    Not clamped: at rho = 0 the 1e-4 guard makes the value slightly
    negative, and callers see that sign.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    if r == 1.0:
        growth = n / 12.0
    else:
        growth = (1.0 - r ** (n / 12.0)) / (1.0 - r)
    return (5.0 / 12.0) * (1.0 - math.sqrt((1.0 + 1e-4) / (1.0 + rho * rho))) * growth


def integrate(func: Callable[[float], float], a: float, b: float, tol: float = 1e-9) -> float:
    """Adaptive Simpson quadrature with absolute tolerance ``tol``.

    Deterministic refinement (no randomness), so results are reproducible
    bit-for-bit for a given float environment.
    """
    if not a < b:
        raise ValueError("require a < b")
    fa, fb = func(a), func(b)
    m = 0.5 * (a + b)
    fm = func(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_step(func, a, b, fa, fm, fb, whole, tol, 50)


def _simpson_step(func, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = func(lm), func(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    err = left + right - whole
    if depth <= 0 or abs(err) <= 15.0 * tol:
        return left + right + err / 15.0
    return _simpson_step(func, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + _simpson_step(
        func, m, b, fm, frm, fb, right, tol / 2.0, depth - 1
    )


@lru_cache(maxsize=None)
def eps2_inner_factor(quad_tol: float = 1e-9) -> float:
    """sqrt(24/(5 pi)) * (T1 + T2) at the fixed reference point n=7000.

    T1 = (1-r0)^{-1/2} * integral_{1/3}^{3/2} exp(-phi_star(7000, r0, rho)) drho,
    T2 = pi (1-r0)^{-3/2} exp(-phi_star(7000, r0, 3/2)).
    """
    n0 = REFERENCE_N
    r0 = r_cutoff(n0)
    integral = integrate(lambda rho: math.exp(-phi_star(n0, r0, rho)), 1.0 / 3.0, 1.5, quad_tol)
    inv = 1.0 / (1.0 - r0)
    t1 = math.sqrt(inv) * integral
    t2 = math.pi * inv**1.5 * math.exp(-phi_star(n0, r0, 1.5))
    return math.sqrt(24.0 / (5.0 * math.pi)) * (t1 + t2)


def eps2_bound(family: str, n: int) -> float:
    """Tail bound S_family * inner factor, S in {1.185, 1.329, 1.329}.

    Uses the fixed reference point (n0=7000, r0(7000)) exactly as the
    monotonicity argument allows; valid as a certificate ingredient for
    n > 7000, though evaluable for any n > 32.
    """
    if n <= 32:
        raise ValueError("tail bound requires n > 32")
    return TAIL_FACTOR_BOUND[family] * eps2_inner_factor()


def eps2_diagnostic(family: str, n: int, r: float, quad_tol: float = 1e-9) -> float:
    """Tail bound recomputed at the actual (n, r) instead of the reference point.

    Diagnostic only; certificates use :func:`eps2_bound`.
    """
    if n <= 32:
        raise ValueError("tail bound requires n > 32")
    from .saddle import g as curvature

    j0 = j_cutoff(n)
    tail = tilde_tail_sum(family, n, r, j0)
    growth = lam(n, r) / r if r != 1.0 else float(n)
    integral = integrate(lambda rho: math.exp(-phi_star(n, r, rho)), 1.0 / 3.0, 1.5, quad_tol)
    bracket = integral / growth + math.pi * math.exp(-phi_star(n, r, 1.5))
    return math.sqrt(curvature(n, r) / (2.0 * math.pi)) * tail * 2.0 * bracket


# ---------------------------------------------------------------------------
# tilde majorants
#
# For each family the j-th summand P_{n,j}(q) factors into a part with
# nonnegative coefficients times a product of binomials 1 - q^k; replacing
# every such binomial by 1 + r^k (and the lone trinomial quotient of the E
# family by (1-r^{6j+1})/(1-r)) yields P~_{n,j}(r) with
#
#     P~_{n,0}(r) = P_{n,0}(r)   and   P~_{n,j}(|q|) >= |P_{n,j}(q)|.
#
# tilde_value builds the majorant directly from those factorizations in log
# space (the only construction that keeps the majorant property at the
# factorization seam j ~ n/6, at the top index j = floor((n-1)/3), and in
# the borderline case n = 3j+1).  tilde_ratio exposes the closed-form
# successive-quotient expressions used by the remainder analysis.


@dataclass(frozen=True)
class TildeValue:
    """log of the tilde majorant of one family summand at radius r."""

    family: str
    n: int
    j: int
    r: float
    log_value: float

    @property
    def value(self) -> float:
        return math.exp(self.log_value)


def _ratio_one_minus(a: int, b: int, r: float) -> float:
    """(1 - r^a)/(1 - r^b), extended by its limit a/b at r = 1."""
    if r == 1.0:
        return a / b
    return (1.0 - r**a) / (1.0 - r**b)


def _trinomial(x: float) -> float:
    return 1.0 + x * (1.0 + x)


def tilde_ratio(family: str, n: int, j: int, r: float) -> float:
    """Closed-form bound expression for P~_{n,j}(r) / P~_{n,j-1}(r).

    Piecewise in j with the split at floor((n-1)/6).  The second branch
    carries re-derived exponents 3 floor((n-1)/3) +- 3j + 3 in its binomial
    quotient; the variant without the +3 degenerates to zero at the top
    index, which no quotient of majorants can do.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not 1 <= j <= (n - 1) // 3:
        raise ValueError(f"j={j} out of range for n={n}")
    if not 0 < r <= 1:
        raise ValueError("r must lie in (0, 1]")
    if family == "F":
        return r**3 * tilde_ratio("E", n, j, r)
    if j <= (n - 1) // 6:
        top = (
            (1.0 + r ** (3 * n - 9 * j))
            * (1.0 + r ** (3 * n - 9 * j + 3))
            * (1.0 + r ** (3 * n - 9 * j + 6))
        )
        den = (
            _trinomial(r ** (n - 3 * j + 1))
            * _trinomial(r ** (n - 3 * j + 2))
            * _trinomial(r ** (n - 3 * j + 3))
            * (1.0 + r ** (3 * n - 3 * j))
        )
        if family == "D":
            frac = _ratio_one_minus(3 * j - 1, 6 * j + 3, r) * _ratio_one_minus(
                3 * j + 1, 6 * j, r
            )
        else:
            frac = (
                _ratio_one_minus(3 * j - 1, 6 * j + 3, r)
                * _ratio_one_minus(3 * j - 2, 6 * j, r)
                * _ratio_one_minus(6 * j + 1, 6 * j - 5, r)
            )
        return r ** (6 * j) * top / den * frac
    big = (n - 1) // 3
    if family == "D":
        top = (1.0 + r ** (3 * j - 1)) * (1.0 + r ** (3 * j + 1))
    else:
        top = (1.0 + r ** (3 * j - 1)) * (1.0 + r ** (3 * j - 2))
    top *= (
        (1.0 + r ** (n - 3 * j)) * (1.0 + r ** (n - 3 * j + 1)) * (1.0 + r ** (n - 3 * j + 2))
    )
    den = (
        (1.0 + r ** (3 * big + 3 * j + 3))
        * (1.0 + r ** (3 * big - 3 * j + 3))
        * (1.0 + r ** (3 * n - 3 * j))
    )
    frac = _ratio_one_minus(3 * big + 3 * j + 3, 6 * j + 3, r) * _ratio_one_minus(
        3 * big - 3 * j + 3, 6 * j, r
    )
    return r ** (6 * j) * top / den * frac


def tilde_ratio_limit(family: str, j: int) -> float:
    """Closed-form bound on the first-branch quotient, uniform in n and r.

    (3j-1)(3j+1)/(18j(2j+1)) for D; E carries the extra telescoping factor
    (6j+1)/(6j-5) and a radius correction r^{-3/2} handled by the caller.
    """
    if family == "D":
        return (3 * j - 1) * (3 * j + 1) / (18.0 * j * (2 * j + 1))
    return (3 * j - 1) * (3 * j - 2) * (6 * j + 1) / (18.0 * j * (2 * j + 1) * (6 * j - 5))


@lru_cache(maxsize=None)
def _qbinomial_value(a: int, b: int, step: int, r: float) -> float:
    acc = 0.0
    for c in reversed(q_binomial(a, b, step).coeffs):
        acc = acc * r + c
    return acc


def tilde_value(family: str, n: int, j: int, r: float) -> TildeValue:
    """The tilde majorant P~_{n,j}(r), in log space to survive n ~ 7000.

    j=0 reproduces P_{n,0}(r) exactly.  For D at the borderline n = 3j+1 the
    summand is identically zero and log_value is -inf.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not 0 <= j <= (n - 1) // 3:
        raise ValueError(f"j={j} out of range for n={n}")
    if not 0 < r <= 1:
        raise ValueError("r must lie in (0, 1]")
    log_r = math.log(r)
    if j == 0:
        lv = log_p0(n, r)
        return TildeValue(family, n, j, r, lv)
    if n == 3 * j + 1:
        # borderline: E equals its B-summand q^{3j^2+3j} (q;q)_{3j}/(q^3;q^3)_j,
        # F its reversal; majorize each binomial by 1 + r^k
        if family == "D":
            return TildeValue(family, n, j, r, -math.inf)
        shift = 3 * j * j + 3 * j if family == "E" else 3 * j * j - 2
        lv = shift * log_r + sum(
            math.log1p(r**k) for k in range(1, 3 * j + 1) if k % 3
        )
        return TildeValue(family, n, j, r, lv)
    big = (n - 1) // 3
    lv = (3 * j * j + 3 * j) * log_r
    if j <= (n - 2) // 6:
        lv += math.log(_qbinomial_value(3 * j + 1, j, 3, r))
        lv += sum(math.log(_trinomial(r**k)) for k in range(3 * j + 2, n - 3 * j))
        lv += sum(math.log1p(r ** (3 * i)) for i in range(n - 3 * j, n - j))
        if family in ("E", "F"):
            lv += math.log(_ratio_one_minus(3, 9 * j + 3, r))
            lv += math.log(_ratio_one_minus(6 * j + 1, 1, r))
    else:
        lv += math.log(_qbinomial_value(big + j + 1, 2 * j + 1, 3, r))
        lv += sum(math.log1p(r**k) for k in range(n - 3 * j, 3 * j + 2) if k % 3)
        lv += sum(math.log1p(r ** (3 * i)) for i in range(big + j + 2, n - j))
        if family in ("E", "F"):
            lv += math.log1p(r) - math.log1p(r ** (3 * j + 1))
    if family == "F":
        lv += 3 * j * log_r
    return TildeValue(family, n, j, r, lv)


def tilde_tail_sum(family: str, n: int, r: float, j_max: int | None = None) -> float:
    """sum_{j=0}^{j_max} P~_{n,j}(r) / P~_{n,0}(r); j_max defaults to floor(log2 n)."""
    if j_max is None:
        j_max = j_cutoff(n)
    j_max = min(j_max, (n - 1) // 3)
    base = tilde_value(family, n, 0, r).log_value
    total = 0.0
    for j in range(0, j_max + 1):
        lv = tilde_value(family, n, j, r).log_value
        if lv > -math.inf:
            total += math.exp(lv - base)
    return total


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class ErrorBudget:
    """Per-family error bounds and the resulting coefficient lower bound."""

    family: str
    n: int
    m: int | None
    eps0: float
    eps1: float
    eps2: float
    eps3: float
    total: float
    log_lower_bound: float | None
    valid: bool

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "eps0": self.eps0,
            "eps1": self.eps1,
            "eps2": self.eps2,
            "eps3": self.eps3,
            "total": self.total,
            "log_lower_bound": self.log_lower_bound,
            "valid": self.valid,
        }


def certificate(n: int, m: int, family: str) -> ErrorBudget:
    """Evaluate all four error bounds at the (n, m) saddle point.

    The certificate is declared valid only for n > 7000 (the range where
    every bound is proven) with total error below 1; the log lower bound is
    log P_{n,0}(r) - m log r - log sqrt(2 pi g) + log(1 - total).
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    deg = n * n - n - 2
    if not n <= m <= deg // 2:
        raise ValueError(f"m must lie in [n, {deg // 2}]")
    ctx = solve_saddle(n, m)
    e0 = eps0_bound(ctx.lam)
    e1 = eps1_bound(family, ctx.lam)
    e2 = eps2_bound(family, n)
    e3 = eps3_bound(family, n)
    total = e0 + e1 + e2 + e3
    log_lower = None
    if total < 1.0:
        log_lower = (
            log_p0(n, ctx.r)
            - m * math.log(ctx.r)
            - 0.5 * math.log(2.0 * math.pi * ctx.g)
            + math.log1p(-total)
        )
    return ErrorBudget(
        family=family,
        n=n,
        m=m,
        eps0=e0,
        eps1=e1,
        eps2=e2,
        eps3=e3,
        total=total,
        log_lower_bound=log_lower,
        valid=n > 7000 and total < 1.0,
    )


def table_bounds(n: int) -> list[ErrorBudget]:
    """Worst-case-over-m budgets per family at order n (the summary table).

    eps0 and eps1 are evaluated at the minimal lambda over the admissible
    m-range, i.e. at the cut-off radius r0(n); eps2 and eps3 depend on n
    alone.
    """
    lam_min = lam(n, r_cutoff(n))
    rows = []
    for family in FAMILIES:
        e0 = eps0_bound(lam_min)
        e1 = eps1_bound(family, lam_min)
        e2 = eps2_bound(family, n)
        e3 = eps3_bound(family, n)
        total = e0 + e1 + e2 + e3
        rows.append(
            ErrorBudget(
                family=family,
                n=n,
                m=None,
                eps0=e0,
                eps1=e1,
                eps2=e2,
                eps3=e3,
                total=total,
                log_lower_bound=None,
                valid=n > 7000 and total < 1.0,
            )
        )
    return rows


def gaussian_estimate(n: int, m: int) -> float:
    """Uncorrected central estimate P_{n,0}(r) / (r^m sqrt(2 pi g))."""
    ctx = solve_saddle(n, m)
    return math.exp(
        log_p0(n, ctx.r) - m * math.log(ctx.r) - 0.5 * math.log(2.0 * math.pi * ctx.g)
    )
