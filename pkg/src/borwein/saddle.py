"""Saddle-point location and the scalar quantities attached to it.

For the shared j=0 polynomial prod_{k=2}^{n-1}(1+q^k+q^{2k}) of the D/E/F
families, the radius r used in the coefficient integrals solves

    f(n, r) = r * P'(r) / P(r) = m,

which has a unique positive solution for 0 < m < n^2-n-2, lying in
(r_cutoff(n), 1] whenever n <= m <= (n^2-n-2)/2.  This module evaluates f,
the curvature g of log P at the saddle, the cut-off parameters, and the
elementary power sums used throughout the error bounds.

All functions are pure, reentrant and thread-safe.  Reals are ordinary
binary doubles; the downstream inequalities carry margins far wider than
the ~1e-15 relative error this costs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

ALPHA = 2.0 / math.sqrt(3.0)

_R_UNIT_EPS = 1e-14  # |1-r| below this switches to the r=1 limit branches
_MAX_BISECT = 200


class NoConvergence(Exception):
    """The saddle bisection failed to meet its residual bound."""


@dataclass(frozen=True)
class SaddleContext:
    """Saddle radius plus every derived cut-off for one (n, m) pair."""

    n: int
    m: int
    r: float
    g: float
    lam: float
    r0: float
    theta0: float
    j0: int
    alpha: float = ALPHA


def f(n: int, r: float) -> float:
    """The monotone saddle function sum_{k=2}^{n-1} k(2r^{2k}+r^k)/(1+r^k+r^{2k}).

    Equals r P'(r)/P(r) for P = prod_{k=2}^{n-1}(1+q^k+q^{2k}); increases
    from 0 at r=0 through (n^2-n-2)/2 at r=1 toward n^2-n-2 as r -> inf.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if r <= 0:
        raise ValueError("r must be positive")
    total = 0.0
    if r <= 1.0:
        for k in range(2, n):
            t = r**k
            total += k * t * (2.0 * t + 1.0) / (1.0 + t * (1.0 + t))
    else:
        # divide through by r^{2k}; s = r^{-k} keeps everything bounded
        for k in range(2, n):
            s = r**-k
            total += k * (2.0 + s) / (1.0 + s * (1.0 + s))
    return total


def g(n: int, r: float) -> float:
    """Negative second derivative of log P(r e^{i t}) in t at t=0.

    sum_{k=2}^{n-1} k^2 r^k (1+4r^k+r^{2k}) / (1+r^k+r^{2k})^2; the summand
    is symmetric under r -> 1/r.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if r <= 0:
        raise ValueError("r must be positive")
    total = 0.0
    for k in range(2, n):
        t = r**k if r <= 1.0 else r**-k
        total += k * k * t * (1.0 + t * (4.0 + t)) / (1.0 + t * (1.0 + t)) ** 2
    return total


def power_sum(m: int, n: int, r: float) -> float:
    """sum_{k=1}^{n} k^m r^k by direct summation (m in 0..4)."""
    if m not in (0, 1, 2, 3, 4):
        raise ValueError("power must be one of 0..4")
    return sum(k**m * r**k for k in range(1, n + 1))


def log_p0(n: int, r: float) -> float:
    """log of prod_{k=2}^{n-1}(1 + r^k + r^{2k}), stable up to n in the thousands.

    The value itself is on the order of 3^n, so only the log is ever formed.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    if r <= 1.0:
        return sum(math.log1p(r**k * (1.0 + r**k)) for k in range(2, n))
    log_r = math.log(r)
    total = 0.0
    for k in range(2, n):
        s = r**-k
        total += 2 * k * log_r + math.log1p(s * (1.0 + s))
    return total


def r_cutoff(n: int) -> float:
    """Lower bound exp(-sqrt(alpha/n)) for the saddle radius, alpha = 2/sqrt(3)."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.exp(-math.sqrt(ALPHA / n))


def theta_cutoff(n: int, r: float) -> float:
    """Angular cut-off (1-r)/(3(1-r^n)), with its limit 1/(3n) at r=1."""
    if abs(1.0 - r) <= _R_UNIT_EPS:
        return 1.0 / (3.0 * n)
    return (1.0 - r) / (3.0 * (1.0 - r**n))


def lam(n: int, r: float) -> float:
    """The geometric sum (r - r^{n+1})/(1-r) = sum_{k<=n} r^k, with lam(n,1) = n."""
    if abs(1.0 - r) <= _R_UNIT_EPS:
        return float(n)
    return (r - r ** (n + 1)) / (1.0 - r)


def j_cutoff(n: int) -> int:
    """Summation-index cut-off floor(log2 n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return n.bit_length() - 1


def solve_saddle(n: int, m: int) -> SaddleContext:
    """Solve f(n, r) = m by bracketed bisection and fill every derived field.

    The residual satisfies |f(n,r) - m| <= 1e-10 * max(1, m).  Bisection is
    chosen over Newton: f is monotone and costs O(n) per evaluation, so
    robustness wins.  Raises :class:`NoConvergence` after the iteration cap,
    which would signal a numeric pathology and must not be silenced.
    """
    deg = n * n - n - 2
    if n < 2 or not 0 < m < deg:
        raise ValueError(f"need n >= 2 and 0 < m < {deg}")
    tol = 1e-10 * max(1.0, float(m))

    f_at_one = f(n, 1.0)
    if abs(f_at_one - m) <= tol:
        return _context(n, m, 1.0)
    if m < f_at_one:
        lo, hi = 0.0, 1.0
    else:
        lo, hi = 1.0, 2.0
        while f(n, hi) < m:
            lo, hi = hi, hi * 2.0
            if hi > 2.0**40:
                raise NoConvergence("upper bracket expansion ran away")
    r = None
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        val = f(n, mid)
        if abs(val - m) <= tol:
            r = mid
            break
        if val < m:
            lo = mid
        else:
            hi = mid
    if r is None:
        raise NoConvergence(f"no saddle within tolerance for n={n}, m={m}")
    return _context(n, m, r)


def _context(n: int, m: int, r: float) -> SaddleContext:
    return SaddleContext(
        n=n,
        m=m,
        r=r,
        g=g(n, r),
        lam=lam(n, r),
        r0=r_cutoff(n),
        theta0=theta_cutoff(n, r),
        j0=j_cutoff(n),
    )
