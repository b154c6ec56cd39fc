"""Exact construction and cross-validation of the Borwein polynomial families.

The triple (A_n, B_n, C_n) is defined by the residue-class sieve of

    prod_{i=1}^{n} (1 - q^{3i-2})(1 - q^{3i-1})
        = A_n(q^3) - q B_n(q^3) - q^2 C_n(q^3),

and the Borwein conjecture (now a theorem) asserts all three have
nonnegative coefficients.  This module builds the same polynomials by
several independent routes -- the product sieve, Andrews' term-by-term
expansions, and the alternating q-binomial sums -- together with the
summand decomposition B_{n,j} = q(1+q^n) D_{n,j} + E_{n,j} whose families
D, E, F drive all asymptotic work.  Everything here is exact integer
arithmetic; there is no floating point in this module.

All functions are pure and safe for parallel invocation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .polyring import (
    DensePoly,
    ONE,
    ZERO,
    div_one_minus_list,
    from_terms,
    mul,
    mul_one_minus_list,
    mul_sparse_list,
    power_series_div,
    product_one_minus,
    q_binomial,
    reciprocal,
    trim,
)

SIEVE_FAMILIES = ("A", "B", "C")
SUM_FAMILIES = ("B", "D", "E", "F")
LIMIT_FAMILIES = ("B", "C", "D", "E", "F")


class NonIntegralExponent(Exception):
    """A q-exponent in an alternating sum failed to be an integer."""


@dataclass(frozen=True)
class BorweinTriple:
    """The sieve triple (n, A_n, B_n, C_n)."""

    n: int
    A: DensePoly
    B: DensePoly
    C: DensePoly

    def validate(self) -> None:
        """Check the defining sieve identity and C = reversal of B exactly."""
        if self.reassemble() != base_product(self.n):
            raise ValueError(f"sieve identity fails at n={self.n}")
        expect_c = reciprocal(self.B) if not self.B.is_zero() else ZERO
        if self.C != expect_c:
            raise ValueError(f"C is not the reciprocal of B at n={self.n}")

    def reassemble(self) -> DensePoly:
        """A(q^3) - q B(q^3) - q^2 C(q^3)."""
        terms: list[tuple[int, int]] = []
        for i, c in enumerate(self.A.coeffs):
            terms.append((3 * i, c))
        for i, c in enumerate(self.B.coeffs):
            terms.append((3 * i + 1, -c))
        for i, c in enumerate(self.C.coeffs):
            terms.append((3 * i + 2, -c))
        return from_terms(terms)


@dataclass(frozen=True)
class FamilyPoly:
    """Per-index terms and total of one polynomial family at fixed n."""

    family: str
    n: int
    terms: tuple[DensePoly, ...]
    total: DensePoly

    def __post_init__(self):
        acc = ZERO
        for t in self.terms:
            acc = acc + t
        if acc != self.total:
            raise ValueError("total is not the sum of the terms")
        expected = expected_degree(self.family, self.n)
        if expected is not None and self.total.degree != expected:
            raise ValueError(
                f"deg {self.family}_{self.n} = {self.total.degree}, expected {expected}"
            )
        if self.family == "D" and self.n >= 2 and self.total != reciprocal(self.total):
            raise ValueError(f"D_{self.n} is not palindromic")


def expected_degree(family: str, n: int) -> int | None:
    """Known degree of the family total: n^2-n-2 for D/E/F, n^2-1 for B (n >= 2)."""
    if n < 2:
        return None
    return n * n - 1 if family == "B" else n * n - n - 2


# ---------------------------------------------------------------------------
# route 1: the product sieve


def sieve_exponents(n: int) -> list[int]:
    """Exponents {3i-2, 3i-1 : i <= n} of the base product."""
    out = []
    for i in range(1, n + 1):
        out.extend((3 * i - 2, 3 * i - 1))
    return out


def base_product(n: int) -> DensePoly:
    """prod_{i<=n} (1-q^{3i-2})(1-q^{3i-1}) = (q;q)_{3n} / (q^3;q^3)_n."""
    return product_one_minus(sieve_exponents(n))


def sieve_classes(coeffs: Iterable[int], classes: int) -> list[list[int]]:
    """Split by exponent residue; classes beyond the first carry negated signs.

    Coefficient signs are the conjecture under test: they are recorded here,
    never asserted.
    """
    parts: list[list[int]] = [[] for _ in range(classes)]
    for e, c in enumerate(coeffs):
        r = e % classes
        parts[r].append(c if r == 0 else -c)
    return [trim(p) for p in parts]


def triple_from_quotient(n: int) -> BorweinTriple:
    """Extract (A_n, B_n, C_n) from the base product by the mod-3 sieve."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b, c = sieve_classes(base_product(n).coeffs, 3)
    return BorweinTriple(n, DensePoly(a), DensePoly(b), DensePoly(c))


# ---------------------------------------------------------------------------
# route 2: Andrews' expansions and the D/E/F decomposition


def _nonmult3_exponents(top: int) -> list[int]:
    """Exponents k <= top with 3 not dividing k, i.e. of (q;q)_top/(q^3;q^3)_{top//3}."""
    return [k for k in range(1, top + 1) if k % 3]


def _product_over(base: list[int], shift: int, one_minus: list[int]) -> list[int]:
    coeffs = list(base)
    for k in one_minus:
        coeffs = mul_one_minus_list(coeffs, k)
    if shift:
        coeffs = [0] * shift + coeffs
    return coeffs


def j_range(n: int) -> range:
    """Summation range j = 0 .. floor((n-1)/3) of the expansions."""
    return range(0, (n - 1) // 3 + 1)


def is_borderline(n: int, j: int) -> bool:
    """True when n = 3j+1, where the generic displays stop being polynomials."""
    return n == 3 * j + 1


def andrews_term(family: str, n: int, j: int) -> DensePoly:
    """The j-th summand of the expansion of B, D, E or F at order n.

    Generic terms are evaluated as the displayed q-factorial quotients (the
    divisions are exact and abort on any nonzero remainder).  The borderline
    case n = 3j+1 uses its alternative definitions: D vanishes, E equals the
    B-summand, and F is the reversed E-summand.  For n = 1 the reversal
    convention gives F_1 = 1, keeping F = reciprocal(E) at every order.
    """
    if family not in SUM_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not 0 <= j <= (n - 1) // 3:
        raise ValueError(f"j={j} out of range for n={n}")

    if is_borderline(n, j):
        if family == "D":
            return ZERO
        body = _product_over([1], 0, _nonmult3_exponents(3 * j))
        if family in ("B", "E"):
            return DensePoly(_product_over(body, 3 * j * j + 3 * j, []))
        # family F: reversal of the E-summand; at j=0 the display exponent
        # 3j^2-2 would be negative, and F_1 := reciprocal(E_1) = 1 instead.
        if j == 0:
            return ONE
        return DensePoly(_product_over(body, 3 * j * j - 2, []))

    shift = 3 * j * j + 3 * j
    if family == "B":
        base = from_terms(
            [(0, 1), (3 * j + 2, -1), (n + 1, 1), (n + 3 * j + 2, -1)]
        ).coeffs
        qq_top = 3 * j
    elif family == "D":
        base = (1,)
        qq_top = 3 * j + 1
    else:  # E and F share the (1-q)-type numerator
        base = (1, -1)
        qq_top = 3 * j
    num_exps = [3 * i for i in range(1, n - j)] + list(range(1, qq_top + 1))
    den_exps = (
        list(range(1, n - 3 * j))
        + [3 * i for i in range(1, 2 * j + 2)]
        + [3 * i for i in range(1, j + 1)]
    )
    coeffs = _product_over(list(base), 0, num_exps)
    coeffs = div_one_minus_list(coeffs, den_exps)
    extra = 3 * j if family == "F" else 0
    return DensePoly([0] * (shift + extra) + coeffs)


def family_sum(family: str, n: int) -> FamilyPoly:
    """All summands plus their total for one of the families B, D, E, F."""
    if family not in SUM_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms = tuple(andrews_term(family, n, j) for j in j_range(n))
    total = ZERO
    for t in terms:
        total = total + t
    return FamilyPoly(family, n, terms, total)


def product_j0(n: int) -> DensePoly:
    """The shared j=0 term prod_{k=2}^{n-1} (1 + q^k + q^{2k}) of D, E and F."""
    coeffs = [1]
    for k in range(2, n):
        coeffs = mul_sparse_list(coeffs, [(0, 1), (k, 1), (2 * k, 1)])
    return DensePoly(coeffs)


def decomposition_check(n: int) -> bool:
    """Exact check of B_n = q (1 + q^n) D_n + E_n from the family sums."""
    b = family_sum("B", n).total
    d = family_sum("D", n).total
    e = family_sum("E", n).total
    lhs = from_terms([(1, 1), (n + 1, 1)])
    return b == mul(lhs, d) + e


def recursion_check(n: int) -> bool:
    """Exact check of A_n = (1+q^{2n-1}) A_{n-1} + q^n (B_{n-1} + C_{n-1})."""
    if n < 1:
        raise ValueError("n must be positive")
    prev = triple_from_quotient(n - 1)
    cur = triple_from_quotient(n)
    rhs = mul(from_terms([(0, 1), (2 * n - 1, 1)]), prev.A) + (
        prev.B + prev.C
    ).shift(n)
    return cur.A == rhs


def quotient_identity_check(family: str, n: int, j: int) -> bool:
    """Cross-multiplied exact identity for successive-term quotients of D or E.

    The quotient P_{n,j}/P_{n,j-1} equals
    q^{6j} (1-q^{n-3j})(1-q^{n-3j+1})(1-q^{n-3j+2})(1-q^{3j-1})(1-q^{u}) /
    ((1-q^{3n-3j})(1-q^{6j+3})(1-q^{6j})) with u = 3j+1 for D and 3j-2 for E.
    """
    if family not in ("D", "E"):
        raise ValueError("quotient identity applies to D and E")
    if not 1 <= j <= (n - 2) // 3:
        raise ValueError(f"j={j} out of range for n={n}")
    u = 3 * j + 1 if family == "D" else 3 * j - 2
    numer = product_one_minus(
        [n - 3 * j, n - 3 * j + 1, n - 3 * j + 2, 3 * j - 1, u]
    ).shift(6 * j)
    denom = product_one_minus([3 * n - 3 * j, 6 * j + 3, 6 * j])
    cur = andrews_term(family, n, j)
    prev = andrews_term(family, n, j - 1)
    return mul(cur, denom) == mul(prev, numer)


# ---------------------------------------------------------------------------
# route 3: alternating q-binomial sums

_ALT_PARAMS = {"A": (1, 0), "B": (-5, -1), "C": (7, 1)}


def altsum(family: str, n: int) -> DensePoly:
    """Alternating sum over j of (-1)^j q^{j(9j+s)/2} [2n; n+3j+d]_q.

    (s, d) = (1, 0) for A, (-5, -1) for B, (7, 1) for C.  The j-range comes
    from the vanishing of out-of-range q-binomials, never a fixed window.
    """
    if family not in SIEVE_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    s, d = _ALT_PARAMS[family]
    # bottom index n+3j+d must lie in [0, 2n]
    lo = -((n + d) // 3)
    hi = (n - d) // 3
    binom_row = _binomial_row(2 * n, [n + 3 * j + d for j in range(lo, hi + 1)])
    acc = ZERO
    for j in range(lo, hi + 1):
        bottom = n + 3 * j + d
        if bottom < 0 or bottom > 2 * n:
            continue
        e2 = j * (9 * j + s)
        assert e2 % 2 == 0 and e2 >= 0
        term = binom_row[bottom].shift(e2 // 2)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _binomial_row(a: int, bottoms: list[int]) -> dict[int, DensePoly]:
    """[a; b]_q for each requested b, built incrementally along the row."""
    wanted = sorted(set(b for b in bottoms if 0 <= b <= a))
    out: dict[int, DensePoly] = {}
    if not wanted:
        return out
    coeffs = [1]
    b = 0
    for target in wanted:
        while b < target:
            coeffs = mul_one_minus_list(coeffs, a - b)
            coeffs = div_one_minus_list(coeffs, [b + 1])
            b += 1
        out[target] = DensePoly(coeffs)
    return out


# ---------------------------------------------------------------------------
# limiting series (n -> infinity)


def _euler_truncated(terms: int) -> list[int]:
    coeffs = [0] * terms
    coeffs[0] = 1
    for k in range(1, terms):
        for i in range(terms - 1, k - 1, -1):
            coeffs[i] -= coeffs[i - k]
    return coeffs


def _modular_product_truncated(residues: tuple[int, ...], modulus: int, terms: int) -> list[int]:
    coeffs = [0] * terms
    coeffs[0] = 1
    for a in residues:
        e = a
        while e < terms:
            for i in range(terms - 1, e - 1, -1):
                coeffs[i] -= coeffs[i - e]
            e += modulus
    return coeffs


def limit_series(family: str, terms: int) -> DensePoly:
    """Truncation mod q^terms of the limiting power series of the family.

    B and C have modulus-9 product forms over (q;q)_infinity; the others
    follow from D = lim C, E = B - qC and qF = B - C.
    """
    if family not in LIMIT_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if terms < 1:
        raise ValueError("terms must be positive")
    euler = _euler_truncated(terms)
    if family in ("B", "E", "F"):
        b = power_series_div(_modular_product_truncated((2, 7, 9), 9, terms), euler, terms)
    if family in ("C", "D", "E", "F"):
        c = power_series_div(_modular_product_truncated((1, 8, 9), 9, terms), euler, terms)
    if family == "B":
        out = b
    elif family in ("C", "D"):
        out = c
    elif family == "E":
        out = [b[0]] + [b[i] - c[i - 1] for i in range(1, terms)]
    else:  # F: (B - C)/q, exact since the constant terms agree
        diff = [b[i] - c[i] for i in range(terms)]
        if diff[0] != 0:
            raise ValueError("B and C limits must share the constant term")
        out = diff[1:] + [0]
    return DensePoly(out)


# ---------------------------------------------------------------------------
# conjecture variants


def variant_sieve(n: int, variant: str) -> list[DensePoly]:
    """Component polynomials of the squared (mod 3) or quintic (mod 5) sieve.

    ``second`` returns [alpha, beta, gamma] with signs +,-,- and asserts the
    exact identity alpha_n = A_n^2 + 2 q B_n C_n.  ``third`` returns the five
    components of (q;q)_{5n}/(q^5;q^5)_n with signs +,-,-,-,-.  Component
    coefficient signs are recorded, not asserted.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if variant == "second":
        exps = sieve_exponents(n) * 2
        parts = sieve_classes(product_one_minus(exps).coeffs, 3)
        comps = [DensePoly(p) for p in parts]
        t = triple_from_quotient(n)
        bc = mul(t.B, t.C).shift(1)
        alpha = mul(t.A, t.A) + bc + bc
        if comps[0] != alpha:
            raise ValueError(f"alpha identity fails at n={n}")
        return comps
    if variant == "third":
        exps: list[int] = []
        for i in range(1, n + 1):
            exps.extend((5 * i - 4, 5 * i - 3, 5 * i - 2, 5 * i - 1))
        parts = sieve_classes(product_one_minus(exps).coeffs, 5)
        return [DensePoly(p) for p in parts]
    raise ValueError(f"unknown variant {variant!r}")


def bressoud_sum(m: int, n: int, K: int, aK, bK) -> DensePoly:
    """sum_j (-1)^j q^{j(K(a+b)j + K(a-b))/2} [m+n; m+Kj]_q with a = aK/K, b = bK/K.

    Exponents must come out integral for every j whose q-binomial survives;
    a fractional exponent raises :class:`NonIntegralExponent`.
    """
    if K <= 0 or m < 0 or n < 0:
        raise ValueError("require K >= 1 and m, n >= 0")
    s = Fraction(aK) + Fraction(bK)
    d = Fraction(aK) - Fraction(bK)
    lo = -(m // K)
    hi = n // K
    acc = ZERO
    for j in range(lo, hi + 1):
        bottom = m + K * j
        binom = q_binomial(m + n, bottom)
        if binom.is_zero():
            continue
        e = Fraction(j) * (s * j + d) / 2
        if e.denominator != 1:
            raise NonIntegralExponent(f"exponent {e} at j={j} is not an integer")
        if e < 0:
            raise ValueError(f"negative exponent {e} at j={j}")
        term = binom.shift(int(e))
        acc = acc + term if j % 2 == 0 else acc - term
    return acc
