"""Exact dense polynomial arithmetic over arbitrary-precision integers.

The polynomials handled here are dense almost immediately (a handful of
binomial factors fills every coefficient slot), so the representation is a
plain coefficient sequence indexed by exponent.  All arithmetic is exact;
the only floating-point entry point is :func:`eval_complex`, which is
documented as approximate.

Values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import csv
from typing import Callable, Iterable, Sequence


class NonzeroRemainder(Exception):
    """Raised when an exact polynomial division leaves a remainder.

    A remainder always signals a transcription error in a formula, so the
    caller must abort rather than truncate.
    """


# ---------------------------------------------------------------------------
# list-level kernels
#
# DensePoly wraps tuples, but the heavy incremental work (products of
# thousands of binomials) runs on plain lists of ints.  The verify harness
# reuses these kernels directly.


def trim(coeffs: list[int]) -> list[int]:
    """Drop trailing zeros so the highest stored coefficient is nonzero."""
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    del coeffs[end:]
    return coeffs


def mul_one_minus_list(coeffs: list[int], k: int) -> list[int]:
    """Multiply a coefficient list by (1 - q^k) in place-ish; returns a new list.

    One shift+subtract pass, no generic convolution.
    """
    if k <= 0:
        raise ValueError("exponent must be positive")
    if not coeffs:
        return []
    res = coeffs + [0] * k
    # descending so res[i - k] is still the pre-pass value
    for i in range(len(res) - 1, k - 1, -1):
        res[i] -= res[i - k]
    return res


def mul_sparse_list(coeffs: list[int], terms: Sequence[tuple[int, int]]) -> list[int]:
    """Multiply by a sparse polynomial given as (exponent, coefficient) pairs."""
    if not coeffs or not terms:
        return []
    top = max(e for e, _ in terms)
    res = [0] * (len(coeffs) + top)
    for e, c in terms:
        if c == 0:
            continue
        if c == 1:
            for i, a in enumerate(coeffs):
                if a:
                    res[i + e] += a
        elif c == -1:
            for i, a in enumerate(coeffs):
                if a:
                    res[i + e] -= a
        else:
            for i, a in enumerate(coeffs):
                if a:
                    res[i + e] += c * a
    return trim(res)


def div_one_minus_list(coeffs: list[int], exponents: Iterable[int]) -> list[int]:
    """Exact division of a coefficient list by prod_k (1 - q^k).

    Each factor is removed with one prefix-sum pass (power-series division by
    1 - q^k).  Power-series quotients of an exactly divisible polynomial must
    vanish above the quotient degree, so a single tail check at the end
    certifies exactness of the whole pipeline.
    """
    exponents = list(exponents)
    if not coeffs:
        return []
    res = list(coeffs)
    total = 0
    for k in exponents:
        if k <= 0:
            raise ValueError("exponent must be positive")
        total += k
        for i in range(k, len(res)):
            res[i] += res[i - k]
    quot_deg = len(res) - 1 - total
    if quot_deg < -1 or any(res[i] for i in range(max(quot_deg + 1, 0), len(res))):
        raise NonzeroRemainder(
            f"polynomial is not divisible by prod(1-q^k) for k={exponents}"
        )
    del res[quot_deg + 1 :]
    return res


def product_one_minus_list(exponents: Iterable[int]) -> list[int]:
    coeffs = [1]
    for k in exponents:
        coeffs = mul_one_minus_list(coeffs, k)
    return coeffs


# ---------------------------------------------------------------------------


class DensePoly:
    """Univariate polynomial with exact integer coefficients.

    ``coeffs[i]`` is the coefficient of q^i.  The stored sequence never ends
    in a zero, and the zero polynomial stores an empty sequence: its
    ``degree`` is the sentinel ``None``, never -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        trim(c)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("DensePoly is immutable")

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "DensePoly(0)"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
            if len(parts) > 8:
                parts.append("...")
                break
        return "DensePoly(" + " + ".join(parts).replace("+ -", "- ") + ")"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "DensePoly") -> "DensePoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return DensePoly(res)

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        res = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            res[i] -= c
        return DensePoly(res)

    def __neg__(self) -> "DensePoly":
        return DensePoly([-c for c in self.coeffs])

    def __mul__(self, other: "DensePoly") -> "DensePoly":
        return mul(self, other)

    def shift(self, k: int) -> "DensePoly":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        if k < 0:
            raise ValueError("negative shift")
        return DensePoly((0,) * k + self.coeffs)

    # -- I/O ------------------------------------------------------------

    def to_csv(self, path) -> None:
        """Dump nonzero coefficients as ``exponent,coefficient`` rows.

        Coefficients are written as decimal strings; a header row is
        included.
        """
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["exponent", "coefficient"])
            for e, c in enumerate(self.coeffs):
                if c:
                    writer.writerow([e, str(c)])


ZERO = DensePoly()
ONE = DensePoly([1])


def from_terms(terms: Iterable[tuple[int, int]]) -> DensePoly:
    """Build a polynomial from (exponent, coefficient) pairs; exponents may repeat."""
    acc: dict[int, int] = {}
    for e, c in terms:
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        acc[e] = acc.get(e, 0) + c
    if not acc:
        return ZERO
    res = [0] * (max(acc) + 1)
    for e, c in acc.items():
        res[e] = c
    return DensePoly(res)


def mul(a: DensePoly, b: DensePoly) -> DensePoly:
    """Exact schoolbook product."""
    ca, cb = a.coeffs, b.coeffs
    if not ca or not cb:
        return ZERO
    if len(ca) < len(cb):
        ca, cb = cb, ca
    res = [0] * (len(ca) + len(cb) - 1)
    for j, c in enumerate(cb):
        if c:
            for i, d in enumerate(ca):
                if d:
                    res[i + j] += c * d
    return DensePoly(res)


def product_one_minus(exponents: Iterable[int]) -> DensePoly:
    """prod_k (1 - q^{e_k}), built incrementally (shift + subtract per factor)."""
    return DensePoly(product_one_minus_list(exponents))


def exact_div(num: DensePoly, den: DensePoly) -> DensePoly:
    """Exact quotient num / den; raises :class:`NonzeroRemainder` otherwise.

    Classic long division from the highest exponent down, with a mandatory
    zero-remainder assertion: any remainder means a formula transcription
    bug and silent truncation would poison everything downstream.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return ZERO
    dn, dd = num.degree, den.degree
    assert dn is not None and dd is not None
    if dn < dd:
        raise NonzeroRemainder("numerator degree below denominator degree")
    rem = list(num.coeffs)
    denc = den.coeffs
    lead = denc[-1]
    quot = [0] * (dn - dd + 1)
    for i in range(dn - dd, -1, -1):
        c = rem[i + dd]
        if c == 0:
            continue
        t, r = divmod(c, lead)
        if r:
            raise NonzeroRemainder("leading coefficient does not divide")
        quot[i] = t
        for j, d in enumerate(denc):
            rem[i + j] -= t * d
    if any(rem):
        raise NonzeroRemainder("nonzero remainder in exact division")
    return DensePoly(quot)


def div_one_minus(p: DensePoly, exponents: Iterable[int]) -> DensePoly:
    """Exact division by prod_k (1 - q^{e_k}) in O(len) per factor."""
    return DensePoly(div_one_minus_list(list(p.coeffs), exponents))


def q_binomial(a: int, b: int, step: int = 1) -> DensePoly:
    """Gaussian binomial coefficient [a choose b] in the variable q^step.

    Built as a ratio of q-factorial products, one factor at a time: multiply
    by (1 - q^{step(a-b+i)}) then divide exactly by (1 - q^{step i}); every
    intermediate is itself a Gaussian binomial, so each division is exact.
    Out-of-range ``b`` yields the zero polynomial (the vanishing convention
    used by the alternating sums).
    """
    if step <= 0:
        raise ValueError("step must be positive")
    if a < 0:
        raise ValueError("upper index must be nonnegative")
    if b < 0 or b > a:
        return ZERO
    b = min(b, a - b)
    coeffs = [1]
    for i in range(1, b + 1):
        coeffs = mul_one_minus_list(coeffs, step * (a - b + i))
        coeffs = div_one_minus_list(coeffs, [step * i])
    return DensePoly(coeffs)


def reciprocal(p: DensePoly) -> DensePoly:
    """Coefficient reversal q^{deg p} * p(1/q)."""
    if p.is_zero():
        raise ValueError("reciprocal of the zero polynomial is undefined")
    return DensePoly(p.coeffs[::-1])


def eval_complex(p: DensePoly, r: float, theta: float = 0.0) -> complex:
    """Horner evaluation at r*exp(i*theta) in floating point.

    Approximate: big integer coefficients are rounded to the nearest float,
    acceptable because this only feeds inequality sampling with wide margins.
    """
    import cmath

    z = r * cmath.exp(1j * theta) if theta else complex(r, 0.0)
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def eval_int(p: DensePoly, x: int) -> int:
    """Exact Horner evaluation at an integer point."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def power_series_div(num: Sequence[int], den: Sequence[int], terms: int) -> list[int]:
    """Power-series quotient mod q^terms; den must have constant term +-1."""
    if not den or den[0] not in (1, -1):
        raise ValueError("denominator constant term must be a unit")
    lead = den[0]
    out = [0] * terms
    for i in range(terms):
        acc = num[i] if i < len(num) else 0
        for t in range(1, min(i, len(den) - 1) + 1):
            acc -= den[t] * out[i - t]
        out[i] = acc * lead
    return out


def naive_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Reference schoolbook convolution used as an independent test oracle."""
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            res[i + j] += x * y
    return trim(res)
