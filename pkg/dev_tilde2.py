"""Dev experiment round 2: direct factorization-based tilde construction."""
import math
import numpy as np
from borwein.core import andrews_term, j_range, is_borderline, product_j0
from borwein.polyring import q_binomial


def eval_float(p, r):
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * r + c
    return acc


def log_tilde(family, n, j, r):
    """log of the tilde majorant, direct from the factorized product forms."""
    assert 0 <= j <= (n - 1) // 3
    if j == 0:
        return sum(math.log(1 + r ** k + r ** (2 * k)) for k in range(2, n))
    if is_borderline(n, j):
        if family == 'D':
            return -math.inf
        sh = 3 * j * j + 3 * j if family == 'E' else 3 * j * j - 2
        return sh * math.log(r) + sum(
            math.log(1 + r ** k) for k in range(1, 3 * j + 1) if k % 3
        )
    K = (n - 1) // 3
    if j <= (n - 2) // 6:
        v = (3 * j * j + 3 * j) * math.log(r)
        v += math.log(eval_float(q_binomial(3 * j + 1, j, 3), r))
        v += sum(math.log(1 + r ** k + r ** (2 * k)) for k in range(3 * j + 2, n - 3 * j))
        v += sum(math.log(1 + r ** (3 * i)) for i in range(n - 3 * j, n - j))
        if family in 'EF':
            v += math.log((1 - r ** 3) / (1 - r ** (9 * j + 3)))
            v += math.log((1 - r ** (6 * j + 1)) / (1 - r))
    else:
        v = (3 * j * j + 3 * j) * math.log(r)
        v += math.log(eval_float(q_binomial(K + j + 1, 2 * j + 1, 3), r))
        v += sum(math.log(1 + r ** k) for k in range(n - 3 * j, 3 * j + 2) if k % 3)
        v += sum(math.log(1 + r ** (3 * i)) for i in range(K + j + 2, n - j))
        if family in 'EF':
            v += math.log((1 + r) / (1 + r ** (3 * j + 1)))
    if family == 'F':
        v += 3 * j * math.log(r)
    return v


def max_modulus(poly, r, points=720):
    cs = np.array([float(c) for c in poly.coeffs])
    th = np.linspace(-math.pi, math.pi, points, endpoint=False)
    vals = np.polyval(cs[::-1], r * np.exp(1j * th))
    return float(np.max(np.abs(vals)))


bad = []
for n in range(2, 26):
    for fam in 'DEF':
        for r in (0.5, 0.9, 0.99):
            for j in j_range(n):
                p = andrews_term(fam, n, j)
                m = max_modulus(p, r) if not p.is_zero() else 0.0
                t = math.exp(log_tilde(fam, n, j, r)) if log_tilde(fam, n, j, r) > -math.inf else 0.0
                if m > (1 + 1e-9) * t:
                    bad.append((fam, n, j, r, m / t if t else float('inf')))
print("direct-construction majorant violations (n<=25):", len(bad), bad[:10])

# j=0 equality with P_{n,0}(r)
worst = 0.0
for n in (5, 10, 20):
    for r in (0.5, 0.9, 0.99):
        t = math.exp(log_tilde('D', n, 0, r))
        p = eval_float(product_j0(n), r)
        worst = max(worst, abs(t - p) / p)
print("j=0 equality worst rel:", worst)

# tail factors at n=7001, r = r0(7001) and r -> 1
alpha = 2 / math.sqrt(3)
for r in (math.exp(-math.sqrt(alpha / 7001)), 0.999999, 0.9999999999):
    n = 7001
    j0 = int(math.log2(n))
    for fam in ('D', 'E'):
        base = log_tilde(fam, n, 0, r)
        s = sum(math.exp(log_tilde(fam, n, j, r) - base) for j in range(0, j0 + 1))
        print(f"tail factor {fam} at r={r:.10f}: {s:.6f}")
