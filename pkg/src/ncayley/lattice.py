"""Integral LLL reduction and integer-relation search.

All Gram-Schmidt data are kept as integers (d_i and lambda_ij scaled by the
Gram determinants), so the reduction is exact for arbitrary input sizes.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(99, 100)) -> list:
    """LLL-reduce linearly independent integer row vectors.

    Returns a new list of rows spanning the same lattice.
    """
    b = [list(map(int, row)) for row in basis]
    n = len(b)
    if n <= 1:
        return b
    p, q = delta.numerator, delta.denominator

    def dot(x, y):
        return sum(a * c for a, c in zip(x, y))

    d = [0] * (n + 1)  # d[0] = 1, d[i+1] = Gram determinant of the first i+1 rows
    d[0] = 1
    lam = [[0] * n for _ in range(n)]

    d[1] = dot(b[0], b[0])
    if d[1] == 0:
        raise ValueError("basis vectors are linearly dependent")

    def extend(k):
        for j in range(k + 1):
            u = dot(b[k], b[j])
            for i in range(j):
                u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
            if j < k:
                lam[k][j] = u
            else:
                if u == 0:
                    raise ValueError("basis vectors are linearly dependent")
                d[k + 1] = u

    def reduce(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            r = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - r * y for x, y in zip(b[k], b[l])]
            lam[k][l] -= r * d[l + 1]
            for i in range(l):
                lam[k][i] -= r * lam[l][i]

    def swap(k, kmax):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lm = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + lm * lm) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lm * t) // d[k]
            lam[i][k - 1] = (B * t + lm * lam[i][k]) // d[k + 1]
        d[k] = B

    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            extend(k)
        reduce(k, k - 1)
        # Lovasz: d_k d_{k-2} >= delta d_{k-1}^2 - lambda^2, in scaled integers
        if q * d[k + 1] * d[k - 1] < p * d[k] * d[k] - q * lam[k][k - 1] ** 2:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                reduce(k, l)
            k += 1
    return b


def gram_schmidt(basis: Sequence[Sequence[int]]):
    """Exact rational Gram-Schmidt: (orthogonal vectors, mu coefficients)."""
    bstar, mu = [], []
    for i, row in enumerate(basis):
        v = [Fraction(x) for x in row]
        mrow = []
        for j in range(i):
            bj = bstar[j]
            nj = sum(x * x for x in bj)
            m = sum(Fraction(a) * c for a, c in zip(row, bj)) / nj if nj else Fraction(0)
            mrow.append(m)
            v = [x - m * y for x, y in zip(v, bj)]
        bstar.append(v)
        mu.append(mrow)
    return bstar, mu


def is_lll_reduced(basis, delta: Fraction = Fraction(99, 100)) -> bool:
    bstar, mu = gram_schmidt(basis)
    norms = [sum(x * x for x in v) for v in bstar]
    for i in range(len(basis)):
        if any(abs(m) > Fraction(1, 2) for m in mu[i]):
            return False
        if i and norms[i] < (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            return False
    return True
