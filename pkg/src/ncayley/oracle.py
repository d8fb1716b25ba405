"""Brute-force ground truth for n-Cayley digraphs.

Builds the explicit adjacency matrix on G x [n] and computes its exact integer
characteristic polynomial without touching characters or Fourier data.
Vertex (g, i) has index ``G.index(g) * n + i``.
"""
from __future__ import annotations

from fractions import Fraction

from .ga_matrix import NCayleySpec
from .polynomials import Polynomial


def build_adjacency(spec: NCayleySpec) -> list:
    G, n = spec.group, spec.n
    size = G.order * n
    A = [[0] * size for _ in range(size)]
    for g in G.elements:
        gi = G.index(g)
        for i in range(n):
            for j in range(n):
                for s in spec.S(i, j):
                    A[gi * n + i][G.index(G.add(s, g)) * n + j] += 1
    return A


def char_poly_hessenberg(A) -> Polynomial:
    """det(xI - A) via similarity reduction to upper Hessenberg form over Q."""
    n = len(A)
    H = [[Fraction(x) for x in row] for row in A]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1] != 0), None)
        if piv is None:
            continue
        if piv != m:
            H[m], H[piv] = H[piv], H[m]
            for row in H:
                row[m], row[piv] = row[piv], row[m]
        p = H[m][m - 1]
        for i in range(m + 1, n):
            f = H[i][m - 1] / p
            if f == 0:
                continue
            Hi, Hm = H[i], H[m]
            for j in range(m - 1, n):
                if Hm[j]:
                    Hi[j] -= f * Hm[j]
            for row in H:
                if row[i]:
                    row[m] += f * row[i]
    # p_k = charpoly of the leading k x k block
    polys = [Polynomial([1])]
    for k in range(1, n + 1):
        pk = Polynomial([-H[k - 1][k - 1], 1]) * polys[k - 1]
        prod_sub = Fraction(1)
        for i in range(k - 1, 0, -1):
            prod_sub *= H[i][i - 1]
            if prod_sub == 0:
                break
            pk = pk - polys[i - 1] * (prod_sub * H[i - 1][k - 1])
        polys.append(pk)
    return _to_int(polys[n])


def char_poly_faddeev(A) -> Polynomial:
    """Integer Faddeev-LeVerrier; every division is exact."""
    n = len(A)
    c = [0] * (n + 1)
    c[n] = 1
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        AM = _matmul(A, M)
        M = [[AM[i][j] + (c[n - k + 1] if i == j else 0) for j in range(n)] for i in range(n)]
        AMk = _matmul(A, M)
        tr = sum(AMk[i][i] for i in range(n))
        assert tr % k == 0
        c[n - k] = -tr // k
    return Polynomial(c)


def _matmul(A, B):
    n = len(A)
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def _to_int(p: Polynomial) -> Polynomial:
    out = []
    for c in p.coeffs:
        c = Fraction(c)
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer characteristic polynomial coefficient {c}")
        out.append(int(c))
    return Polynomial(out)


def char_poly_int(A) -> Polynomial:
    return char_poly_hessenberg(A)


def equivalence_check(spec: NCayleySpec) -> bool:
    from .spectra import full_char_poly

    return char_poly_int(build_adjacency(spec)) == full_char_poly(spec)
