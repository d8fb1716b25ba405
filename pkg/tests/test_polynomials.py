from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncayley.polynomials import Polynomial, poly_gcd, squarefree_decomposition

X = Polynomial.x()
polys = st.lists(st.integers(-5, 5), min_size=1, max_size=6).map(Polynomial)


def test_basic():
    p = (X - 1) * (X + 2)
    assert p.coeffs == (-2, 1, 1)
    assert p(1) == 0 and p.degree == 2 and p.is_monic()
    assert Polynomial().degree == -1
    assert Polynomial.from_roots([1, 2]) == X**2 - 3 * X + 2
    assert str(X**2 - 3 * X + 2) == "x^2 - 3*x + 2"


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_division_identity(a, b):
    q, r = divmod(a.map(Fraction), b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_gcd_and_squarefree():
    p = (X - 1) ** 3 * (X + 2) ** 2 * (X**2 + 1)
    assert poly_gcd(p.map(Fraction), ((X - 1) * (X + 5)).map(Fraction)) == (X - 1)
    parts = squarefree_decomposition(p.map(Fraction))
    rebuilt = Polynomial([1])
    for mult, factor in enumerate(parts, start=1):
        rebuilt = rebuilt * factor**mult
    assert rebuilt == p
    assert parts == [X**2 + 1, X + 2, X - 1]


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(X, Polynomial())
