import random
from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, strategies as st

from ncayley.cyclotomic import (
    CyclotomicNumber,
    conjugate,
    cyclo_add,
    cyclo_inverse,
    cyclo_mul,
    cyclotomic_polynomial,
    galois_apply,
    is_rational,
    to_complex,
)
from ncayley.groups import euler_phi, units_mod

W = CyclotomicNumber.root_of_unity


def random_cyclo(rng, N, lo=-4, hi=4):
    return CyclotomicNumber(N, [Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(euler_phi(N))])


@st.composite
def cyclos(draw, max_conductor=24):
    N = draw(st.integers(2, max_conductor))
    vals = draw(st.lists(st.integers(-4, 4), min_size=euler_phi(N), max_size=euler_phi(N)))
    return CyclotomicNumber(N, vals)


def test_cyclotomic_polynomials_small():
    assert cyclotomic_polynomial(4).coeffs == (1, 0, 1)
    assert cyclotomic_polynomial(6).coeffs == (1, -1, 1)
    assert cyclotomic_polynomial(12).coeffs == (1, 0, -1, 0, 1)


def test_cyclotomic_polynomials_match_sympy():
    x = sympy.Symbol("x")
    for N in range(1, 61):
        expected = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(N, x), x).all_coeffs())]
        assert list(cyclotomic_polynomial(N).coeffs) == expected, N


def test_arithmetic_examples():
    assert W(4) * W(4) == -1
    assert (W(7, 1) + W(7, 2) + W(7, 4)) + (W(7, 3) + W(7, 5) + W(7, 6)) == -1
    assert cyclo_inverse(W(4)) == -W(4)
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.zero(5).inverse()


def test_mixed_conductors_rejected():
    with pytest.raises(ValueError):
        W(4) + W(8)


def test_galois_examples():
    p = W(7, 1) + W(7, 2) + W(7, 4)
    assert galois_apply(2, p) == p
    assert galois_apply(3, W(4)) == -W(4)
    with pytest.raises(ValueError):
        galois_apply(2, W(4))


def test_rational_and_conjugate_examples():
    assert is_rational(W(4, 2)) == -1
    assert is_rational(W(7)) is None
    assert conjugate(W(5)) == W(5, 4)


def test_to_complex_examples():
    z = to_complex(W(4), 128)
    assert abs(z - 1j) < mpmath.mpf(2) ** -120
    with mpmath.workprec(256):
        golden = (mpmath.sqrt(5) - 1) / 2
        assert abs(to_complex(W(5, 1) + W(5, 4), 256) - golden) < mpmath.mpf(2) ** -240
    assert to_complex(CyclotomicNumber.from_rational(3, Fraction(3, 2)), 64) == 1.5
    with pytest.raises(ValueError):
        to_complex(W(4), 32)


def test_power_basis_roundtrip():
    for N in range(2, 25):
        for k in range(N):
            with mpmath.workprec(200):
                exact = mpmath.expj(2 * mpmath.pi * k / N)
                assert abs(W(N, k).to_complex(160) - exact) < mpmath.mpf(2) ** -150


def test_inverse_randomized_1000():
    rng = random.Random(7)
    done = 0
    while done < 1000:
        N = rng.randint(2, 24)
        a = random_cyclo(rng, N)
        if a.is_zero():
            continue
        assert cyclo_mul(a, cyclo_inverse(a)) == 1
        done += 1


@given(cyclos(), st.data())
def test_ring_laws(a, data):
    N = a.conductor
    b = CyclotomicNumber(N, data.draw(st.lists(st.integers(-4, 4), min_size=euler_phi(N), max_size=euler_phi(N))))
    c = W(N, data.draw(st.integers(0, N - 1)))
    assert cyclo_mul(a, cyclo_add(b, c)) == a * b + a * c
    assert a * b == b * a


@given(cyclos(), st.data())
def test_galois_composition(a, data):
    N = a.conductor
    units = list(units_mod(N))
    l, m = data.draw(st.sampled_from(units)), data.draw(st.sampled_from(units))
    assert a.galois(l).galois(m) == a.galois(l * m % N)
    assert a.galois(1) == a


@given(cyclos(16))
def test_rational_iff_fixed_by_all_units(a):
    fixed = all(a.galois(l) == a for l in units_mod(a.conductor))
    assert (is_rational(a) is not None) == fixed


@given(cyclos(12), st.data())
def test_lift_is_field_embedding(a, data):
    M = a.conductor * data.draw(st.integers(1, 3))
    b = 1 + W(a.conductor)
    assert (a * b).lift(M) == a.lift(M) * b.lift(M)
    assert abs(a.lift(M).to_complex(128) - a.to_complex(128)) < mpmath.mpf(2) ** -100


def test_json_roundtrip():
    a = W(9, 2) * Fraction(3, 4) - 5
    assert CyclotomicNumber.from_json(a.to_json()) == a
