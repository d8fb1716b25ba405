"""Exact arithmetic in cyclotomic fields Q(omega_N).

Values live in the power basis 1, w, ..., w^(phi(N)-1) modulo the N-th
cyclotomic polynomial, with Fraction coefficients.  This normal form is
unique, so equality is coefficient equality.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath

from .groups import euler_phi
from .polynomials import Polynomial


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> Polynomial:
    """Phi_N as an integer polynomial, by dividing x^N - 1 by Phi_d for d | N, d < N."""
    if N < 1:
        raise ValueError("N must be positive")
    p = Polynomial([-1] + [0] * (N - 1) + [1])
    for d in range(1, N):
        if N % d == 0:
            q, r = divmod(p, cyclotomic_polynomial(d))
            assert r.is_zero()
            p = q
    return Polynomial([int(c) for c in p.coeffs])


class _Field:
    """Per-conductor tables: reduction of every power of omega into the basis."""

    def __init__(self, N: int):
        self.N = N
        self.phi = euler_phi(N)
        phi_poly = cyclotomic_polynomial(N)
        tail = [-c for c in phi_poly.coeffs[:-1]]  # w^phi = sum tail[j] w^j
        powers = []
        vec = [1] + [0] * (self.phi - 1)
        for _ in range(N):
            powers.append(tuple(vec))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                vec = [v + top * t for v, t in zip(vec, tail)]
        self.powers = tuple(powers)


@lru_cache(maxsize=None)
def _field(N: int) -> _Field:
    if N < 1:
        raise ValueError("conductor must be positive")
    return _Field(N)


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _common(coeffs):
    """Integer numerators over a shared positive denominator."""
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class CyclotomicNumber:
    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        F = _field(conductor)
        cs = tuple(_as_fraction(c) for c in coeffs)
        if len(cs) != F.phi:
            raise ValueError(f"expected {F.phi} coefficients for conductor {conductor}, got {len(cs)}")
        self.conductor = conductor
        self.coeffs = cs

    # construction

    @classmethod
    def from_rational(cls, N: int, q) -> "CyclotomicNumber":
        F = _field(N)
        return cls(N, [q] + [0] * (F.phi - 1))

    @classmethod
    def zero(cls, N: int) -> "CyclotomicNumber":
        return cls.from_rational(N, 0)

    @classmethod
    def one(cls, N: int) -> "CyclotomicNumber":
        return cls.from_rational(N, 1)

    @classmethod
    def root_of_unity(cls, N: int, k: int = 1) -> "CyclotomicNumber":
        return cls(N, _field(N).powers[k % N])

    @classmethod
    def from_exponent_sums(cls, N: int, weights) -> "CyclotomicNumber":
        """sum_k weights[k] * w^k for a length-N weight vector."""
        F = _field(N)
        nums, den = _common([_as_fraction(w) for w in weights])
        acc = [0] * F.phi
        for k, w in enumerate(nums):
            if w:
                for j, p in enumerate(F.powers[k]):
                    if p:
                        acc[j] += w * p
        return cls._from_ints(N, acc, den)

    @classmethod
    def _from_ints(cls, N: int, nums, den: int) -> "CyclotomicNumber":
        obj = cls.__new__(cls)
        obj.conductor = N
        obj.coeffs = tuple(Fraction(x, den) for x in nums)
        return obj

    # coercion helpers

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.conductor != self.conductor:
                raise ValueError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}; lift explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.conductor, other)
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber._raw(self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber._raw(self.conductor, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber._raw(self.conductor, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = _field(self.conductor)
        a, da = _common(self.coeffs)
        b, db = _common(other.coeffs)
        prod = [0] * (2 * F.phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        acc = prod[: F.phi]
        for k in range(F.phi, len(prod)):
            c = prod[k]
            if c:
                for j, p in enumerate(F.powers[k % F.N]):
                    if p:
                        acc[j] += c * p
        return CyclotomicNumber._from_ints(self.conductor, acc, da * db)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = CyclotomicNumber.one(self.conductor), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via extended Euclid against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        N = self.conductor
        a = Polynomial(self.coeffs)
        m = cyclotomic_polynomial(N).map(Fraction)
        # invariant: r_i = s_i * a (mod m)
        r0, s0 = m, Polynomial()
        r1, s1 = a, Polynomial([Fraction(1)])
        while r1.degree > 0:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        inv = s1 * (Fraction(1) / r1.lead)
        inv = inv % m
        cs = list(inv.coeffs) + [0] * (_field(N).phi - len(inv.coeffs))
        return CyclotomicNumber(N, cs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    @classmethod
    def _raw(cls, N, coeffs):
        obj = cls.__new__(cls)
        obj.conductor = N
        obj.coeffs = tuple(coeffs)
        return obj

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, CyclotomicNumber):
            if other.conductor != self.conductor:
                raise ValueError("cannot compare values of different conductors without lifting")
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        q = self.rational()
        if q is not None:
            return hash(q)
        return hash((self.conductor, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # Galois structure

    def galois(self, l: int) -> "CyclotomicNumber":
        """Image under sigma_l: w -> w^l."""
        N = self.conductor
        if gcd(l, N) != 1:
            raise ValueError(f"{l} is not a unit modulo {N}")
        weights = [Fraction(0)] * N
        for j, c in enumerate(self.coeffs):
            if c:
                weights[j * l % N] += c
        return CyclotomicNumber.from_exponent_sums(N, weights)

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    def rational(self):
        """The rational value if this number lies in Q, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def lift(self, M: int) -> "CyclotomicNumber":
        """Re-express in Q(omega_M) using omega_N = omega_M^(M/N)."""
        N = self.conductor
        if M % N:
            raise ValueError(f"cannot lift conductor {N} to {M}")
        step = M // N
        weights = [Fraction(0)] * M
        for j, c in enumerate(self.coeffs):
            if c:
                weights[j * step % M] += c
        return CyclotomicNumber.from_exponent_sums(M, weights)

    def to_complex(self, precision_bits: int = 256) -> mpmath.mpc:
        """Numeric embedding omega_N -> exp(2 pi i / N) at the given precision."""
        with mpmath.workprec(precision_bits + 32):
            N = self.conductor
            acc = mpmath.mpc(0)
            for j, c in enumerate(self.coeffs):
                if c:
                    acc += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * j) / N)
            return +acc

    def height(self) -> int:
        """Largest absolute numerator or denominator among coefficients."""
        return max(max(abs(c.numerator), c.denominator) for c in self.coeffs)

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicNumber":
        return cls(int(data["conductor"]), [Fraction(c) for c in data["coeffs"]])

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        q = self.rational()
        if q is not None:
            return str(q)
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if j == 0 else (f"w{self.conductor}" if j == 1 else f"w{self.conductor}^{j}")
            if j == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def cyclo_add(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a + b


def cyclo_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a * b


def cyclo_inverse(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.inverse()


def galois_apply(l: int, a: CyclotomicNumber) -> CyclotomicNumber:
    return a.galois(l)


def conjugate(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.conjugate()


def is_rational(a: CyclotomicNumber):
    return a.rational()


def to_complex(a: CyclotomicNumber, precision_bits: int = 256) -> mpmath.mpc:
    if precision_bits < 64:
        raise ValueError("precision_bits must be >= 64")
    return a.to_complex(precision_bits)


def common_conductor(*values) -> int:
    """lcm of the conductors among ``values`` (rationals contribute 1)."""
    out = 1
    for v in values:
        if isinstance(v, CyclotomicNumber):
            out = lcm(out, v.conductor)
    return out


def lift_to(value, M: int) -> CyclotomicNumber:
    if isinstance(value, CyclotomicNumber):
        return value.lift(M)
    return CyclotomicNumber.from_rational(M, value)
