"""Dense univariate polynomials over exact coefficient rings.

Coefficients are stored low degree first.  Anything supporting ``+``, ``-``,
``*`` and comparison with ``0`` works as a coefficient (ints, Fractions,
CyclotomicNumbers); division additionally needs an inverse, so ``divmod``,
``gcd`` and the square-free decomposition are only meaningful over fields.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def _inverse(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(1) / c
    return c.inverse()


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial([other]) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map(self, f) -> "Polynomial":
        return Polynomial([f(c) for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv = _inverse(other.lead)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] * inv
            quot[k] = q
            if q == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * b
        return Polynomial(quot), Polynomial(rem[: other.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * _inverse(self.lead)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if isinstance(c, (int, Fraction)):
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = mono if (mag == 1 and mono) else (f"{mag}{'*' if mono else ''}{mono}")
            else:
                # cyclotomic or other exact ring element: print rational ones plainly
                q = c.rational() if hasattr(c, "rational") else None
                if q is not None:
                    sign, mag = ("-" if q < 0 else "+"), abs(q)
                    body = mono if (mag == 1 and mono) else (f"{mag}{'*' if mono else ''}{mono}")
                else:
                    sign, body = "+", (f"({c})*{mono}" if mono else f"({c})")
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over a field."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: Polynomial) -> list:
    """Yun's algorithm: monic factors a_1, a_2, ... with p ~ prod a_i^i.

    Characteristic zero only.  Trailing trivial factors are dropped.
    """
    if p.degree < 1:
        return []
    p = p.monic()
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    out = []
    while b.degree > 0:
        a = poly_gcd(b, d)
        out.append(a)
        b = b // a
        c = d // a
        d = c - b.derivative()
    while out and out[-1].degree == 0:
        out.pop()
    return out
