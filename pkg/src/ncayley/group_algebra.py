"""The rational group algebra Q[G] of a finite abelian group.

An element is a dense vector of Fractions indexed by canonical element index.
``a * b`` is convolution when both operands are group-algebra elements and
scalar multiplication otherwise.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .cyclotomic import CyclotomicNumber
from .groups import ElementLike, FiniteAbelianGroup


class GroupAlgebraElement:
    __slots__ = ("group", "values")

    def __init__(self, group: FiniteAbelianGroup, values: Iterable):
        vals = tuple(v if isinstance(v, Fraction) else Fraction(v) for v in values)
        if len(vals) != group.order:
            raise ValueError(f"expected {group.order} values, got {len(vals)}")
        self.group = group
        self.values = vals

    @classmethod
    def _raw(cls, group, values):
        obj = cls.__new__(cls)
        obj.group = group
        obj.values = tuple(values)
        return obj

    @classmethod
    def zero(cls, G: FiniteAbelianGroup) -> "GroupAlgebraElement":
        return cls._raw(G, [Fraction(0)] * G.order)

    @classmethod
    def unit(cls, G: FiniteAbelianGroup) -> "GroupAlgebraElement":
        """delta_{0}, the identity of convolution."""
        return indicator(G, [G.identity])

    @classmethod
    def from_function(cls, G: FiniteAbelianGroup, f) -> "GroupAlgebraElement":
        return cls(G, [f(g) for g in G.elements])

    def __call__(self, g: ElementLike) -> Fraction:
        return self.values[self.group.index(g)]

    def support(self) -> list:
        return [g for g, v in zip(self.group.elements, self.values) if v]

    def _check(self, other: "GroupAlgebraElement"):
        if other.group != self.group:
            raise ValueError("group-algebra elements over different groups")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GroupAlgebraElement.unit(self.group) * other
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check(other)
        return GroupAlgebraElement._raw(self.group, [a + b for a, b in zip(self.values, other.values)])

    __radd__ = __add__

    def __neg__(self):
        return GroupAlgebraElement._raw(self.group, [-a for a in self.values])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupAlgebraElement._raw(self.group, [a * other for a in self.values])
        if isinstance(other, GroupAlgebraElement):
            return convolve(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, k):
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / k)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GroupAlgebraElement.unit(self.group) * other
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.group == other.group and self.values == other.values

    def __hash__(self):
        return hash((self.group, self.values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def fourier_coefficient(self, v: ElementLike) -> CyclotomicNumber:
        return fourier_coefficient(self, v)

    def to_json(self) -> list:
        return [str(v) for v in self.values]

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({list(self.group.invariant_factors)}, {self.describe()})"

    def describe(self) -> str:
        """Compact form grouping equal values, e.g. ``2*d{1,2,4}``."""
        groups: dict = {}
        for g, v in zip(self.group.elements, self.values):
            if v:
                groups.setdefault(v, []).append(g)
        if not groups:
            return "0"
        cyclic = self.group.rank == 1
        parts = []
        for v, els in sorted(groups.items(), key=lambda kv: kv[1][0]):
            body = ",".join(str(g[0]) if cyclic else str(list(g)) for g in els)
            coef = "" if v == 1 else ("-" if v == -1 else f"{v}*")
            parts.append(f"{coef}d{{{body}}}")
        return " + ".join(parts).replace("+ -", "- ")


def indicator(G: FiniteAbelianGroup, S: Iterable[ElementLike]) -> GroupAlgebraElement:
    vals = [Fraction(0)] * G.order
    for s in S:
        vals[G.index(s)] = Fraction(1)
    return GroupAlgebraElement._raw(G, vals)


def convolve(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """(a*b)(g) = sum_h a(g - h) b(h), by direct double loop."""
    a._check(b)
    G = a.group
    table = G.add_table
    out = [Fraction(0)] * G.order
    bnz = [(j, y) for j, y in enumerate(b.values) if y]
    for i, x in enumerate(a.values):
        if not x:
            continue
        row = table[i]
        for j, y in bnz:
            out[row[j]] += x * y
    return GroupAlgebraElement._raw(G, out)


def fourier_coefficient(a: GroupAlgebraElement, v: ElementLike) -> CyclotomicNumber:
    """sum_g a(g) * conj(chi_v(g)) in Q(omega_N)."""
    G = a.group
    N = G.order
    exps = G.exponent_table[G.index(v)]
    weights = [Fraction(0)] * N
    for gi, x in enumerate(a.values):
        if x:
            weights[-exps[gi] % N] += x
    return CyclotomicNumber.from_exponent_sums(N, weights)


def fourier_transform(a: GroupAlgebraElement) -> dict:
    return {v: fourier_coefficient(a, v) for v in a.group.elements}


def fourier_inverse(G: FiniteAbelianGroup, coeffs: Mapping) -> GroupAlgebraElement:
    """a(g) = (1/N) sum_v coeffs[v] chi_v(g); the result must be rational."""
    N = G.order
    table = {}
    for v, c in coeffs.items():
        table[G.element(v)] = c
    missing = [v for v in G.elements if v not in table]
    if missing:
        raise ValueError(f"missing Fourier coefficients for {len(missing)} characters, e.g. {list(missing[0])}")
    values = []
    for gi, g in enumerate(G.elements):
        acc = CyclotomicNumber.zero(N)
        for v in G.elements:
            c = table[v]
            if isinstance(c, CyclotomicNumber):
                if c.is_zero():
                    continue
            elif c == 0:
                continue
            acc = acc + c * CyclotomicNumber.root_of_unity(N, G.exponent_table[G.index(v)][gi])
        q = acc.rational()
        if q is None:
            raise ValueError(f"Fourier data does not describe a rational function: value at {list(g)} is {acc}")
        values.append(q / N)
    return GroupAlgebraElement(G, values)
