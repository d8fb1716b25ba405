"""Finite abelian groups as products of cyclic groups.

Elements are tuples of residues.  The canonical index of an element is its
mixed-radix encoding with the first factor most significant, so index order
coincides with lexicographic order on residue tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Iterable, Iterator, Sequence, Union

ElementLike = Union[int, Sequence[int]]
GroupElement = tuple


@dataclass(frozen=True)
class FiniteAbelianGroup:
    invariant_factors: tuple

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if not factors:
            raise ValueError("a group needs at least one cyclic factor")
        if any(d < 2 for d in factors):
            raise ValueError(f"cyclic factors must be >= 2, got {list(factors)}")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        try:
            g = tuple(g)
        except TypeError:
            return False
        return len(g) == self.rank and all(
            isinstance(x, int) and 0 <= x < d for x, d in zip(g, self.invariant_factors)
        )

    @cached_property
    def elements(self) -> tuple:
        out = [()]
        for d in self.invariant_factors:
            out = [g + (x,) for g in out for x in range(d)]
        return tuple(out)

    @cached_property
    def _index_of(self) -> dict:
        return {g: i for i, g in enumerate(self.elements)}

    def element(self, g: ElementLike) -> GroupElement:
        """Validate ``g`` and return it as a reduced residue tuple.

        A bare integer is accepted for cyclic groups.
        """
        if isinstance(g, int):
            g = (g,)
        g = tuple(g)
        if len(g) != self.rank:
            raise ValueError(f"element {list(g)} has {len(g)} residues, group has rank {self.rank}")
        for x, d in zip(g, self.invariant_factors):
            if not isinstance(x, int) or not 0 <= x < d:
                raise ValueError(f"element {list(g)} is not reduced modulo {list(self.invariant_factors)}")
        return g

    def index(self, g: ElementLike) -> int:
        return self._index_of[self.element(g)]

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.rank

    def add(self, g: ElementLike, h: ElementLike) -> GroupElement:
        g, h = self.element(g), self.element(h)
        return tuple((a + b) % d for a, b, d in zip(g, h, self.invariant_factors))

    def neg(self, g: ElementLike) -> GroupElement:
        g = self.element(g)
        return tuple(-a % d for a, d in zip(g, self.invariant_factors))

    def eta(self, l: int, g: ElementLike) -> GroupElement:
        if gcd(l, self.order) != 1:
            raise ValueError(f"{l} is not a unit modulo {self.order}")
        g = self.element(g)
        return tuple(l * a % d for a, d in zip(g, self.invariant_factors))

    def char_exponent(self, v: ElementLike, g: ElementLike) -> int:
        """Exponent e with chi_v(g) = omega_N ** e, reduced mod N."""
        N = self.order
        v, g = self.element(v), self.element(g)
        return sum((N // d) * a * b for a, b, d in zip(v, g, self.invariant_factors)) % N

    # Index-level tables used by the dense group-algebra code.

    @cached_property
    def add_table(self) -> tuple:
        els = self.elements
        idx = self._index_of
        return tuple(tuple(idx[self.add(g, h)] for h in els) for g in els)

    @cached_property
    def neg_table(self) -> tuple:
        idx = self._index_of
        return tuple(idx[self.neg(g)] for g in self.elements)

    @cached_property
    def exponent_table(self) -> tuple:
        """exponent_table[v][g] = char_exponent(v, g) on canonical indices."""
        els = self.elements
        return tuple(tuple(self.char_exponent(v, g) for g in els) for v in els)

    def eta_table(self, l: int) -> tuple:
        return self._eta_tables.setdefault(
            l % self.order, tuple(self._index_of[self.eta(l, g)] for g in self.elements)
        )

    @cached_property
    def _eta_tables(self) -> dict:
        return {}

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors)}


@dataclass(frozen=True)
class UnitSet:
    """A set of units modulo ``modulus``, each stored as a residue in [1, modulus]."""

    modulus: int
    units: tuple

    def __post_init__(self):
        N = self.modulus
        units = tuple(sorted({(u - 1) % N + 1 for u in self.units}))
        for u in units:
            if gcd(u, N) != 1:
                raise ValueError(f"{u} is not a unit modulo {N}")
        object.__setattr__(self, "units", units)

    def __len__(self) -> int:
        return len(self.units)

    def __iter__(self) -> Iterator[int]:
        return iter(self.units)

    def __contains__(self, l: int) -> bool:
        return ((l - 1) % self.modulus + 1) in self.units

    def is_subgroup(self) -> bool:
        members = set(self.units)
        if 1 not in members:
            return False
        return all((a * b - 1) % self.modulus + 1 in members for a in members for b in members)


def make_group(invariant_factors: Iterable[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(invariant_factors))


def group_add(G: FiniteAbelianGroup, g: ElementLike, h: ElementLike) -> GroupElement:
    return G.add(g, h)


def group_neg(G: FiniteAbelianGroup, g: ElementLike) -> GroupElement:
    return G.neg(g)


def units_mod(N: int) -> UnitSet:
    if N < 2:
        raise ValueError("modulus must be >= 2")
    return UnitSet(N, tuple(l for l in range(1, N + 1) if gcd(l, N) == 1))


def euler_phi(N: int) -> int:
    result, m, p = N, N, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def eta_apply(G: FiniteAbelianGroup, l: int, g: ElementLike) -> GroupElement:
    return G.eta(l, g)


def character_value(G: FiniteAbelianGroup, v: ElementLike, g: ElementLike):
    """chi_v(g) as an exact element of Q(omega_N), N = |G|."""
    from .cyclotomic import CyclotomicNumber

    return CyclotomicNumber.root_of_unity(G.order, G.char_exponent(v, g))
