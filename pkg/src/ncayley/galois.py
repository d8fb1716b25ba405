"""Stabilizer subgroup, orbit decomposition, fixed field and degree bounds."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .cyclotomic import CyclotomicNumber
from .group_algebra import GroupAlgebraElement
from .groups import FiniteAbelianGroup, UnitSet, euler_phi, units_mod


class ClosureError(AssertionError):
    """The computed stabilizer is not a subgroup; always an implementation bug."""


@dataclass(frozen=True)
class StabilizerSubgroup:
    modulus: int
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, l: int) -> bool:
        return ((l - 1) % self.modulus + 1) in self.members

    def as_unit_set(self) -> UnitSet:
        return UnitSet(self.modulus, self.members)


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple
    representatives: tuple

    def __len__(self) -> int:
        return len(self.orbits)

    def to_json(self) -> list:
        return [[list(g) for g in orbit] for orbit in self.orbits]


@dataclass(frozen=True)
class FixedFieldDescription:
    subgroup: StabilizerSubgroup
    degree: int
    period_generators: tuple


def stabilizer_subgroup(betas: Sequence[GroupAlgebraElement], G: FiniteAbelianGroup) -> StabilizerSubgroup:
    """Units l with beta(g) = beta(eta_l(g)) for every given beta and every g."""
    N = G.order
    members = []
    for l in units_mod(N):
        perm = G.eta_table(l)
        if all(b.values[perm[gi]] == b.values[gi] for b in betas for gi in range(N)):
            members.append(l)
    H = StabilizerSubgroup(N, tuple(members))
    if not H.as_unit_set().is_subgroup():
        raise ClosureError(f"stabilizer {members} is not closed under multiplication mod {N}")
    return H


def orbit_decomposition(G: FiniteAbelianGroup, H: StabilizerSubgroup) -> OrbitDecomposition:
    """Orbits of G under {eta_l : l in H}, ordered by their least element."""
    seen = set()
    orbits = []
    for g in G.elements:  # canonical order is lexicographic
        if g in seen:
            continue
        orbit = sorted({G.eta(l, g) for l in H})
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return OrbitDecomposition(tuple(orbits), tuple(o[0] for o in orbits))


def degree_bounds(G: FiniteAbelianGroup, H: StabilizerSubgroup, orbit_count: int, n: int) -> tuple:
    phi = euler_phi(G.order)
    if phi % len(H):
        raise ClosureError(f"|H|={len(H)} does not divide phi(N)={phi}")
    lower = phi // len(H)
    return lower, factorial(n) ** orbit_count * lower


def gauss_period(N: int, H, t: int) -> CyclotomicNumber:
    weights = [Fraction(0)] * N
    for l in H:
        weights[l * t % N] += 1
    return CyclotomicNumber.from_exponent_sums(N, weights)


def fixed_field(G: FiniteAbelianGroup, H: StabilizerSubgroup) -> FixedFieldDescription:
    """Inv(H) described by its degree and the Gauss periods over the H-orbits of Z_N.

    The periods are traces of the power basis, so together they span Inv(H).
    """
    N = G.order
    phi = euler_phi(N)
    gens = []
    seen = set()
    for t in range(N):
        if t in seen:
            continue
        orbit = {l * t % N for l in H}
        seen |= orbit
        p = gauss_period(N, H, t)
        if p.rational() is None and p not in gens:
            gens.append(p)
    for p in gens:
        assert in_fixed_field(p, H)
    return FixedFieldDescription(H, phi // len(H), tuple(gens))


def in_fixed_field(x: CyclotomicNumber, H: StabilizerSubgroup) -> bool:
    if x.conductor != H.modulus:
        raise ValueError(f"value has conductor {x.conductor}, subgroup acts modulo {H.modulus}")
    return all(x.galois(l) == x for l in H)


def field_stabilizer(values: Sequence[CyclotomicNumber], M: int) -> tuple:
    """Units l mod M fixing every value (all of conductor M)."""
    return tuple(l for l in units_mod(M) if all(v.galois(l) == v for v in values))
