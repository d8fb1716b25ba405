"""Matrices over Q[G] and over Q(omega_N).

The structure matrix of an n-Cayley digraph is Delta = [delta_{-S_{j,i}}].
Principal-minor sums beta_k are computed with the Faddeev-LeVerrier
recurrence, which over a commutative Q-algebra only ever divides by the
integers 1..n.  The subset/permutation expansion is kept as an oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from .cyclotomic import CyclotomicNumber
from .group_algebra import GroupAlgebraElement, fourier_coefficient, indicator
from .groups import ElementLike, FiniteAbelianGroup
from .polynomials import Polynomial

DEFAULT_DET_CAP = 6


@dataclass(frozen=True)
class NCayleySpec:
    """A finite abelian group with n^2 connection sets S_{i,j} (0-based i, j).

    Arcs go (g, i) -> (s + g, j) for s in S_{i,j}.
    """

    group: FiniteAbelianGroup
    connection_sets: tuple

    def __post_init__(self):
        G = self.group
        rows = tuple(tuple(frozenset(G.element(s) for s in S) for S in row) for row in self.connection_sets)
        n = len(rows)
        if n < 1:
            raise ValueError("an n-Cayley spec needs n >= 1")
        if any(len(row) != n for row in rows):
            raise ValueError("connection sets must form an n x n array")
        object.__setattr__(self, "connection_sets", rows)

    @property
    def n(self) -> int:
        return len(self.connection_sets)

    def S(self, i: int, j: int) -> frozenset:
        return self.connection_sets[i][j]

    @classmethod
    def circulant(cls, N: int, S: Sequence[ElementLike]) -> "NCayleySpec":
        """Cay(Z_N, S) as a 1-Cayley spec."""
        G = FiniteAbelianGroup((N,))
        return cls(G, ((frozenset(G.element(s) for s in S),),))

    @classmethod
    def from_json(cls, data: dict) -> "NCayleySpec":
        G = FiniteAbelianGroup(tuple(data["group"]["invariant_factors"]))
        raw = data.get("connection_sets", {})
        keys = {key: tuple(int(x) for x in key.split(",")) for key in raw}
        n = int(data["n"]) if "n" in data else max((max(ij) for ij in keys.values()), default=1)
        sets = [[set() for _ in range(n)] for _ in range(n)]
        for key, members in raw.items():
            ij = keys[key]
            if len(ij) != 2 or not all(1 <= x <= n for x in ij):
                raise ValueError(f"connection-set key {key!r} is not of the form 'i,j' with 1 <= i, j <= {n}")
            i, j = ij[0] - 1, ij[1] - 1
            sets[i][j] = {G.element(m) for m in members}
        return cls(G, tuple(tuple(row) for row in sets))

    def to_json(self) -> dict:
        sets = {}
        for i in range(self.n):
            for j in range(self.n):
                sets[f"{i + 1},{j + 1}"] = [list(g) for g in sorted(self.S(i, j))]
        return {"group": self.group.to_json(), "n": self.n, "connection_sets": sets}


class _Matrix:
    """Square matrix over a commutative ring whose elements support + - * and / int."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(r) for r in entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        self.entries = rows

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def submatrix(self, X: Sequence[int]):
        return type(self)([[self.entries[i][j] for j in X] for i in X])

    def _one(self):
        raise NotImplementedError

    def _zero(self):
        return self._one() * 0

    def _matmul(self, other_rows):
        n = self.n
        zero = self._zero()
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = acc + self.entries[i][k] * other_rows[k][j]
                row.append(acc)
            out.append(row)
        return out

    def faddeev_leverrier(self) -> list:
        """[beta_0, ..., beta_n] via the Faddeev-LeVerrier recurrence."""
        n = self.n
        one, zero = self._one(), self._zero()
        c = [zero] * (n + 1)
        c[n] = one
        M = [[zero] * n for _ in range(n)]
        for k in range(1, n + 1):
            AM = self._matmul(M)
            M = [[AM[i][j] + (c[n - k + 1] if i == j else zero) for j in range(n)] for i in range(n)]
            AMk = self._matmul(M)
            tr = zero
            for i in range(n):
                tr = tr + AMk[i][i]
            c[n - k] = -(tr / k)
        return [c[n - k] * (-1) ** k for k in range(n + 1)]

    def det_by_permutations(self):
        n = self.n
        total = self._zero()
        for perm in permutations(range(n)):
            term = self._one()
            for i, j in enumerate(perm):
                term = term * self.entries[i][j]
                if _is_zero(term):
                    break
            else:
                total = total + term if _perm_sign(perm) > 0 else total - term
        return total

    def beta_by_minors(self, k: int):
        """Sum of the determinants of all order-k principal submatrices."""
        if k == 0:
            return self._one()
        total = self._zero()
        for X in combinations(range(self.n), k):
            total = total + self.submatrix(X).det_by_permutations()
        return total


def _is_zero(x) -> bool:
    return x.is_zero() if hasattr(x, "is_zero") else x == 0


def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class GAMatrix(_Matrix):
    """n x n matrix over Q[G]; all entries share one group."""

    __slots__ = ()

    def __init__(self, entries):
        super().__init__(entries)
        groups = {e.group for row in self.entries for e in row}
        if len(groups) > 1:
            raise ValueError("GAMatrix entries must share a group")

    @property
    def group(self) -> FiniteAbelianGroup:
        return self.entries[0][0].group

    def _one(self):
        return GroupAlgebraElement.unit(self.group)

    def _zero(self):
        return GroupAlgebraElement.zero(self.group)

    def describe(self) -> list:
        return [[e.describe() for e in row] for row in self.entries]


class CycloMatrix(_Matrix):
    """n x n matrix over Q(omega_N) with a common conductor."""

    __slots__ = ()

    def __init__(self, entries):
        super().__init__(entries)
        conductors = {e.conductor for row in self.entries for e in row}
        if len(conductors) > 1:
            raise ValueError("CycloMatrix entries must share a conductor")

    @property
    def conductor(self) -> int:
        return self.entries[0][0].conductor

    def _one(self):
        return CyclotomicNumber.one(self.conductor)

    def _zero(self):
        return CyclotomicNumber.zero(self.conductor)

    def det(self) -> CyclotomicNumber:
        """Gaussian elimination over the field."""
        rows = [list(r) for r in self.entries]
        n = self.n
        det = self._one()
        for col in range(n):
            piv = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
            if piv is None:
                return self._zero()
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                det = -det
            p = rows[col][col]
            det = det * p
            inv = p.inverse()
            for r in range(col + 1, n):
                f = rows[r][col]
                if f.is_zero():
                    continue
                f = f * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        return det

    def char_poly(self) -> Polynomial:
        """det(xI - A) by direct expansion in the polynomial ring (independent of beta)."""
        n = self.n
        one = self._one()
        polys = [
            [Polynomial([-self.entries[i][j], one]) if i == j else Polynomial([-self.entries[i][j]]) for j in range(n)]
            for i in range(n)
        ]
        total = Polynomial()
        for perm in permutations(range(n)):
            term = Polynomial([one])
            for i, j in enumerate(perm):
                term = term * polys[i][j]
            total = total + term if _perm_sign(perm) > 0 else total - term
        return total


def delta_matrix(spec: NCayleySpec) -> GAMatrix:
    """Entry (i, j) is the indicator of -S_{j,i}."""
    G = spec.group
    n = spec.n
    return GAMatrix([[indicator(G, [G.neg(s) for s in spec.S(j, i)]) for j in range(n)] for i in range(n)])


def beta_all(A: GAMatrix) -> list:
    return A.faddeev_leverrier()


def det_convolution(A: GAMatrix, cap: int = DEFAULT_DET_CAP) -> GroupAlgebraElement:
    if A.n > cap:
        raise ValueError(f"permutation expansion limited to n <= {cap}; use beta_all for larger matrices")
    return A.det_by_permutations()


def transform(A: GAMatrix, v: ElementLike) -> CycloMatrix:
    """Entrywise Fourier coefficient at chi_v."""
    return CycloMatrix([[fourier_coefficient(e, v) for e in row] for row in A.entries])


def random_ga_matrix(rng, G: FiniteAbelianGroup, n: int, lo: int = -2, hi: int = 2, density: float = 0.5) -> GAMatrix:
    """Random GAMatrix with small integer (occasionally half-integer) values; for tests and scripts."""
    def entry():
        vals = []
        for _ in range(G.order):
            if rng.random() < density:
                v = Fraction(rng.randint(lo, hi), rng.choice((1, 1, 1, 2)))
            else:
                v = Fraction(0)
            vals.append(v)
        return GroupAlgebraElement(G, vals)

    return GAMatrix([[entry() for _ in range(n)] for _ in range(n)])
