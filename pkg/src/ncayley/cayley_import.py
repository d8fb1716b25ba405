"""Reduce a Cayley digraph over a finite group to an n-Cayley spec.

Given G0 with an abelian subgroup G of index n and a left transversal
s_1..s_n, Cay(G0, S) is isomorphic to the n-Cayley digraph with
S_{i,j} = {g in G : s_j g s_i^-1 in S}, via s_i g <-> (g, i).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .ga_matrix import NCayleySpec
from .groups import FiniteAbelianGroup


class TransversalError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroupTable:
    mult: tuple
    labels: Optional[tuple] = None
    identity: int = field(init=False)
    inverse: tuple = field(init=False)

    def __post_init__(self):
        mult = tuple(tuple(int(x) for x in row) for row in self.mult)
        n = len(mult)
        if n == 0 or any(len(row) != n for row in mult):
            raise ValueError("multiplication table must be a non-empty square array")
        if any(not 0 <= x < n for row in mult for x in row):
            raise ValueError("multiplication table entries must be element indices")
        for row in mult:
            if len(set(row)) != n:
                raise ValueError("multiplication table rows must be permutations (Latin square)")
        ident = next((e for e in range(n) if all(mult[e][x] == x and mult[x][e] == x for x in range(n))), None)
        if ident is None:
            raise ValueError("multiplication table has no identity")
        inverse = []
        for x in range(n):
            inv = next((y for y in range(n) if mult[x][y] == ident and mult[y][x] == ident), None)
            if inv is None:
                raise ValueError(f"element {x} has no two-sided inverse")
            inverse.append(inv)
        rng = random.Random(0)
        triples = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)] if n <= 12 else [
            (rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(2000)
        ]
        for a, b, c in triples:
            if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
                raise ValueError(f"multiplication is not associative on ({a}, {b}, {c})")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must match the group order")
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "identity", ident)
        object.__setattr__(self, "inverse", tuple(inverse))

    @property
    def order(self) -> int:
        return len(self.mult)

    def mul(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = self.mult[acc][x]
        return acc

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)


@dataclass(frozen=True)
class SubgroupEmbedding:
    """Injective homomorphism from an abelian model into G0.

    ``injection[k]`` is the G0 index of the model element with canonical index k.
    """

    abelian_model: FiniteAbelianGroup
    injection: tuple
    group: FiniteGroupTable

    def __post_init__(self):
        G, G0 = self.abelian_model, self.group
        inj = tuple(int(x) for x in self.injection)
        if len(inj) != G.order:
            raise ValueError(f"injection must list {G.order} images")
        if len(set(inj)) != len(inj) or any(not 0 <= x < G0.order for x in inj):
            raise ValueError("injection must be injective into G0")
        if G0.order % G.order:
            raise ValueError("subgroup order must divide |G0|")
        table = G.add_table
        for a in range(G.order):
            for b in range(G.order):
                if G0.mult[inj[a]][inj[b]] != inj[table[a][b]]:
                    raise ValueError("injection is not a homomorphism")
        object.__setattr__(self, "injection", inj)

    @property
    def index(self) -> int:
        return self.group.order // self.abelian_model.order

    def preimage(self, x: int) -> Optional[tuple]:
        k = self._preimage.get(x)
        return None if k is None else self.abelian_model.elements[k]

    @property
    def _preimage(self) -> dict:
        return {x: k for k, x in enumerate(self.injection)}


def semidirect_product(m: int, k: int, t: int) -> FiniteGroupTable:
    """Z_m x| Z_k with (a, x)(b, y) = (a + t^x b, x + y); index of (a, x) is x*m + a."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    if gcd(t, m) != 1 or pow(t, k, m) != 1 % m:
        raise ValueError(f"t={t} does not define an action of Z_{k} on Z_{m} (need gcd(t,m)=1 and t^k = 1 mod m)")
    order = m * k
    mult = [[0] * order for _ in range(order)]
    for x in range(k):
        tx = pow(t, x, m)
        for a in range(m):
            for y in range(k):
                for b in range(m):
                    mult[x * m + a][y * m + b] = ((x + y) % k) * m + (a + tx * b) % m
    labels = tuple(f"({a},{x})" for x in range(k) for a in range(m))
    return FiniteGroupTable(tuple(map(tuple, mult)), labels)


def semidirect_index(m: int, a: int, x: int) -> int:
    return x * m + a


def semidirect_normal_subgroup(G0: FiniteGroupTable, m: int) -> SubgroupEmbedding:
    """The cyclic normal factor {(g, 0)} as a subgroup embedding."""
    return SubgroupEmbedding(FiniteAbelianGroup((m,)), tuple(range(m)), G0)


def verify_transversal(G0: FiniteGroupTable, emb: SubgroupEmbedding, transversal: Sequence[int]) -> bool:
    """True iff the products s_i g are pairwise distinct and cover G0."""
    if len(transversal) != emb.index:
        return False
    products = {G0.mult[s][x] for s in transversal for x in emb.injection}
    return len(products) == G0.order


def reduce_to_ncayley(
    G0: FiniteGroupTable, emb: SubgroupEmbedding, transversal: Sequence[int], S: Sequence[int]
) -> NCayleySpec:
    S = set(int(s) for s in S)
    if G0.identity in S:
        raise ValueError("connection set of a Cayley digraph must not contain the identity")
    if any(not 0 <= s < G0.order for s in S):
        raise ValueError("connection set contains an index outside G0")
    if not verify_transversal(G0, emb, transversal):
        raise TransversalError("the given elements are not a left transversal of the subgroup")
    n = len(transversal)
    G = emb.abelian_model
    sets = []
    for i in range(n):
        si_inv = G0.inverse[transversal[i]]
        row = []
        for j in range(n):
            sj = transversal[j]
            row.append(
                frozenset(g for g, x in zip(G.elements, emb.injection) if G0.mul(sj, x, si_inv) in S)
            )
        sets.append(tuple(row))
    return NCayleySpec(G, tuple(sets))


def cayley_adjacency(G0: FiniteGroupTable, S: Sequence[int]) -> list:
    """Arc g -> h whenever h g^-1 in S; rows/columns by G0 index."""
    S = set(S)
    n = G0.order
    return [[1 if G0.mult[h][G0.inverse[g]] in S else 0 for h in range(n)] for g in range(n)]


def transversal_vertex_map(G0: FiniteGroupTable, emb: SubgroupEmbedding, transversal: Sequence[int]) -> list:
    """vertex_map[x] = oracle vertex index of psi(x), where psi(s_i g) = (g, i)."""
    n = len(transversal)
    out = [None] * G0.order
    for i, s in enumerate(transversal):
        for k, x in enumerate(emb.injection):
            out[G0.mult[s][x]] = k * n + i
    return out
