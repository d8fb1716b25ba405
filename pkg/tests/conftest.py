import random
import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from ncayley.ga_matrix import NCayleySpec
from ncayley.group_algebra import GroupAlgebraElement
from ncayley.groups import FiniteAbelianGroup, units_mod

@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])


settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# every invariant-factor list with N <= 16 (d_i | d_{i+1} not required by the code)
SMALL_FACTORS = [(d,) for d in range(2, 17)] + [
    (2, 2), (2, 4), (2, 6), (3, 3), (2, 8), (4, 4), (2, 2, 2), (2, 2, 4), (3, 5),
]


def factors_up_to(bound):
    return [f for f in SMALL_FACTORS if _prod(f) <= bound]


def _prod(f):
    out = 1
    for d in f:
        out *= d
    return out


def groups(max_order=16):
    return st.sampled_from(factors_up_to(max_order)).map(FiniteAbelianGroup)


@st.composite
def ga_elements(draw, G=None, max_order=16, lo=-3, hi=3):
    if G is None:
        G = draw(groups(max_order))
    vals = draw(st.lists(st.integers(lo, hi), min_size=G.order, max_size=G.order))
    den = draw(st.integers(1, 3))
    return GroupAlgebraElement(G, [Fraction(v, den) for v in vals])


def random_spec(rng: random.Random, G: FiniteAbelianGroup, n: int, density=0.3, loops=True) -> NCayleySpec:
    sets = []
    for i in range(n):
        row = []
        for j in range(n):
            S = {g for g in G.elements if rng.random() < density}
            if not loops and i == j:
                S.discard(G.identity)
            row.append(frozenset(S))
        sets.append(tuple(row))
    return NCayleySpec(G, tuple(sets))


@st.composite
def specs(draw, max_order=10, max_n=3):
    G = draw(groups(max_order))
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    density = draw(st.sampled_from([0.15, 0.3, 0.5]))
    return random_spec(random.Random(seed), G, n, density)


# The worked example: Z_7 x| Z_3 reduced along the normal Z_7 with transversal
# (0,1), (0,2), (0,0).  Sets are 0-based S_{i,j}.
EXAMPLE_SETS = [
    [{3, 6}, {4, 6}, {1, 4}],
    [{2, 4}, {3, 5}, {2, 3}],
    [{1, 5}, {1, 2}, {5, 6}],
]


@pytest.fixture
def example_spec():
    G = FiniteAbelianGroup((7,))
    return NCayleySpec(G, tuple(tuple(frozenset(S) for S in row) for row in EXAMPLE_SETS))


def orbit_constant(G, H, draw_values):
    """A function constant on the eta_H orbits of G."""
    seen = {}
    it = iter(draw_values)
    for g in G:
        if g in seen:
            continue
        c = next(it)
        for l in H:
            seen[G.eta(l, g)] = c
    return GroupAlgebraElement(G, [seen[g] for g in G])


@st.composite
def unit_subgroups(draw, G):
    N = G.order
    units = list(units_mod(N))
    gens = draw(st.lists(st.sampled_from(units), max_size=2))
    H = {1}
    frontier = set(gens)
    while frontier:
        H |= frontier
        frontier = {a * b % N for a in H for b in H} - H
    return sorted(H)
