"""Walk the 21-vertex Cayley digraph on Z_7 x| Z_3 through every stage.

    python scripts/worked_example.py [--precision 256]
"""
import argparse
import time
from dataclasses import dataclass

from ncayley.cayley_import import (
    cayley_adjacency,
    reduce_to_ncayley,
    semidirect_index,
    semidirect_normal_subgroup,
    semidirect_product,
    transversal_vertex_map,
)
from ncayley.config import AnalysisConfig
from ncayley.oracle import build_adjacency, char_poly_int
from ncayley.spectra import analyze


@dataclass
class ExampleConfig:
    m: int = 7
    k: int = 3
    t: int = 2
    transversal: tuple = ((0, 1), (0, 2), (0, 0))
    connection_set: tuple = ((5, 0), (6, 0), (2, 1), (3, 1), (1, 2), (4, 2))
    precision_bits: int = 256


def main(cfg: ExampleConfig):
    t0 = time.perf_counter()
    G0 = semidirect_product(cfg.m, cfg.k, cfg.t)
    emb = semidirect_normal_subgroup(G0, cfg.m)
    T = [semidirect_index(cfg.m, a, x) for a, x in cfg.transversal]
    S = [semidirect_index(cfg.m, a, x) for a, x in cfg.connection_set]
    spec = reduce_to_ncayley(G0, emb, T, S)

    # the reduction must be an isomorphism of digraphs
    direct = cayley_adjacency(G0, S)
    vmap = transversal_vertex_map(G0, emb, T)
    size = len(direct)
    permuted = [[0] * size for _ in range(size)]
    for x in range(size):
        for y in range(size):
            permuted[vmap[x]][vmap[y]] = direct[x][y]
    assert permuted == build_adjacency(spec)

    a = analyze(spec, AnalysisConfig(precision_bits=cfg.precision_bits))
    print(f"G0 = Z_{cfg.m} x| Z_{cfg.k} (t={cfg.t}), |G0| = {G0.order}, S = {[G0.label(s) for s in S]}")
    print("Delta:")
    for row in a.delta.describe():
        print("   ", "  ".join(f"{e:>8}" for e in row))
    for k, b in enumerate(a.betas[1:], 1):
        print(f"beta_{k} = {b.describe()}")
    print(f"H = {list(a.stabilizer.members)}")
    print("orbits:", [[g[0] for g in o] for o in a.orbits.orbits])
    for v, P in a.representative_polys.items():
        print(f"  P_{v[0]}(x) = {P}")
    print("char poly:", a.char_poly)
    assert a.char_poly == char_poly_int(build_adjacency(spec))
    print("eigenvalues:", ", ".join(str(c) for c in a.verified_eigenvalues))
    r = a.report
    print(f"bounds {r.lower_bound} <= deg <= {r.upper_bound}; certified degree {r.certified_degree}")
    print(r.splitting_field_note)
    print(f"elapsed {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--precision", type=int, default=256)
    args = p.parse_args()
    main(ExampleConfig(precision_bits=args.precision))
