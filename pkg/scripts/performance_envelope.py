"""Wall-clock of the full analysis over N <= 20, n <= 3.

    python scripts/performance_envelope.py --max-order 20 --repeats 2
"""
import argparse
import random
import statistics
import time
from dataclasses import dataclass

from ncayley.ga_matrix import NCayleySpec
from ncayley.groups import FiniteAbelianGroup
from ncayley.spectra import analyze


@dataclass
class EnvelopeConfig:
    max_order: int = 20
    max_n: int = 3
    repeats: int = 2
    density: float = 0.3
    seed: int = 0


def main(cfg: EnvelopeConfig):
    rng = random.Random(cfg.seed)
    print(f"{'N':>3} {'n':>2} {'median s':>9} {'max s':>7}  methods")
    worst = 0.0
    for N in range(2, cfg.max_order + 1):
        G = FiniteAbelianGroup((N,))
        for n in range(1, cfg.max_n + 1):
            times, methods = [], []
            for _ in range(cfg.repeats):
                spec = NCayleySpec(G, tuple(
                    tuple(frozenset(g for g in G.elements if rng.random() < cfg.density) for _ in range(n))
                    for _ in range(n)
                ))
                t0 = time.perf_counter()
                r = analyze(spec).report
                times.append(time.perf_counter() - t0)
                methods.append(r.certification_method.value)
            worst = max(worst, max(times))
            print(f"{N:3d} {n:2d} {statistics.median(times):9.2f} {max(times):7.2f}  {','.join(sorted(set(methods)))}")
    print(f"worst {worst:.2f}s")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=20)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--repeats", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    main(EnvelopeConfig(a.max_order, a.max_n, a.repeats, seed=a.seed))
