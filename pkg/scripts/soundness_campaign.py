"""Randomized soundness campaign: oracle equality, report consistency, reconstruction.

    python scripts/soundness_campaign.py --specs 500 --max-order 12 --seed 1
"""
import argparse
import json
import random
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass
from math import prod

import mpmath

from ncayley.ga_matrix import NCayleySpec
from ncayley.groups import FiniteAbelianGroup
from ncayley.oracle import equivalence_check
from ncayley.spectra import analyze, cyclotomic_reconstruct

FACTORS = [(d,) for d in range(2, 21)] + [(2, 2), (2, 4), (2, 6), (3, 3), (2, 8), (4, 4), (2, 2, 2)]


@dataclass
class CampaignConfig:
    specs: int = 300
    max_order: int = 10
    max_n: int = 3
    seed: int = 0
    perturbation: float = 1e-6


def random_spec(rng, G, n, density):
    return NCayleySpec(G, tuple(
        tuple(frozenset(g for g in G.elements if rng.random() < density) for _ in range(n)) for _ in range(n)
    ))


def main(cfg: CampaignConfig) -> dict:
    rng = random.Random(cfg.seed)
    factors = [f for f in FACTORS if prod(f) <= cfg.max_order]
    stats = Counter()
    t0 = time.perf_counter()
    for _ in range(cfg.specs):
        G = FiniteAbelianGroup(rng.choice(factors))
        spec = random_spec(rng, G, rng.randint(1, cfg.max_n), rng.choice([0.15, 0.3, 0.5]))
        stats["specs"] += 1
        if not equivalence_check(spec):
            stats["oracle_mismatch"] += 1
            print("MISMATCH", spec.to_json(), file=sys.stderr)
            continue
        a = analyze(spec)
        stats[a.report.certification_method.value] += 1
        for c in a.verified_eigenvalues:
            with mpmath.workprec(a.config.precision_bits + 32):
                z = c.to_complex(a.config.precision_bits) + mpmath.mpf(cfg.perturbation)
                polys = list(a.representative_polys.values())
                hits = [cyclotomic_reconstruct(z, c.conductor, a.config.precision_bits, P) for P in polys]
            stats["perturbed"] += 1
            stats["perturbed_accepted"] += any(h is not None for h in hits)
    summary = {"config": asdict(cfg), "counts": dict(stats), "seconds": round(time.perf_counter() - t0, 1)}
    print(json.dumps(summary, indent=2, sort_keys=True))
    return summary


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--specs", type=int, default=300)
    p.add_argument("--max-order", type=int, default=10)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    s = main(CampaignConfig(a.specs, a.max_order, a.max_n, a.seed))
    bad = s["counts"].get("oracle_mismatch", 0) + s["counts"].get("perturbed_accepted", 0)
    sys.exit(1 if bad else 0)
