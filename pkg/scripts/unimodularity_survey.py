"""Random rational instances of the generic invariant quadratic tensor: is the modular field zero?

Jacobi is not imposed, so this exercises the claim that antisymmetry and
Heisenberg invariance alone force unimodularity.
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass
from fractions import Fraction

from hpoisson.bivector import is_poisson, modular_field
from hpoisson.heisenberg import generic_invariant_quadratic


@dataclass
class Config:
    n_min: int = 3
    n_max: int = 8
    samples: int = 50
    seed: int = 0
    span: int = 9


def run(cfg: Config) -> dict:
    rng = random.Random(cfg.seed)
    summary = {}
    for n in range(cfg.n_min, cfg.n_max + 1):
        G = generic_invariant_quadratic(n)
        zero_field = poisson = 0
        for _ in range(cfg.samples):
            vals = {
                p: Fraction(rng.randint(-cfg.span, cfg.span), rng.randint(1, cfg.span))
                for p in G.params
            }
            B = G.bivector.substitute(vals)
            zero_field += modular_field(B).is_zero()
            poisson += bool(is_poisson(B))
        summary[n] = (zero_field, poisson)
        print(f"n={n}: modular field zero in {zero_field}/{cfg.samples}; Poisson in {poisson}/{cfg.samples}")
    return summary


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    d = Config()
    ap.add_argument("--n-min", type=int, default=d.n_min)
    ap.add_argument("--n-max", type=int, default=d.n_max)
    ap.add_argument("--samples", type=int, default=d.samples)
    ap.add_argument("--seed", type=int, default=d.seed)
    a = ap.parse_args()
    run(Config(n_min=a.n_min, n_max=a.n_max, samples=a.samples, seed=a.seed))


if __name__ == "__main__":
    main()
