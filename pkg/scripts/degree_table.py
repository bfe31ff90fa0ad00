"""Table of free-parameter counts of the generic invariant tensor by dimension and degree."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from hpoisson.heisenberg import generic_invariant_homogeneous


@dataclass
class Config:
    n_min: int = 3
    n_max: int = 8
    max_degree: int = 0  # 0 means 2n + 2 for each n


def run(cfg: Config) -> None:
    for n in range(cfg.n_min, cfg.n_max + 1):
        top = cfg.max_degree or 2 * n + 2
        counts = [len(generic_invariant_homogeneous(n, N).params) for N in range(1, top + 1)]
        live = [f"N={N}:{c}" for N, c in enumerate(counts, start=1) if c]
        print(f"n={n}: " + ", ".join(live))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    d = Config()
    ap.add_argument("--n-min", type=int, default=d.n_min)
    ap.add_argument("--n-max", type=int, default=d.n_max)
    ap.add_argument("--max-degree", type=int, default=d.max_degree)
    a = ap.parse_args()
    run(Config(a.n_min, a.n_max, a.max_degree))


if __name__ == "__main__":
    main()
