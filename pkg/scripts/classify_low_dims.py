"""Generate the Jacobi constraint systems for small n and compare with the printed ones.

    python scripts/classify_low_dims.py --dims 3 4 5 6
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from hpoisson.catalog import jac4_system, jac5_system, jac6_system
from hpoisson.constraints import jacobi_constraints, span_equivalent
from hpoisson.heisenberg import generic_invariant_quadratic
from hpoisson.polyring import format_poly

PRINTED = {4: jac4_system, 5: jac5_system, 6: jac6_system}


@dataclass
class Config:
    dims: list = field(default_factory=lambda: [3, 4, 5, 6])
    show_polys: bool = True


def run(cfg: Config) -> None:
    for n in cfg.dims:
        t0 = time.perf_counter()
        G = generic_invariant_quadratic(n)
        S = jacobi_constraints(G)
        dt = time.perf_counter() - t0
        print(f"n={n}: {len(G.params)} parameters {list(G.params)}, {len(S)} constraints ({dt:.2f} s)")
        if cfg.show_polys:
            for p in S:
                print(f"    {format_poly(p)} = 0")
        if n in PRINTED:
            same = span_equivalent(S, PRINTED[n]())
            print(f"    printed system: {'same span' if same else 'DIFFERENT span'}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", type=int, nargs="+", default=Config().dims)
    ap.add_argument("--quiet", action="store_true", help="hide the polynomials")
    a = ap.parse_args()
    run(Config(dims=a.dims, show_polys=not a.quiet))


if __name__ == "__main__":
    main()
