"""Check the 5-dimensional families with lam symbolic: Poisson, invariance, Casimir, wedge-square identity."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from typing import Optional

from hpoisson.bivector import (
    is_casimir,
    is_poisson,
    is_unimodular_div,
    wedge_square_cyclic5,
)
from hpoisson.catalog import FAMILIES, k5_casimir, q5, qr5_constant
from hpoisson.heisenberg import is_sigma_invariant, is_tau_invariant
from hpoisson.polyring import embed, format_poly, partial


@dataclass
class Config:
    families: tuple = ("q51", "q52")
    casimir_out: Optional[str] = None  # write K5 of the first family here


def run(cfg: Config) -> bool:
    ok = True
    for i, name in enumerate(cfg.families):
        fam = FAMILIES[name]
        B = q5(name)
        reports = [c(B) for c in (is_poisson, is_sigma_invariant, is_tau_invariant, is_unimodular_div)]
        K = k5_casimir(fam.A, fam.B)
        reports.append(is_casimir(B, K))
        c = qr5_constant(fam.A, fam.B)
        num, den = embed(c.num, B.vs), embed(c.den, B.vs)
        wedge_ok = all(
            (den * wedge_square_cyclic5(B, m) - num * partial(K, m)).is_zero() for m in range(5)
        )
        print(f"{name}:")
        for r in reports:
            print(f"    {r.describe()}")
        print(f"    wedge-square identity: {'PASS' if wedge_ok else 'FAIL'}")
        print(f"    constant = ({format_poly(c.num)}) / ({format_poly(c.den)})")
        ok &= wedge_ok and all(reports)
        if i == 0 and cfg.casimir_out:
            with open(cfg.casimir_out, "w") as fh:
                fh.write(format_poly(K) + "\n")
            print(f"    K5 written to {cfg.casimir_out}")
    return ok


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", action="append", choices=sorted(FAMILIES))
    ap.add_argument("--casimir-out", metavar="FILE")
    a = ap.parse_args()
    cfg = Config(tuple(a.family) if a.family else Config.families, a.casimir_out)
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
