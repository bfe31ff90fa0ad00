"""Polynomial systems in the free parameters that encode the Jacobi identity."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .bivector import Bivector, VerificationReport, _report, jacobiators
from .heisenberg import GenericTensor
from .linalg import rank
from .polyring import (
    Poly,
    VarSpace,
    VarSpaceMismatch,
    coefficients_by_coords,
    format_poly,
    lift,
    monomial_key,
    parse_poly,
    sorted_terms,
    substitute,
)


def normalize(p: Poly) -> Poly:
    """Scale to integer coefficients with content 1 and a positive leading coefficient."""
    if p.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    coeffs = list(p.terms.values())
    den = math.lcm(*(c.denominator for c in coeffs))
    g = math.gcd(*(int(c * den) for c in coeffs))
    factor = Fraction(den, g)
    if sorted_terms(p)[0][1] < 0:
        factor = -factor
    return p * factor


def _canonical_key(p: Poly) -> tuple:
    k = len(p.vs.params)
    return tuple((monomial_key(m, k), -c) for m, c in sorted_terms(p))


@dataclass(frozen=True)
class ConstraintSystem:
    """Nonzero, primitive, sign-normalized, deduplicated polynomials in parameters only."""

    vs: VarSpace
    polys: tuple

    def __post_init__(self):
        if self.vs.n != 0:
            raise ValueError("constraint systems live over a parameter-only space (n = 0)")
        for p in self.polys:
            if p.vs != self.vs:
                raise VarSpaceMismatch(f"{p.vs} vs {self.vs}")
            if p.is_zero():
                raise ValueError("zero polynomial in constraint system")

    @classmethod
    def from_polys(cls, vs: VarSpace, polys: Iterable[Poly]) -> "ConstraintSystem":
        normed = {normalize(p) for p in polys if not p.is_zero()}
        return cls(vs, tuple(sorted(normed, key=_canonical_key, reverse=True)))

    @classmethod
    def parse(cls, params: Iterable[str], texts: Iterable[str]) -> "ConstraintSystem":
        vs = VarSpace(0, tuple(params))
        return cls.from_polys(vs, (parse_poly(t, vs) for t in texts))

    @property
    def params(self) -> tuple:
        return self.vs.params

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def normalized(self) -> "ConstraintSystem":
        return ConstraintSystem.from_polys(self.vs, self.polys)

    def to_json(self) -> dict:
        return {"params": list(self.vs.params), "polys": [format_poly(p) for p in self.polys]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict) -> "ConstraintSystem":
        try:
            return cls.parse(data["params"], data["polys"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed constraint-system JSON: {exc}") from exc


def jacobi_constraints(G: GenericTensor | Bivector) -> ConstraintSystem:
    """Coefficients (in the parameters) of every coordinate monomial of every Jacobiator."""
    B = G.bivector if isinstance(G, GenericTensor) else G
    pvs = VarSpace(0, B.vs.params)
    found = []
    for _, J in jacobiators(B):
        found.extend(coefficients_by_coords(J, pvs).values())
    return ConstraintSystem.from_polys(pvs, found)


def _aligned(S1: ConstraintSystem, S2: ConstraintSystem) -> ConstraintSystem:
    if set(S1.params) != set(S2.params):
        raise VarSpaceMismatch(f"parameter spaces differ: {S1.params} vs {S2.params}")
    if S1.vs == S2.vs:
        return S2
    return ConstraintSystem.from_polys(S1.vs, (lift(p, S1.vs) for p in S2.polys))


def span_equivalent(S1: ConstraintSystem, S2: ConstraintSystem) -> bool:
    """Whether the Q-linear spans of the two polynomial sets coincide."""
    S2 = _aligned(S1, S2)
    rows1 = [p.terms for p in S1.polys]
    rows2 = [p.terms for p in S2.polys]
    r1, r2 = rank(rows1), rank(rows2)
    return r1 == r2 == rank(rows1 + rows2)


def verify_assignment(S: ConstraintSystem, assign: Mapping) -> VerificationReport:
    """Pass iff every polynomial of S vanishes after substituting ``assign``."""
    missing = [p for p in S.params if p not in assign]
    if missing:
        raise KeyError(f"assignment misses parameter(s) {missing}")
    return _report(
        "constraints",
        (((k,), substitute(p, assign)) for k, p in enumerate(S.polys)),
    )
