"""Heisenberg invariance: sigma/tau predicates and generic invariant tensors.

A sigma- and tau-invariant antisymmetric tensor is fixed by its first-row
slots ``P_{0,d}`` for ``d = 1 .. n//2``; every other entry is a cyclic shift
of one of these (``P_{i,i+d} = sigma^i P_{0,d}``) or its negative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .bivector import Bivector, VerificationReport, _report
from .polyring import Poly, VarSpace, sigma_apply, tau_degree


def is_sigma_invariant(B: Bivector) -> VerificationReport:
    """P_{i+1,j+1} == sigma(P_ij) for every pair (indices mod n)."""
    def diffs():
        for i, j in itertools.combinations(range(B.n), 2):
            yield (i, j), B[i + 1, j + 1] - sigma_apply(B[i, j], 1)

    return _report("sigma", diffs())


def is_tau_invariant(B: Bivector) -> VerificationReport:
    """Each P_ij is tau-homogeneous of degree i + j mod n.

    Equivalent to eps^(i+j) P_ij(x) = P_ij(x_0, eps x_1, ..., eps^(n-1) x_{n-1})
    without materializing roots of unity.
    """
    def offenders():
        for (i, j), p in sorted(B.entries.items()):
            if tau_degree(p) != (i + j) % B.n:
                yield (i, j), p

    return _report("tau", offenders())


def admissible_degree(n: int, N: int) -> bool:
    """Whether an invariant bracket can have entries of total degree N."""
    return (N - 2) % n == 0


@dataclass(frozen=True)
class ParamSource:
    """Where a generic parameter lives: slot ``d`` (entry P_{0,d}) and the
    signed monomials it multiplies there."""

    name: str
    slot: int
    monomials: tuple  # ((exponent tuple, sign), ...)

    def to_json(self) -> dict:
        return {
            "param": self.name,
            "slot": self.slot,
            "monomials": [{"exps": list(e), "sign": s} for e, s in self.monomials],
        }


@dataclass(frozen=True)
class GenericTensor:
    n: int
    degree: int
    provenance: tuple  # of ParamSource

    @property
    def params(self) -> tuple:
        return tuple(s.name for s in self.provenance)

    @property
    def vs(self) -> VarSpace:
        return VarSpace(self.n, self.params)

    def slot(self, d: int) -> Poly:
        """P_{0,d} as a polynomial linear in the parameters."""
        vs = self.vs
        terms: dict = {}
        for k, src in enumerate(self.provenance):
            if src.slot == d:
                for exps, sign in src.monomials:
                    terms[(tuple(exps), ((k, 1),))] = sign
        return Poly(vs, terms)

    @cached_property
    def bivector(self) -> Bivector:
        n = self.n
        slots = {d: self.slot(d) for d in range(1, n // 2 + 1)}

        def entry(i, j):
            d = j - i
            if d <= n // 2:
                return sigma_apply(slots[d], i)
            return -sigma_apply(slots[n - d], j)

        return Bivector.from_function(self.vs, entry)

    def to_json(self) -> dict:
        out = self.bivector.to_json()
        out["provenance"] = [s.to_json() for s in self.provenance]
        return out


def _monomials(n: int, N: int, residue: int):
    """Exponent vectors of total degree N with sum(i * a_i) = residue mod n, descending lex."""
    def rec(i, left, acc, partial):
        if i == n - 1:
            if (partial + i * left) % n == residue:
                yield acc + (left,)
            return
        for a in range(left, -1, -1):
            yield from rec(i + 1, left - a, acc + (a,), partial + i * a)

    yield from rec(0, N, (), 0)


# Coefficient names used in the classification tables for n <= 6 (quadratic case),
# keyed by the unordered index pair of the monomial x_a x_b in slot P_{0,d}.
_TABLE_NAMES = {
    3: {(0, 1): "A1", (2, 2): "A2"},
    4: {(0, 1): "A1", (2, 3): "A2", (0, 2): "B1", (3, 3): "B2", (1, 1): "B3"},
    5: {(0, 1): "A1", (2, 4): "A2", (3, 3): "A3",
        (0, 2): "B1", (3, 4): "B2", (1, 1): "B3"},
    6: {(0, 1): "A1", (2, 5): "A2", (3, 4): "A3",
        (0, 2): "B1", (3, 5): "B2", (1, 1): "B3", (4, 4): "B4",
        (0, 3): "C1", (4, 5): "C2", (1, 2): "C3"},
}
# the one surviving middle-slot parameter after antisymmetry elimination
_TABLE_RENAME = {4: {"B3": "B"}, 6: {"C3": "C"}}


def _pair(exps: tuple) -> tuple:
    idx = [i for i, e in enumerate(exps) for _ in range(e)]
    return tuple(idx)


def generic_invariant_homogeneous(n: int, N: int) -> GenericTensor:
    """Most general sigma/tau-invariant antisymmetric tensor with degree-N entries.

    Slot P_{0,d} starts as a free combination of every degree-N monomial of
    tau-degree d. Then:

    * sigma raises the tau-degree of a degree-N polynomial by N, while the
      entry P_{1,1+d} must have tau-degree d + 2; unless N = 2 mod n the
      slot is forced to vanish;
    * for even n the middle slot must satisfy P_{0,n/2} = -sigma^{n/2} P_{0,n/2}:
      monomials fixed by sigma^{n/2} drop out and each swapped pair keeps one
      parameter with opposite signs.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if N < 1:
        raise ValueError(f"degree must be >= 1, got {N}")
    table = _TABLE_NAMES.get(n) if N == 2 else None
    rename = _TABLE_RENAME.get(n, {}) if N == 2 else {}
    sources = []
    for d in range(1, n // 2 + 1):
        if (d + N) % n != (d + 2) % n:
            continue
        monos = list(_monomials(n, N, d))
        if 2 * d == n:
            groups = []
            seen = set()
            for m in monos:
                if m in seen:
                    continue
                image = m[d:] + m[:d]  # sigma^{n/2}
                seen.update((m, image))
                if image != m:
                    groups.append(((m, 1), (image, -1)))
        else:
            groups = [((m, 1),) for m in monos]
        slot_sources = []
        for k, g in enumerate(groups):
            if table is not None:
                name = table[_pair(g[0][0])]
                name = rename.get(name, name)
            else:
                name = f"p{d}_{k}"
            slot_sources.append(ParamSource(name, d, g))
        if table is not None:
            slot_sources.sort(key=lambda s: s.name)
        sources.extend(slot_sources)
    return GenericTensor(n, N, tuple(sources))


def generic_invariant_quadratic(n: int) -> GenericTensor:
    return generic_invariant_homogeneous(n, 2)
