"""Bivectors (antisymmetric matrices of polynomials) and the checks run on them."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .polyring import (
    Poly,
    VarSpace,
    VarSpaceMismatch,
    exact_div,
    format_poly,
    parse_poly,
    partial,
    substitute,
    substituted_space,
)


@dataclass(frozen=True)
class VerificationReport:
    check: str
    passed: bool
    witness: Optional[tuple] = None  # (index tuple, nonzero Poly)

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a report passes exactly when it carries no witness")

    def __bool__(self):
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"{self.check}: PASS"
        idx, poly = self.witness
        return f"{self.check}: FAIL at {idx}: {format_poly(poly)}"

    def to_json(self) -> dict:
        out = {"check": self.check, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = {"index": list(self.witness[0]), "poly": format_poly(self.witness[1])}
        return out


def _report(check: str, failures: Iterable) -> VerificationReport:
    for idx, poly in failures:
        if not poly.is_zero():
            return VerificationReport(check, False, (tuple(idx), poly))
    return VerificationReport(check, True)


@dataclass(frozen=True)
class VectorField:
    vs: VarSpace
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if len(self.components) != self.vs.n:
            raise ValueError(f"expected {self.vs.n} components, got {len(self.components)}")
        if any(c.vs != self.vs for c in self.components):
            raise VarSpaceMismatch("vector field components over different spaces")

    def __getitem__(self, i: int) -> Poly:
        return self.components[i]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)


@dataclass(frozen=True)
class Bivector:
    """Antisymmetric n x n matrix stored by its strict upper triangle.

    ``B[i, j]`` reads any entry: ``-P_ji`` below the diagonal, 0 on it.
    """

    vs: VarSpace
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), p in self.entries.items():
            if not (0 <= i < j < self.vs.n):
                raise ValueError(f"entry index {(i, j)} must satisfy 0 <= i < j < n")
            if p.vs != self.vs:
                raise VarSpaceMismatch(f"entry {(i, j)} is over {p.vs}, expected {self.vs}")
            if not p.is_zero():
                clean[(i, j)] = p
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_function(cls, vs: VarSpace, fn: Callable[[int, int], Poly]) -> "Bivector":
        """Build from ``fn(i, j)`` evaluated on i < j."""
        return cls(vs, {(i, j): fn(i, j) for i, j in itertools.combinations(range(vs.n), 2)})

    @classmethod
    def zero(cls, vs: VarSpace) -> "Bivector":
        return cls(vs, {})

    @property
    def n(self) -> int:
        return self.vs.n

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        n = self.vs.n
        i %= n
        j %= n
        if i == j:
            return self.vs.zero()
        if i < j:
            return self.entries.get((i, j)) or self.vs.zero()
        p = self.entries.get((j, i))
        return -p if p is not None else self.vs.zero()

    def __eq__(self, other):
        if not isinstance(other, Bivector):
            return NotImplemented
        return self.vs == other.vs and self.entries == other.entries

    def __hash__(self):
        return hash((self.vs, frozenset(self.entries.items())))

    def map(self, fn: Callable[[Poly], Poly], vs: VarSpace | None = None) -> "Bivector":
        new = {k: fn(p) for k, p in self.entries.items()}
        if vs is None:
            vs = next(iter(new.values())).vs if new else self.vs
        return Bivector(vs, new)

    def substitute(self, assign, vs: VarSpace | None = None) -> "Bivector":
        if vs is None:
            vs = substituted_space(self.vs, assign)
        return Bivector(vs, {k: substitute(p, assign, vs) for k, p in self.entries.items()})

    def __neg__(self):
        return Bivector(self.vs, {k: -p for k, p in self.entries.items()})

    def __add__(self, other: "Bivector"):
        keys = set(self.entries) | set(other.entries)
        return Bivector(self.vs, {k: self[k] + other[k] for k in keys})

    def __sub__(self, other: "Bivector"):
        return self + (-other)

    def __mul__(self, c):
        return Bivector(self.vs, {k: p * c for k, p in self.entries.items()})

    __rmul__ = __mul__

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.vs.n,
            "params": list(self.vs.params),
            "entries": [
                {"i": i, "j": j, "poly": format_poly(p)}
                for (i, j), p in sorted(self.entries.items())
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict) -> "Bivector":
        try:
            vs = VarSpace(int(data["n"]), tuple(data.get("params", ())))
            entries = {}
            for e in data["entries"]:
                i, j = int(e["i"]), int(e["j"])
                if not i < j:
                    raise ValueError(f"entry ({i}, {j}) must have i < j")
                if (i, j) in entries:
                    raise ValueError(f"duplicate entry ({i}, {j})")
                entries[(i, j)] = parse_poly(e["poly"], vs)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed bivector JSON: {exc}") from exc
        return cls(vs, entries)


# ---------------------------------------------------------------------------
# Brackets and the Jacobi identity
# ---------------------------------------------------------------------------


def _check_vs(B: Bivector, *polys: Poly) -> None:
    for f in polys:
        if f.vs != B.vs:
            raise VarSpaceMismatch(f"{f.vs} vs bivector space {B.vs}")


def bracket(B: Bivector, f: Poly, g: Poly) -> Poly:
    """{f, g} = sum_{i<j} P_ij (d_i f d_j g - d_j f d_i g)."""
    _check_vs(B, f, g)
    df = [partial(f, i) for i in range(B.n)]
    dg = [partial(g, i) for i in range(B.n)]
    total = B.vs.zero()
    for (i, j), p in B.entries.items():
        w = df[i] * dg[j] - df[j] * dg[i]
        if w:
            total = total + p * w
    return total


class _Derivatives:
    """Lazy cache of d_l P_ab for a bivector."""

    def __init__(self, B: Bivector):
        self.B = B
        self._cache: dict = {}

    def __call__(self, a: int, b: int, l: int) -> Poly:
        if a > b:
            return -self(b, a, l)
        key = (a, b, l)
        if key not in self._cache:
            self._cache[key] = partial(self.B[a, b], l)
        return self._cache[key]


def _jacobiator(B: Bivector, i: int, j: int, k: int, d: _Derivatives) -> Poly:
    total = B.vs.zero()
    for l in range(B.n):
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            p = B[a, l]
            if p:
                q = d(b, c, l)
                if q:
                    total = total + p * q
    return total


def jacobiator(B: Bivector, i: int, j: int, k: int) -> Poly:
    """sum_l (P_il d_l P_jk + P_jl d_l P_ki + P_kl d_l P_ij); zero iff Jacobi holds on (x_i, x_j, x_k)."""
    n = B.n
    if len({i, j, k}) != 3:
        raise ValueError(f"jacobiator needs distinct indices, got {(i, j, k)}")
    if not all(0 <= t < n for t in (i, j, k)):
        raise IndexError(f"indices {(i, j, k)} out of range for n={n}")
    return _jacobiator(B, i, j, k, _Derivatives(B))


def jacobiators(B: Bivector):
    """Yield ((i, j, k), J_ijk) for all i < j < k in lexicographic order."""
    d = _Derivatives(B)
    for t in itertools.combinations(range(B.n), 3):
        yield t, _jacobiator(B, *t, d)


def is_poisson(B: Bivector) -> VerificationReport:
    return _report("jacobi", jacobiators(B))


# ---------------------------------------------------------------------------
# Modular field and unimodularity
# ---------------------------------------------------------------------------


def _divergence_row(B: Bivector, i: int) -> Poly:
    total = B.vs.zero()
    for j in range(B.n):
        if j != i:
            total = total + partial(B[i, j], j)
    return total


def modular_field(B: Bivector) -> VectorField:
    """Component i is 2 * sum_j d P_ij / d x_j."""
    return VectorField(B.vs, [_divergence_row(B, i) * 2 for i in range(B.n)])


def is_unimodular_div(B: Bivector, first_component_only: bool = False) -> VerificationReport:
    """Divergence criterion: every component of the modular field vanishes.

    With ``first_component_only`` only component 0 is examined, which is
    enough for a sigma-invariant bivector.
    """
    if first_component_only:
        return _report("unimodular", [((0,), _divergence_row(B, 0) * 2)])
    field_ = modular_field(B)
    return _report("unimodular", (((i,), c) for i, c in enumerate(field_.components)))


def is_casimir(B: Bivector, f: Poly) -> VerificationReport:
    _check_vs(B, f)
    xs = B.vs.xs()
    return _report("casimir", (((i,), bracket(B, xs[i], f)) for i in range(B.n)))


# ---------------------------------------------------------------------------
# Jacobian Poisson structures
# ---------------------------------------------------------------------------


def bareiss_det(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Fraction-free determinant over the polynomial ring."""
    m = [list(r) for r in rows]
    size = len(m)
    if any(len(r) != size for r in m):
        raise ValueError("matrix must be square")
    if size == 0:
        raise ValueError("empty matrix")
    vs = m[0][0].vs
    sign = 1
    prev = vs.one()
    for k in range(size - 1):
        if m[k][k].is_zero():
            swap = next((r for r in range(k + 1, size) if not m[r][k].is_zero()), None)
            if swap is None:
                return vs.zero()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = m[i][j] * piv - m[i][k] * m[k][j]
                m[i][j] = num if prev == 1 else exact_div(num, prev)
            m[i][k] = vs.zero()
        prev = piv
    det = m[size - 1][size - 1]
    return det if sign == 1 else -det


def jps_from_casimirs(vs: VarSpace, casimirs: Sequence[Poly], mult: Poly | int = 1) -> Bivector:
    """Bivector with P_ij = mult * det[e_i; e_j; grad Q_1; ...; grad Q_{n-2}]."""
    n = vs.n
    if len(casimirs) != n - 2:
        raise ValueError(f"need {n - 2} Casimirs for n={n}, got {len(casimirs)}")
    if not isinstance(mult, Poly):
        mult = vs.const(mult)
    _check_vs(Bivector.zero(vs), mult, *casimirs)
    grads = [[partial(q, l) for l in range(n)] for q in casimirs]
    one, zero = vs.one(), vs.zero()

    def unit(i):
        return [one if l == i else zero for l in range(n)]

    def entry(i, j):
        return mult * bareiss_det([unit(i), unit(j)] + grads)

    return Bivector.from_function(vs, entry)


# ---------------------------------------------------------------------------
# Five-dimensional wedge-square components
# ---------------------------------------------------------------------------


def wedge_square_cyclic5(B: Bivector, m: int) -> Poly:
    """P_ij P_kl + P_ki P_jl + P_jk P_il with (i, j, k, l, m) = (m+1, m+2, m+3, m+4, m) mod 5.

    For a Poisson structure with Casimir K this is proportional to dK/dx_m.
    Hand check at q51, lam = 1: A = (-2/5, -2, 1), B = (-4/5, 2, 1), so the
    constant -2 (B2 A1 + B3^2) / (A2 A3 - B1 B2) = -2 (1/5) / (-2/5) = 1.
    """
    if B.n != 5:
        raise ValueError(f"wedge_square_cyclic5 needs n = 5, got n = {B.n}")
    if not 0 <= m < 5:
        raise IndexError(f"m = {m} out of range")
    i, j, k, l = ((m + s) % 5 for s in (1, 2, 3, 4))
    return B[i, j] * B[k, l] + B[k, i] * B[j, l] + B[j, k] * B[i, l]
