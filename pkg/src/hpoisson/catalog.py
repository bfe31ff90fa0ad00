"""Named Heisenberg-invariant structures and the printed constraint systems."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bivector import Bivector, jps_from_casimirs
from .constraints import ConstraintSystem
from .heisenberg import generic_invariant_quadratic
from .polyring import Poly, VarSpace, embed, sigma_apply

Value = Union[None, int, Fraction, Poly]

LAM = VarSpace(0, ("lam",))
_lam = LAM.p("lam")


@dataclass(frozen=True)
class CoefficientFamily:
    """Slot coefficients (A1, A2, A3), (B1, B2, B3) of a 5-dimensional tensor, as Laurent polys in lam."""

    name: str
    A: tuple
    B: tuple

    def assignment(self) -> dict:
        return dict(zip(("A1", "A2", "A3", "B1", "B2", "B3"), self.A + self.B))


FAMILIES = {
    "q51": CoefficientFamily(
        "q51",
        (Fraction(-3, 5) * _lam**2 + Fraction(1, 5) * _lam**-3, -2 * _lam**-1, _lam**-2),
        (Fraction(-1, 5) * _lam**2 - Fraction(3, 5) * _lam**-3, LAM.const(2), _lam),
    ),
    "q52": CoefficientFamily(
        "q52",
        (Fraction(2, 5) * _lam**2 + Fraction(1, 5) * _lam**-3, _lam, -_lam**-1),
        (Fraction(-1, 5) * _lam**2 + Fraction(2, 5) * _lam**-3, -_lam**-2, LAM.const(1)),
    ),
    "linear5": CoefficientFamily(
        "linear5",
        (1 - _lam / 2, _lam, -_lam / 2 - 1),
        (_lam / 2 + 1, LAM.const(-2), 1 - _lam / 2),
    ),
}


@dataclass(frozen=True)
class FractionPair:
    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("denominator vanishes identically; clear it and compare den*lhs with num*rhs")

    def value(self) -> Fraction:
        """The quotient when both parts are constants."""
        return self.num.constant_value() / self.den.constant_value()


def _specialize(B: Bivector, values: dict) -> Bivector:
    assign = {k: v for k, v in values.items() if v is not None}
    return B.substitute(assign) if assign else B


def q3(a1: Value = None, a2: Value = None) -> Bivector:
    """Generic 3-dimensional tensor P_01 = A1 x0 x1 + A2 x2^2 and its shifts."""
    return _specialize(generic_invariant_quadratic(3).bivector, {"A1": a1, "A2": a2})


_K4 = VarSpace(4, ("k",))


def q4(k: Value = None) -> Bivector:
    """Sklyanin bracket: {x_i, x_i+1} = k^2 x_i x_i+1 - x_i+2 x_i+3, {x_i, x_i+2} = k (x_i+3^2 - x_i+1^2)."""
    x = _K4.xs()
    kk = _K4.p("k")

    def entry(i, j):
        if j - i == 2:
            return kk * (x[(i + 3) % 4] ** 2 - x[(i + 1) % 4] ** 2)
        # (i, j) with j = i + 1, or (0, 3) = -{x3, x0}
        a, sign = (i, 1) if j - i == 1 else (j, -1)
        p = kk**2 * x[a] * x[(a + 1) % 4] - x[(a + 2) % 4] * x[(a + 3) % 4]
        return sign * p

    return _specialize(Bivector.from_function(_K4, entry), {"k": k})


def q4_casimirs(k: Value = None) -> tuple:
    x = _K4.xs()
    kk = _K4.p("k")
    c1 = (x[0] ** 2 + x[2] ** 2) / 2 + kk * x[1] * x[3]
    c2 = (x[1] ** 2 + x[3] ** 2) / 2 + kk * x[0] * x[2]
    if k is None:
        return c1, c2
    from .polyring import substitute

    return substitute(c1, {"k": k}), substitute(c2, {"k": k})


def _family(family) -> CoefficientFamily:
    if isinstance(family, CoefficientFamily):
        return family
    try:
        return FAMILIES[family]
    except KeyError:
        raise KeyError(f"unknown coefficient family {family!r}; known: {sorted(FAMILIES)}") from None


def q5(family, lam: Value = None) -> Bivector:
    """5-dimensional tensor with the family's coefficients placed in the generic slots."""
    fam = _family(family)
    if lam is not None and not isinstance(lam, Poly) and Fraction(lam) == 0:
        raise ZeroDivisionError("lam must be nonzero")
    B = generic_invariant_quadratic(5).bivector.substitute(fam.assignment())
    return _specialize(B, {"lam": lam})


def _coefficient_space(*coeffs) -> VarSpace:
    names: list = []
    for c in coeffs:
        if isinstance(c, Poly):
            names += [p for p in c.vs.params if p not in names]
    return VarSpace(5, tuple(names))


_SYMBOLIC_AB = VarSpace(0, ("A1", "A2", "A3", "B1", "B2", "B3"))


def _coeffs(A, B) -> tuple:
    if A is None:
        A = tuple(_SYMBOLIC_AB.p(f"A{i}") for i in (1, 2, 3))
    if B is None:
        B = tuple(_SYMBOLIC_AB.p(f"B{i}") for i in (1, 2, 3))
    return tuple(A), tuple(B)


def k5_casimir(A=None, B=None) -> Poly:
    """Quintic Casimir built from sigma-orbit sums of tau-degree-0 monomials.

    ``A`` and ``B`` are coefficient triples (rationals or parameter Polys);
    ``None`` leaves them symbolic.
    """
    A, B = _coeffs(A, B)
    vs = _coefficient_space(*A, *B)
    a1, a2, a3, b1, b2, b3 = (
        embed(c, vs) if isinstance(c, Poly) else vs.const(c) for c in A + B
    )
    x = vs.xs()

    def orbit(m):
        return sum((sigma_apply(m, s) for s in range(5)), vs.zero())

    c5 = -a3 * b3 / 5
    c4 = a1 * a3
    c3 = -b1 * b3
    c2 = (a1 * a2 - b2 * b3) / 2
    c1 = (a2 * a3 - b1 * b2) / 2
    c0 = a1**2 - b1**2 - a1 * b1 - a2 * b2
    return (
        c5 * orbit(x[0] ** 5)
        + c4 * orbit(x[1] ** 3 * x[0] * x[2])
        + c3 * orbit(x[1] ** 3 * x[3] * x[4])
        + c2 * orbit(x[0] * x[1] ** 2 * x[4] ** 2)
        + c1 * orbit(x[1] * x[3] ** 2 * x[4] ** 2)
        + c0 * x[0] * x[1] * x[2] * x[3] * x[4]
    )


def qr5_constant(A=None, B=None) -> FractionPair:
    """-2 (B2 A1 + B3^2) / (A2 A3 - B1 B2), kept as numerator and denominator."""
    A, B = _coeffs(A, B)
    names: list = []
    for c in A + B:
        if isinstance(c, Poly):
            names += [p for p in c.vs.params if p not in names]
    vs = VarSpace(0, tuple(names))
    a1, a2, a3, b1, b2, b3 = (
        embed(c, vs) if isinstance(c, Poly) else vs.const(c) for c in A + B
    )
    return FractionPair(-2 * (b2 * a1 + b3**2), a2 * a3 - b1 * b2)


JAC4_PRINTED = ["A1*A2 - B^2"]

JAC5_PRINTED = [
    "B2^2 + 3*A1*A3 + B1*A3 + A2*B3",
    "2*A3^2 - 2*A2*B1 - A1*A2 + B2*B3",
    "-A2^2 - 3*B1*B3 + A1*B3 + B2*A3",
    "-2*B3^2 - 2*B2*A1 + B1*B2 - A2*A3",
]

JAC6_PRINTED = [
    "B2^2 + C*A2 - A3^2",
    "C*B2 - 2*B3*B4 - A2*B3",
    "A2*A1 - B4*A3 + B1*A2 - B2*B3",
    "C*B4 - B1*A3 - A1*A3",
    "C*B3 + B2*B1 + A1*B2",
    "-2*B3^2 + 2*C*A1 - C*B1 - B4*A2",
    "-B2*B4 - A3*B3",
    "-A2^2 - 2*C*B1 - 2*B4*A2 - C*A3 + C*A1",
    "-C^2 - 2*B1*A2 + 2*B4*A3 - 2*B2*B3 - A2*A3 + A2*A1",
    "B1*A2 - B4*A3 - B4*A1",
    "B2*B4 - 2*B3*B1 + A1*B3 - A2*B2",
]


def jac4_system() -> ConstraintSystem:
    return ConstraintSystem.parse(("A1", "A2", "B"), JAC4_PRINTED)


def jac5_system() -> ConstraintSystem:
    return ConstraintSystem.parse(("A1", "A2", "A3", "B1", "B2", "B3"), JAC5_PRINTED)


def jac6_system() -> ConstraintSystem:
    return ConstraintSystem.parse(("A1", "A2", "A3", "B1", "B2", "B3", "B4", "C"), JAC6_PRINTED)


def q6_direct_sum_assignment(b1: Value = None, b4: Value = None) -> dict:
    """C = A1 = A2 = A3 = B2 = B3 = 0 with B1, B4 free."""
    out = {"A1": 0, "A2": 0, "A3": 0, "B2": 0, "B3": 0, "C": 0}
    if b1 is not None:
        out["B1"] = b1
    if b4 is not None:
        out["B4"] = b4
    return out


def q6_direct_sum(b1: Value = None, b4: Value = None) -> Bivector:
    """Two decoupled copies of q3: on (x0, x2, x4) and on (x1, x3, x5)."""
    return generic_invariant_quadratic(6).bivector.substitute(q6_direct_sum_assignment(b1, b4))


def h3_cubic_jps() -> Bivector:
    """Jacobian structure on three coordinates with Casimir x0^2 x1^2 x2^2 / 2."""
    vs = VarSpace(3)
    x = vs.xs()
    return jps_from_casimirs(vs, [(x[0] * x[1] * x[2]) ** 2 / 2])


NAMES = ("q3", "q4", "q51", "q52", "linear5", "q6sum", "h3cubic")

# parameters each catalog entry accepts
PARAMS = {
    "q3": ("A1", "A2"),
    "q4": ("k",),
    "q51": ("lam",),
    "q52": ("lam",),
    "linear5": ("lam",),
    "q6sum": ("B1", "B4"),
    "h3cubic": (),
}


def build(name: str, values: dict | None = None) -> Bivector:
    """Catalog entry by name; ``values`` specializes some or all of its parameters."""
    values = dict(values or {})
    if name not in PARAMS:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(NAMES)}")
    extra = set(values) - set(PARAMS[name])
    if extra:
        raise KeyError(f"{name} has no parameter(s) {sorted(extra)}; accepts {PARAMS[name]}")
    if name == "q3":
        return q3(values.get("A1"), values.get("A2"))
    if name == "q4":
        return q4(values.get("k"))
    if name in FAMILIES:
        return q5(name, values.get("lam"))
    if name == "q6sum":
        return q6_direct_sum(values.get("B1"), values.get("B4"))
    return h3_cubic_jps()
