from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hpoisson import catalog
from hpoisson.bivector import (
    bracket,
    is_casimir,
    is_poisson,
    is_unimodular_div,
    jps_from_casimirs,
    wedge_square_cyclic5,
)
from hpoisson.catalog import (
    FAMILIES,
    FractionPair,
    h3_cubic_jps,
    jac5_system,
    k5_casimir,
    q3,
    q4,
    q4_casimirs,
    q5,
    q6_direct_sum,
    qr5_constant,
)
from hpoisson.constraints import verify_assignment
from hpoisson.heisenberg import is_sigma_invariant, is_tau_invariant
from hpoisson.polyring import Poly, VarSpace, embed, parse_poly, partial, substitute

nonzero = st.fractions(-4, 4, max_denominator=3).filter(bool)


def _const(c, lam):
    return substitute(c, {"lam": lam}).constant_value()


def _family_values(name, lam):
    fam = FAMILIES[name]
    return tuple(_const(c, lam) for c in fam.A), tuple(_const(c, lam) for c in fam.B)


# -- q4 ----------------------------------------------------------------------


def test_q4_printed_brackets():
    B = q4()
    vs = B.vs
    assert B[0, 1] == parse_poly("k^2*x0*x1 - x2*x3", vs)
    assert B[3, 0] == parse_poly("k^2*x3*x0 - x1*x2", vs)
    assert B[1, 3] == parse_poly("k*x0^2 - k*x2^2", vs)


def test_q4_is_minus_the_jacobian_structure_of_its_casimirs():
    B = q4()
    c1, c2 = q4_casimirs()
    assert jps_from_casimirs(B.vs, [c1, c2], mult=-1) == B
    assert is_casimir(B, c1) and is_casimir(B, c2)


@given(st.fractions(-3, 3, max_denominator=3))
def test_q4_specializations_are_poisson(k):
    B = q4(k)
    assert is_poisson(B)
    assert all(is_casimir(B, c) for c in q4_casimirs(k))


# -- q3 and q6 ---------------------------------------------------------------


def test_q3_symbolic_is_poisson():
    B = q3()
    assert B.vs.params == ("A1", "A2")
    assert is_poisson(B)


def _restrict(p, idx, vs):
    """Restrict p to the coordinates ``idx``, renamed y0, y1, ... in ``vs``."""
    out = {}
    for (coords, params), c in p.terms.items():
        assert all(coords[i] == 0 for i in range(len(coords)) if i not in idx)
        out[(tuple(coords[i] for i in idx), params)] = c
    return Poly(vs, out)


def test_q6_direct_sum_symbolic_is_poisson_and_decoupled():
    B = q6_direct_sum()
    assert B.vs.params == ("B1", "B4")
    assert is_poisson(B)
    for i in range(6):
        for j in range(6):
            if (i - j) % 2:
                assert B[i, j].is_zero()


@given(b1=st.fractions(-4, 4, max_denominator=3), b4=st.fractions(-4, 4, max_denominator=3))
def test_q6_direct_sum_restricts_to_q3(b1, b4):
    B = q6_direct_sum(b1, b4)
    Q = q3(b1, b4)
    for off in (0, 1):
        idx = (off, off + 2, off + 4)
        for a in range(3):
            for b in range(a + 1, 3):
                assert _restrict(B[idx[a], idx[b]], idx, Q.vs) == Q[a, b]


# -- five dimensions ---------------------------------------------------------


def test_q51_printed_brackets():
    B = q5("q51")
    vs = B.vs
    assert B[0, 1] == parse_poly(
        "-3/5*lam^2*x0*x1 + 1/5*lam^-3*x0*x1 - 2*lam^-1*x4*x2 + lam^-2*x3^2", vs
    )
    # the coefficient table is followed: B3 = +lam
    assert B[0, 2] == parse_poly(
        "-1/5*lam^2*x0*x2 - 3/5*lam^-3*x0*x2 + 2*x3*x4 + lam*x1^2", vs
    )


def test_q52_printed_brackets():
    B = q5("q52")
    vs = B.vs
    assert B[0, 1] == parse_poly(
        "2/5*lam^2*x0*x1 + 1/5*lam^-3*x0*x1 + lam*x4*x2 - lam^-1*x3^2", vs
    )
    assert B[0, 2] == parse_poly(
        "-1/5*lam^2*x0*x2 + 2/5*lam^-3*x0*x2 - lam^-2*x3*x4 + x1^2", vs
    )


def test_linear_family_at_two():
    A, B = _family_values("linear5", 2)
    assert A == (0, 2, -2)
    assert B == (2, -2, 0)


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_families_solve_jac5(name):
    assert verify_assignment(jac5_system(), FAMILIES[name].assignment())


def test_q5_rejects_zero_lambda():
    with pytest.raises(ZeroDivisionError):
        q5("q51", 0)
    with pytest.raises(KeyError):
        q5("nope")


@pytest.mark.parametrize("name", ["q51", "q52"])
@given(lam=nonzero)
def test_q5_specializations(name, lam):
    B = q5(name, lam)
    assert is_poisson(B)
    assert is_unimodular_div(B)
    assert is_sigma_invariant(B) and is_tau_invariant(B)
    A, Bc = _family_values(name, lam)
    assert is_casimir(B, k5_casimir(A, Bc))


def test_k5_top_coefficient_at_q51_lambda_one():
    A, B = _family_values("q51", 1)
    K = k5_casimir(A, B)
    assert K.terms[((5, 0, 0, 0, 0), ())] == Fraction(-1, 5)


def test_qr5_spot_value():
    A, B = _family_values("q51", 1)
    assert A == (Fraction(-2, 5), -2, 1)
    assert B == (Fraction(-4, 5), 2, 1)
    assert qr5_constant(A, B).value() == 1


@pytest.mark.parametrize("name", ["q51", "q52"])
def test_qr5_cleared_identity_symbolic(name):
    fam = FAMILIES[name]
    B = q5(name)
    K = k5_casimir(fam.A, fam.B)
    c = qr5_constant(fam.A, fam.B)
    num, den = embed(c.num, B.vs), embed(c.den, B.vs)
    for m in range(5):
        assert (den * wedge_square_cyclic5(B, m) - num * partial(K, m)).is_zero()


def test_fraction_pair_rejects_zero_denominator():
    vs = VarSpace(0, ())
    with pytest.raises(ZeroDivisionError):
        FractionPair(vs.one(), vs.zero())


# -- cubic example and the registry ------------------------------------------


def test_h3_cubic():
    B = h3_cubic_jps()
    vs = B.vs
    assert B[0, 1] == parse_poly("x0^2*x1^2*x2", vs)
    assert is_poisson(B) and is_sigma_invariant(B) and is_tau_invariant(B)
    C = parse_poly("1/2*x0^2*x1^2*x2^2", vs)
    assert is_casimir(B, C)
    assert bracket(B, vs.x(1), vs.x(2)) == parse_poly("x0*x1^2*x2^2", vs)


@pytest.mark.parametrize("name", catalog.NAMES)
def test_build_every_entry(name):
    B = catalog.build(name)
    assert B.n >= 3


def test_build_rejects_unknown():
    with pytest.raises(KeyError):
        catalog.build("q7")
    with pytest.raises(KeyError):
        catalog.build("q4", {"lam": 1})
