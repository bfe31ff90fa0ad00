"""Acceptance criteria, one test each; the terminal summary prints a PASS/FAIL line per criterion.

Run just these with ``pytest -m acceptance -s``.
"""

import random
from fractions import Fraction

import pytest

from hpoisson.bivector import (
    is_casimir,
    is_poisson,
    is_unimodular_div,
    jps_from_casimirs,
    modular_field,
    wedge_square_cyclic5,
)
from hpoisson.catalog import (
    FAMILIES,
    h3_cubic_jps,
    jac4_system,
    jac5_system,
    jac6_system,
    k5_casimir,
    q3,
    q4,
    q4_casimirs,
    q5,
    q6_direct_sum,
    q6_direct_sum_assignment,
    qr5_constant,
)
from hpoisson.constraints import jacobi_constraints, span_equivalent, verify_assignment
from hpoisson.heisenberg import (
    generic_invariant_homogeneous,
    generic_invariant_quadratic,
    is_sigma_invariant,
    is_tau_invariant,
)
from hpoisson.polyring import embed, partial, substitute

pytestmark = pytest.mark.acceptance

SEED = 20240611


def _rational(rng, span=5, den=4):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def _within(criterion, limit):
    assert criterion.elapsed() < limit, f"took {criterion.elapsed():.2f} s, limit {limit} s"


def test_c1_n3_classification(criterion):
    criterion.label = "1 n=3 classification"
    assert len(jacobi_constraints(generic_invariant_quadratic(3))) == 0
    assert is_poisson(q3())
    _within(criterion, 1)


def test_c2_n4_classification(criterion):
    criterion.label = "2 n=4 classification"
    generated = jacobi_constraints(generic_invariant_quadratic(4))
    B = q4()
    c1, c2 = q4_casimirs()
    results = {
        "span-equivalent to the printed A1*A2 - B^2": span_equivalent(generated, jac4_system()),
        "q4 is Poisson": bool(is_poisson(B)),
        "q4 equals jps_from_casimirs(q1, q2)": jps_from_casimirs(B.vs, [c1, c2]) == B,
    }
    _within(criterion, 1)
    failed = [k for k, ok in results.items() if not ok]
    assert not failed, "; ".join(failed)


def test_c3_n5_classification(criterion):
    criterion.label = "3 n=5 classification"
    generated = jacobi_constraints(generic_invariant_quadratic(5))
    assert len(jac5_system()) == 4
    assert span_equivalent(generated, jac5_system())
    for name in ("q51", "q52", "linear5"):
        r = verify_assignment(jac5_system(), FAMILIES[name].assignment())
        assert r, f"{name}: {r.describe()}"
    _within(criterion, 5)


def test_c4_q5_families(criterion):
    criterion.label = "4 q51/q52 symbolic checks"
    for name in ("q51", "q52"):
        fam = FAMILIES[name]
        B = q5(name)
        for check in (is_poisson, is_sigma_invariant, is_tau_invariant, is_unimodular_div):
            r = check(B)
            assert r, f"{name}: {r.describe()}"
        K = k5_casimir(fam.A, fam.B)
        assert is_casimir(B, K), name
        c = qr5_constant(fam.A, fam.B)
        num, den = embed(c.num, B.vs), embed(c.den, B.vs)
        for m in range(5):
            assert (den * wedge_square_cyclic5(B, m) - num * partial(K, m)).is_zero(), (name, m)
    _within(criterion, 10)


def test_c5_qr5_spot_value(criterion):
    criterion.label = "5 qr5 constant at q51, lam=1"
    fam = FAMILIES["q51"]
    A = tuple(substitute(a, {"lam": 1}).constant_value() for a in fam.A)
    B = tuple(substitute(b, {"lam": 1}).constant_value() for b in fam.B)
    assert qr5_constant(A, B).value() == 1


def test_c6_n6_classification(criterion):
    criterion.label = "6 n=6 classification"
    generated = jacobi_constraints(generic_invariant_quadratic(6))
    assert len(jac6_system()) == 11
    assert span_equivalent(generated, jac6_system())
    B = q6_direct_sum()
    assert is_poisson(B)
    assert all(B[i, j].is_zero() for i in range(6) for j in range(6) if (i - j) % 2)
    assert verify_assignment(generated, {**q6_direct_sum_assignment(), "B1": 3, "B4": -2})
    # each parity class carries q3 with (A1, A2) = (B1, B4)
    Q = q3(Fraction(3), Fraction(-2))
    S = q6_direct_sum(3, -2)
    for off in (0, 1):
        idx = (off, off + 2, off + 4)
        for a, b in ((0, 1), (0, 2), (1, 2)):
            got = S[idx[a], idx[b]]
            want = {
                (tuple(c[i] for i in idx), p): v for (c, p), v in got.terms.items()
            }
            assert want == Q[a, b].terms
    _within(criterion, 20)


def test_c7_unimodularity(criterion):
    criterion.label = "7 invariant quadratic tensors are unimodular"
    rng = random.Random(SEED)
    for n in range(3, 9):
        G = generic_invariant_quadratic(n)
        for _ in range(50):
            B = G.bivector.substitute({p: _rational(rng) for p in G.params})
            Z = modular_field(B)
            assert Z.is_zero(), (n, Z.components)
    _within(criterion, 30)


def test_c8_degree_proposition(criterion):
    criterion.label = "8 admissible degrees 2 + s n"
    for n in range(3, 9):
        for N in range(1, 2 * n + 3):
            G = generic_invariant_homogeneous(n, N)
            assert bool(G.params) == ((N - 2) % n == 0), (n, N)
    B = h3_cubic_jps()
    for check in (is_sigma_invariant, is_tau_invariant, is_poisson):
        assert check(B), check(B).describe()
    _within(criterion, 10)


def _known_solution(n, rng):
    if n == 4:
        c, k = _rational(rng), _rational(rng)
        return {"A1": c * k * k, "A2": -c, "B": -c * k}
    if n == 5:
        fam = FAMILIES[rng.choice(sorted(FAMILIES))]
        lam = _rational(rng)
        while lam == 0:
            lam = _rational(rng)
        return {k: substitute(v, {"lam": lam}).constant_value() for k, v in fam.assignment().items()}
    return {**q6_direct_sum_assignment(), "B1": _rational(rng), "B4": _rational(rng)}


def test_c9_constraint_soundness(criterion):
    criterion.label = "9 constraint extraction agrees with is_poisson"
    rng = random.Random(SEED)
    for n in (4, 5, 6):
        G = generic_invariant_quadratic(n)
        S = jacobi_constraints(G)
        seen = set()
        for trial in range(100):
            kind = trial % 4
            if kind == 0:
                assign = _known_solution(n, rng)
            elif kind == 1:
                # sparse: most parameters zero
                assign = {p: (_rational(rng) if rng.random() < 0.3 else 0) for p in G.params}
            else:
                assign = {p: _rational(rng) for p in G.params}
            by_system = bool(verify_assignment(S, assign))
            direct = bool(is_poisson(G.bivector.substitute(assign)))
            assert by_system == direct, (n, assign)
            seen.add(direct)
        assert seen == {True, False}, (n, seen)
    _within(criterion, 60)
