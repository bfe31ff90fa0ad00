"""Exact construction and verification of Heisenberg-invariant polynomial Poisson structures."""

from .bivector import (
    Bivector,
    VectorField,
    VerificationReport,
    bracket,
    is_casimir,
    is_poisson,
    is_unimodular_div,
    jacobiator,
    jps_from_casimirs,
    modular_field,
    wedge_square_cyclic5,
)
from .constraints import ConstraintSystem, jacobi_constraints, span_equivalent, verify_assignment
from .heisenberg import (
    GenericTensor,
    admissible_degree,
    generic_invariant_homogeneous,
    generic_invariant_quadratic,
    is_sigma_invariant,
    is_tau_invariant,
)
from .polyring import (
    Poly,
    VarSpace,
    parse_poly,
    partial,
    sigma_apply,
    substitute,
    tau_degree,
    x_degree,
)

__version__ = "0.1.0"
