"""Exact Lucas/Fibonacci polynomial algebra checked against chord products on an ellipse."""
from .chords import (
    ChordReport,
    EllipseSpec,
    chord_product_numeric,
    circle_poly_eval,
    cotes_product,
    lattice_points,
    omega_root_check,
    price_formula,
)
from .errors import (
    ConvergenceDomainError,
    DegenerateEqualRoots,
    InvalidEllipse,
    NonIntegerCoefficient,
    OverflowToNonFinite,
    PairingFailure,
)
from .lucasfib import (
    OmegaSpec,
    binet_fib_residual,
    binet_lucas_residual,
    derivative_identity_residual,
    family_poly,
    lucas_closed_form,
    omega_poly,
    rotated_eval_residual,
)
from .polycore import (
    BivarPoly,
    UnivarPoly,
    parse_bivar,
    parse_univar,
    poly_add,
    poly_diff_x,
    poly_eval,
    poly_mul,
    univar_specialize,
)
from .radicals import RadicalSolution, lucas_roots, solve_omega, verify_solution
from .symmetric import (
    complete_hom,
    complete_hom_residual,
    elem_sym,
    generating_fn_check,
    newton_residual,
    power_sum,
)

__version__ = "0.1.0"
