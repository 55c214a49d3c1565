import cmath
import math
import random
import threading
from fractions import Fraction

import pytest
import sympy

from chordpoly.errors import DegenerateEqualRoots
from chordpoly.lucasfib import (
    OmegaSpec,
    PolyFamilyCache,
    binet_fib_residual,
    binet_lucas_residual,
    derivative_identity_residual,
    family_poly,
    lucas_closed_form,
    omega_poly,
    residual_scale,
    rotated_eval_residual,
)
from chordpoly.polycore import ZERO, BivarPoly, UnivarPoly, X, Y

PHI = (1 + math.sqrt(5)) / 2
PHI_HAT = (1 - math.sqrt(5)) / 2


def to_sympy(p: BivarPoly, x, y):
    return sum(c * x**i * y**j for (i, j), c in p.terms.items())


def test_seeds_and_small_members():
    assert family_poly("L", 0) == BivarPoly.const(2)
    assert family_poly("L", 1) == X
    assert family_poly("L", 2) == X**2 - 2 * Y
    assert family_poly("L", 3) == X**3 - 3 * X * Y
    assert family_poly("U", 3) == X**2 + Y
    assert family_poly("F", 0) == ZERO and family_poly("U", 1) == BivarPoly.const(1)
    assert family_poly("V", 0) == BivarPoly.const(2) and family_poly("V", 1) == X


def test_bad_kind_and_index():
    with pytest.raises(ValueError):
        family_poly("W", 2)
    with pytest.raises(ValueError):
        family_poly("L", -1)


@pytest.mark.parametrize("n", range(0, 13))
def test_definition_by_symbolic_expansion(n):
    # L_n is the integer polynomial with L_n(a+b, ab) = a^n + b^n; F_n likewise for h_{n-1}
    a, b = sympy.symbols("a b")
    assert sympy.expand(to_sympy(family_poly("L", n), a + b, a * b) - (a**n + b**n)) == 0
    fib = sympy.cancel((a**n - b**n) / (a - b))
    assert sympy.expand(to_sympy(family_poly("F", n), a + b, a * b) - fib) == 0


def test_recurrence_invariants_hold_for_cache():
    for kind, sign in (("L", -1), ("F", -1), ("V", 1), ("U", 1)):
        for n in range(2, 40):
            assert family_poly(kind, n) == X * family_poly(kind, n - 1) + sign * Y * family_poly(kind, n - 2)


@pytest.mark.parametrize("n", range(0, 40))
def test_sign_substitution_links_families(n):
    assert family_poly("V", n) == family_poly("L", n).substitute_y(-1)
    assert family_poly("U", n) == family_poly("F", n).substitute_y(-1)


def test_closed_form_examples():
    assert lucas_closed_form(3) == X**3 - 3 * X * Y
    assert lucas_closed_form(1) == X
    assert lucas_closed_form(4) == X**4 - 4 * X**2 * Y + 2 * Y**2
    assert lucas_closed_form(0) == BivarPoly.const(2)


def test_closed_form_coefficient_against_rational_formula():
    for n in range(1, 60):
        for r in range(n // 2 + 1):
            expected = Fraction(n, n - r) * math.comb(n - r, r)
            assert expected.denominator == 1
            assert abs(lucas_closed_form(n).coeff(n - 2 * r, r)) == expected


@pytest.mark.parametrize("n", range(1, 51))
def test_recurrence_equals_closed_form(n):
    assert family_poly("L", n) == lucas_closed_form(n)


@pytest.mark.parametrize("n", range(1, 51))
def test_homogeneous_monic_not_divisible_by_y(n):
    L = family_poly("L", n)
    assert L.is_weighted_homogeneous(n)
    assert L.coeff(n, 0) == 1
    assert any(j == 0 for _, j in L.terms)


def test_root_substitution_symmetry():
    rng = random.Random(3)
    for n in range(2, 20):
        zeta = cmath.exp(2j * math.pi / n)
        for _ in range(5):
            a = cmath.rect(rng.uniform(0.2, 1.5), rng.uniform(-3, 3))
            b = cmath.rect(rng.uniform(0.2, 1.5), rng.uniform(-3, 3))
            L = family_poly("L", n)
            base = L.evaluate(a + b, a * b)
            rotated = L.evaluate(zeta * a + b / zeta, a * b)
            assert abs(rotated - base) <= 1e-9 * abs(base)


@pytest.mark.parametrize("n", range(1, 26))
def test_doubling_identity(n):
    assert family_poly("U", 2 * n) == family_poly("U", n) * family_poly("V", n)


@pytest.mark.parametrize("n", range(1, 51))
def test_derivative_identity(n):
    assert derivative_identity_residual(n).is_zero()


def test_derivative_identity_small_cases():
    # d/dX (X^2 + 2Y) = 2X = 2*U_2
    assert family_poly("V", 2).diff_x() == 2 * family_poly("U", 2)
    assert derivative_identity_residual(1) == ZERO


def test_omega_examples():
    p, q = Fraction(5, 7), Fraction(-3, 2)
    assert omega_poly(OmegaSpec(3, p, q)) == UnivarPoly([-q, -3 * p, 0, 1])
    om = omega_poly(OmegaSpec(3, 2, 9))
    assert om == UnivarPoly([-9, -6, 0, 1])
    assert om(3) == 0
    assert omega_poly(OmegaSpec(2, 0, 1)) == UnivarPoly([-1, 0, 1])


def test_omega_is_monic_of_degree_n():
    for n in range(2, 20):
        om = omega_poly(OmegaSpec(n, Fraction(3, 4), Fraction(-2)))
        assert om.degree == n and om.is_monic()
    with pytest.raises(ValueError):
        OmegaSpec(1, 1, 1)


def test_omega_from_ab_is_exact():
    spec = OmegaSpec.from_ab(5, 0.75, -0.5)
    assert spec.p == Fraction(-3, 8)
    assert spec.q == Fraction(3, 4) ** 5 + Fraction(-1, 2) ** 5


def test_binet_examples():
    assert abs(binet_lucas_residual(5, 2, 1)) <= 1e-12
    assert binet_lucas_residual(0, 1.3 + 2j, -0.2) == 0
    assert abs(binet_lucas_residual(10, PHI, PHI_HAT)) <= 1e-9
    assert round(family_poly("L", 10).evaluate(1, -1).real) == 123
    assert abs(PHI**10 + PHI_HAT**10 - 123) < 1e-9


def test_binet_fib_examples():
    assert abs(binet_fib_residual(7, PHI, PHI_HAT)) <= 1e-9
    assert family_poly("F", 7).evaluate(1, -1) == 13
    assert binet_fib_residual(0, 2, 1) == 0
    assert binet_fib_residual(4, 2, 1) == 0
    assert family_poly("F", 4).evaluate(3, 2) == 15


def test_binet_fib_degenerate():
    with pytest.raises(DegenerateEqualRoots):
        binet_fib_residual(5, 1.0, 1.0 + 1e-12)


def test_binet_sweep():
    rng = random.Random(99)
    for _ in range(100):
        a = cmath.rect(rng.uniform(0.1, 2), rng.uniform(-math.pi, math.pi))
        b = cmath.rect(rng.uniform(0.1, 2), rng.uniform(-math.pi, math.pi))
        for n in range(31):
            tol = 1e-9 * residual_scale(n, a, b)
            assert abs(binet_lucas_residual(n, a, b)) <= tol
            assert abs(binet_fib_residual(n, a, b)) <= tol


def test_rotated_examples():
    assert abs(rotated_eval_residual(6, 1.1, 0.4, 0.0) - binet_lucas_residual(6, 1.1, 0.4)) <= 1e-12
    assert abs(rotated_eval_residual(4, PHI, PHI_HAT, math.pi / 7)) <= 1e-9
    assert abs(rotated_eval_residual(3, 1, 0, math.pi / 2)) <= 1e-12


def test_cache_concurrent_extension():
    cache = PolyFamilyCache("V")
    results = {}

    def work(k):
        results[k] = cache.get(60 + k % 5)

    threads = [threading.Thread(target=work, args=(k,)) for k in range(16)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for k, poly in results.items():
        assert poly == family_poly("V", 60 + k % 5)
    assert len(cache.entries) == 65


def test_large_index_no_recursion():
    assert family_poly("U", 1500).coeff(1499, 0) == 1
