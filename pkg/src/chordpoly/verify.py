"""Seeded property sweeps behind ``chordpoly verify``.

Every check reduces to a nonnegative "scaled residual" compared against a
tolerance, so each suite can report a pass count and its worst case. Each
suite draws from its own ``random.Random`` stream derived from the seed, so
running one suite alone reproduces the same cases as ``verify all``.
"""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from . import chords, lucasfib, radicals, symmetric

DEFAULT_SEED = 0xC0FFEE

TABLE_ONE = {2: 2, 3: 6, 4: 12, 5: 25, 6: 48, 7: 91}


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    worst: float = 0.0
    worst_case: str = ""
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def record(self, case: str, scaled: float, tol: float) -> None:
        """Count one check; ``worst`` tracks ``scaled / tol`` (1.0 is the limit)."""
        self.total += 1
        if tol > 0:
            frac = scaled / tol
        else:
            frac = 0.0 if scaled <= 0 else math.inf
        if frac > self.worst or not self.worst_case:
            self.worst, self.worst_case = frac, case
        if scaled <= tol:
            self.passed += 1
        else:
            self.failures.append(f"{case}: scaled residual {scaled:.3e} > {tol:.0e}")

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"{self.name:<10} {status}  {self.passed}/{self.total} passed, "
            f"worst at {self.worst:.3e} of tolerance ({self.worst_case})"
        )


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _disk(rng: random.Random, radius: float) -> complex:
    return cmath.rect(radius * math.sqrt(rng.random()), rng.uniform(-math.pi, math.pi))


def _annulus(rng: random.Random, lo: float, hi: float) -> complex:
    return cmath.rect(rng.uniform(lo, hi), rng.uniform(-math.pi, math.pi))


def random_spec(rng: random.Random, lo: float = 0.5, hi: float = 3.0) -> chords.EllipseSpec:
    a = rng.uniform(lo, hi)
    return chords.EllipseSpec(a, rng.uniform(-0.999, 0.999) * a)


def _fmt(z) -> str:
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}j"


# ---------------------------------------------------------------------------


def suite_newton(seed: int) -> SuiteResult:
    res = SuiteResult("newton")
    rng = _rng(seed, "newton")
    for m in range(1, 7):
        for _ in range(200):
            vals = [_disk(rng, 2.0) for _ in range(m)]
            for n in range(1, 13):
                scale = symmetric.tolerance_scale(vals, n) or 1.0
                r = abs(symmetric.newton_residual(vals, n)) / scale
                res.record(f"n={n} values=[{', '.join(map(_fmt, vals))}]", r, 1e-9)
    # two-variable form (a^n + b^n) - (a^(n-1) + b^(n-1))(a+b) + (a^(n-2) + b^(n-2))ab
    for _ in range(20):
        a, b = _disk(rng, 2.0), _disk(rng, 2.0)
        for n in range(2, 31):
            two_var = (a**n + b**n) - (a ** (n - 1) + b ** (n - 1)) * (a + b) + (a ** (n - 2) + b ** (n - 2)) * a * b
            diff = abs(symmetric.newton_residual((a, b), n) - two_var)
            res.record(f"m=2 n={n} a={_fmt(a)} b={_fmt(b)}", diff / symmetric.tolerance_scale((a, b), n), 1e-9)
    return res


def suite_hom(seed: int) -> SuiteResult:
    res = SuiteResult("hom")
    rng = _rng(seed, "hom")
    for m in range(1, 7):
        for _ in range(200):
            vals = [_disk(rng, 2.0) for _ in range(m)]
            for n in range(1, 13):
                scale = symmetric.tolerance_scale(vals, n) or 1.0
                r = abs(symmetric.complete_hom_residual(vals, n)) / scale
                res.record(f"n={n} values=[{', '.join(map(_fmt, vals))}]", r, 1e-9)
    for _ in range(50):
        a, b = _annulus(rng, 0.1, 2.0), _annulus(rng, 0.1, 2.0)
        for k in range(1, 21):
            q = (a**k - b**k) / (a - b)
            h = symmetric.complete_hom((a, b), k - 1)
            res.record(f"k={k} a={_fmt(a)} b={_fmt(b)}", abs(q - h) / max(abs(h), 1e-300), 1e-9)
    for _ in range(50):
        vals = [_disk(rng, 0.9) for _ in range(rng.randint(1, 4))]
        t = _disk(rng, 0.9)
        K = 60
        bound = symmetric.geometric_tail_bound(vals, t, K)
        r = abs(symmetric.generating_fn_check(vals, t, K))
        res.record(f"K={K} t={_fmt(t)}", r / (bound + 1e-12), 1.0)
    return res


def suite_binet(seed: int) -> SuiteResult:
    res = SuiteResult("binet")
    rng = _rng(seed, "binet")
    for _ in range(100):
        a, b = _annulus(rng, 0.1, 2.0), _annulus(rng, 0.1, 2.0)
        for n in range(31):
            s = lucasfib.residual_scale(n, a, b)
            case = f"n={n} a={_fmt(a)} b={_fmt(b)}"
            res.record("lucas " + case, abs(lucasfib.binet_lucas_residual(n, a, b)) / s, 1e-9)
            try:
                fib = lucasfib.binet_fib_residual(n, a, b)
            except lucasfib.DegenerateEqualRoots:
                # a ~ b: compare against h_{n-1}(a, b) instead of the quotient
                fib = lucasfib.family_poly("F", n).evaluate(a + b, a * b)
                fib -= symmetric.complete_hom((a, b), n - 1) if n else 0
            res.record("fib " + case, abs(fib) / s, 1e-9)
    for _ in range(100):
        a, b = _annulus(rng, 0.1, 2.0), _annulus(rng, 0.1, 2.0)
        theta = rng.uniform(0.0, 2.0 * math.pi)
        for n in range(21):
            s = lucasfib.residual_scale(n, a, b)
            r = abs(lucasfib.rotated_eval_residual(n, a, b, theta)) / s
            res.record(f"rotated n={n} a={_fmt(a)} b={_fmt(b)} theta={theta!r}", r, 1e-9)
    return res


def suite_chords(seed: int) -> SuiteResult:
    res = SuiteResult("chords")
    rng = _rng(seed, "chords")
    for n in range(2, 51):
        rep = chords.chord_product_numeric(n, chords.EllipseSpec.circle())
        res.record(f"circle n={n}", abs(rep.numeric_product - n) / n, 1e-10)
    golden = chords.EllipseSpec.golden()
    for n in range(2, 41):
        rep = chords.chord_product_numeric(n, golden)
        res.record(f"golden n={n}", rep.relative_discrepancy, 1e-9)
        if n in TABLE_ONE:
            res.record(f"table row n={n}", abs(round(rep.formula_value) - TABLE_ONE[n]), 0.0)
    for _ in range(50):
        spec = random_spec(rng)
        for n in range(2, 26):
            rep = chords.chord_product_numeric(n, spec)
            res.record(f"n={n} a={spec.a!r} b={spec.b!r}", rep.relative_discrepancy, 1e-9)
            res.record(f"positive n={n} a={spec.a!r} b={spec.b!r}", 0.0 if rep.formula_value > 0 else 1.0, 0.0)
    for n in range(1, 21):
        for x in (0.0, 0.25, 0.5, 0.9, 0.99):
            res.record(f"cotes n={n} x={x}", abs(chords.cotes_product(n, x) - (1 - x**n)), 1e-10)
    for _ in range(20):
        spec = random_spec(rng)
        for n in range(2, 21):
            scale = max(1.0, (spec.a + abs(spec.b)) ** n)
            r = chords.omega_root_check(n, spec) / scale
            res.record(f"omega n={n} a={spec.a!r} b={spec.b!r}", r, 1e-8)
    return res


def random_pq(rng: random.Random) -> Tuple[int, Fraction, Fraction]:
    n = rng.randint(2, 12)
    p = Fraction(rng.randint(-2000, 2000), 1000)
    q = Fraction(rng.randint(-5000, 5000), 1000)
    return n, p, q


def suite_radicals(seed: int) -> SuiteResult:
    res = SuiteResult("radicals")
    rng = _rng(seed, "radicals")
    for _ in range(100):
        n, p, q = random_pq(rng)
        case = f"n={n} p={p} q={q}"
        try:
            sol = radicals.solve_omega(n, p, q)
        except radicals.PairingFailure as exc:
            res.record(case + f" ({exc})", math.inf, 1e-7)
            continue
        res.record(case, sol.max_residual / max(1.0, abs(float(q))), 1e-7)
    for _ in range(50):
        spec = random_spec(rng)
        n = rng.randint(2, 12)
        pq = lucasfib.OmegaSpec.from_ab(n, spec.a, spec.b)
        sol = radicals.solve_omega(n, pq.p, pq.q)
        d = radicals.root_match_distance(sol.roots, chords.lattice_points(n, spec))
        res.record(f"geometric n={n} a={spec.a!r} b={spec.b!r}", d / spec.a, 1e-7)
    for n in range(1, 21):
        vn = lucasfib.family_poly("V", n)
        for y in (1, -1, 2, -2):
            scale = (2 * math.sqrt(abs(y)) + 1) ** n
            worst = max(abs(vn.evaluate(x, y)) for x in radicals.lucas_roots(n, y))
            res.record(f"lucas_roots n={n} y={y}", worst / scale, 1e-8)
    return res


def suite_derivative(seed: int) -> SuiteResult:
    res = SuiteResult("derivative")
    exact = lambda poly: 0.0 if poly.is_zero() else 1.0  # noqa: E731
    for n in range(1, 51):
        res.record(f"dV/dX - nU n={n}", exact(lucasfib.derivative_identity_residual(n)), 0.0)
        res.record(f"recurrence vs closed form n={n}", exact(lucasfib.family_poly("L", n) - lucasfib.lucas_closed_form(n)), 0.0)
        res.record(
            f"V_n(X,Y) = L_n(X,-Y) n={n}",
            exact(lucasfib.family_poly("V", n) - lucasfib.family_poly("L", n).substitute_y(-1)),
            0.0,
        )
    for n in range(1, 26):
        u, v = lucasfib.family_poly("U", n), lucasfib.family_poly("V", n)
        res.record(f"U_2n = U_n V_n n={n}", exact(lucasfib.family_poly("U", 2 * n) - u * v), 0.0)
    return res


SUITES: Dict[str, Callable[[int], SuiteResult]] = {
    "newton": suite_newton,
    "hom": suite_hom,
    "binet": suite_binet,
    "chords": suite_chords,
    "radicals": suite_radicals,
    "derivative": suite_derivative,
}


def run(suite: str = "all", seed: int = DEFAULT_SEED) -> List[SuiteResult]:
    names = list(SUITES) if suite == "all" else [suite]
    out = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        out.append(SUITES[name](seed))
    return out
