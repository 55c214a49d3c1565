"""Solution of ``Omega_n(z) = L_n(z, p) - q`` by radicals.

``a**n`` and ``b**n`` are the roots of the resolvent quadratic
``T**2 - q*T + p**n``. Taking n-th roots leaves one degree of freedom: ``a``
may be multiplied by ``zeta**j`` as long as ``b`` absorbs ``zeta**-j``. The
constraint ``a*b == p`` pins it down, and the roots are then
``zeta**j * a + zeta**-j * b``.

For the Lucas family (``p = -Y``, ``q = 0``) the same construction with
``a, b = xi*sqrt(-Y), sqrt(-Y)/xi`` and ``xi = exp(i*pi/(2n))`` collapses to
``2*sqrt(-Y)*cos((1 + 4j)*pi/(2n))``; folding angles past ``pi`` back with
``cos(t) = cos(2*pi - t)`` gives the ``(1 + 2j)`` form used in
:func:`lucas_roots`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import PairingFailure
from .lucasfib import OmegaSpec, omega_poly

PAIRING_TOL = 1e-6


@dataclass(frozen=True)
class RadicalSolution:
    n: int
    p: Fraction
    q: Fraction
    a_n: complex
    b_n: complex
    a: complex
    b: complex
    twist: int
    roots: Tuple[complex, ...]
    max_residual: float = math.nan
    degenerate_double_root: bool = False

    def to_dict(self) -> dict:
        pair = lambda z: [z.real, z.imag]  # noqa: E731
        return {
            "n": self.n,
            "p": _fraction_str(self.p),
            "q": _fraction_str(self.q),
            "a": pair(self.a),
            "b": pair(self.b),
            "twist": self.twist,
            "roots": [pair(z) for z in self.roots],
            "max_residual": self.max_residual,
        }


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _resolvent_roots(n: int, p: Fraction, q: Fraction) -> Tuple[complex, complex]:
    """``(q + sqrt(D))/2`` and ``(q - sqrt(D))/2`` with ``D = q**2 - 4 p**n``.

    The root of larger modulus is formed directly and the other through
    ``a_n * b_n = p**n``, so neither suffers cancellation.
    """
    pn = p**n
    disc = q * q - 4 * pn
    s = math.sqrt(disc) if disc >= 0 else 1j * math.sqrt(-disc)
    qf = float(q)
    plus, minus = (qf + s) / 2, (qf - s) / 2
    if pn == 0:
        return plus, minus
    if abs(plus) >= abs(minus):
        return plus, float(pn) / plus
    return float(pn) / minus, minus


def _principal_root(w: complex, n: int) -> complex:
    if w == 0:
        return 0j
    return cmath.rect(abs(w) ** (1.0 / n), cmath.phase(w) / n)


def _unit(j: int, n: int) -> complex:
    t = 2.0 * math.pi * j / n
    return complex(math.cos(t), math.sin(t))


def solve_omega(n: int, p, q) -> RadicalSolution:
    """All ``n`` roots of ``L_n(z, p) - q`` via the resolvent quadratic.

    ``p`` and ``q`` are exact rationals (ints, Fractions, or strings such as
    ``"3/2"``). The twist ``j`` is the one minimising ``|zeta**j*a*b - p|``,
    smallest ``j`` on ties; :class:`PairingFailure` is raised when even that
    misses ``p`` by more than ``1e-6 * max(1, |p|)``.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    p, q = Fraction(p), Fraction(q)
    a_n, b_n = _resolvent_roots(n, p, q)
    a0, b = _principal_root(a_n, n), _principal_root(b_n, n)

    pf = float(p)
    if p == 0:
        twist = 0
    else:
        errs = [abs(_unit(j, n) * a0 * b - pf) for j in range(n)]
        twist = min(range(n), key=lambda j: (errs[j], j))
        if errs[twist] > PAIRING_TOL * max(1.0, abs(pf)):
            raise PairingFailure(
                f"best twist j={twist} leaves |ab - p| = {errs[twist]:.3g} for n={n}, p={p}, q={q}"
            )
    a = _unit(twist, n) * a0
    roots = tuple(_unit(j, n) * a + _unit(-j, n) * b for j in range(n))
    sol = RadicalSolution(
        n=n,
        p=p,
        q=q,
        a_n=a_n,
        b_n=b_n,
        a=a,
        b=b,
        twist=twist,
        roots=roots,
        degenerate_double_root=(q * q == 4 * p**n),
    )
    return replace(sol, max_residual=verify_solution(sol))


def verify_solution(sol: RadicalSolution) -> float:
    """``max_j |Omega_n(roots[j])|`` with ``Omega_n`` rebuilt from ``(n, p, q)``."""
    omega = omega_poly(OmegaSpec(sol.n, sol.p, sol.q))
    return max(abs(omega(z)) for z in sol.roots)


def lucas_roots(n: int, y: float) -> List[complex]:
    """Roots in ``X`` of ``V_n(X, y)``: ``2*sqrt(-y)*cos((1 + 2j)*pi/(2n))``."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    # With X = a + b and y = -ab, V_n(X, y) = a^n + b^n. Writing a = r*xi and
    # b = r/xi with r = sqrt(-y), this vanishes iff xi^(2n) = -1, i.e. xi is an
    # n-th root of i: xi = exp(i*pi*(1 + 2j)/(2n)). Then X = r*(xi + 1/xi).
    r = cmath.sqrt(complex(-y))
    return [2 * r * math.cos((1 + 2 * j) * math.pi / (2 * n)) for j in range(n)]


def root_match_distance(roots, targets) -> Optional[float]:
    """Greedy nearest-neighbour pairing distance between two multisets.

    Exact for well separated targets, which is all the CLI sweeps need; the
    test suite cross-checks against an optimal assignment.
    """
    remaining = list(targets)
    if len(remaining) != len(roots):
        return None
    worst = 0.0
    for z in roots:
        k = min(range(len(remaining)), key=lambda i: abs(remaining[i] - z))
        worst = max(worst, abs(remaining.pop(k) - z))
    return worst
