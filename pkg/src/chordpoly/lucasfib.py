"""Generalized Lucas and Fibonacci polynomial families and the chord polynomial.

Four families share the three-term recurrence ``P_n = X*P_{n-1} -+ Y*P_{n-2}``:

=====  ======  =====  ===========================================
kind   seeds   sign   meaning at ``X = a+b``, ``Y = ab``
=====  ======  =====  ===========================================
L      2, X    ``-``  ``a**n + b**n``
F      0, 1    ``-``  ``(a**n - b**n) / (a - b)``
V      2, X    ``+``  ``L_n`` with ``Y -> -Y``
U      0, 1    ``+``  ``F_n`` with ``Y -> -Y``
=====  ======  =====  ===========================================

``V`` and ``U`` are built from their own recurrence, not by substitution, so
``V_n(X, Y) == L_n(X, -Y)`` stays a checkable fact.
"""
from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from .errors import DegenerateEqualRoots, NonIntegerCoefficient
from .polycore import ONE, ZERO, BivarPoly, UnivarPoly, X, Y

KINDS = ("L", "F", "V", "U")

_SEEDS = {
    "L": (BivarPoly.const(2), X),
    "F": (ZERO, ONE),
    "V": (BivarPoly.const(2), X),
    "U": (ZERO, ONE),
}
_SIGN = {"L": -1, "F": -1, "V": 1, "U": 1}


class PolyFamilyCache:
    """Growable memo of one family; reads are lock-free, extension is serialized."""

    def __init__(self, kind: str):
        if kind not in _SEEDS:
            raise ValueError(f"unknown family {kind!r}; expected one of {KINDS}")
        self.kind = kind
        self.entries: List[BivarPoly] = list(_SEEDS[kind])
        self._step = _SIGN[kind] * Y
        self._lock = threading.Lock()

    def get(self, n: int) -> BivarPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"index must be a nonnegative integer, got {n!r}")
        entries = self.entries
        if n < len(entries):
            return entries[n]
        with self._lock:
            entries = self.entries
            while len(entries) <= n:
                entries.append(X * entries[-1] + self._step * entries[-2])
            return entries[n]


_CACHES: Dict[str, PolyFamilyCache] = {k: PolyFamilyCache(k) for k in KINDS}


def family_poly(kind: str, n: int) -> BivarPoly:
    try:
        cache = _CACHES[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; expected one of {KINDS}") from None
    return cache.get(n)


def lucas_closed_form(n: int) -> BivarPoly:
    """``sum_r (-1)**r * n/(n-r) * C(n-r, r) * X**(n-2r) * Y**r``.

    The coefficient is computed as ``C(n-r, r) + C(n-r-1, r-1)``, which equals
    ``n/(n-r) * C(n-r, r)`` and avoids rational intermediates.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return BivarPoly.const(2)
    terms = {}
    for r in range(n // 2 + 1):
        c = math.comb(n - r, r) + (math.comb(n - r - 1, r - 1) if r else 0)
        if c * (n - r) != n * math.comb(n - r, r):
            raise NonIntegerCoefficient(f"coefficient mismatch at n={n}, r={r}")
        terms[(n - 2 * r, r)] = (-1) ** r * c
    return BivarPoly(terms)


@dataclass(frozen=True)
class OmegaSpec:
    """``Omega_n(z) = L_n(z, p) - q`` with ``p = ab`` and ``q = a**n + b**n``."""

    n: int
    p: Fraction
    q: Fraction

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))

    @classmethod
    def from_ab(cls, n: int, a, b) -> "OmegaSpec":
        """Exact ``p``, ``q`` from real ``a``, ``b`` (floats are taken at face value)."""
        a, b = Fraction(a), Fraction(b)
        return cls(n, a * b, a**n + b**n)


def omega_poly(spec: OmegaSpec) -> UnivarPoly:
    return family_poly("L", spec.n).specialize_y(spec.p) - spec.q


def residual_scale(n: int, a: complex, b: complex) -> float:
    """``max(|a|, |b|, 1)**n``, the growth rate of both sides of the Binet identities."""
    return max(abs(a), abs(b), 1.0) ** n


def binet_lucas_residual(n: int, a: complex, b: complex) -> complex:
    a, b = complex(a), complex(b)
    return family_poly("L", n).evaluate(a + b, a * b) - (a**n + b**n)


def binet_fib_residual(n: int, a: complex, b: complex, rel_gap: float = 1e-6) -> complex:
    """``F_n(a+b, ab) - (a**n - b**n)/(a - b)``.

    Raises :class:`DegenerateEqualRoots` when ``|a - b| <= rel_gap * max(|a|, |b|, 1)``;
    below that the quotient loses too many digits to cancellation.
    """
    a, b = complex(a), complex(b)
    if abs(a - b) <= rel_gap * max(abs(a), abs(b), 1.0):
        raise DegenerateEqualRoots(f"|a - b| = {abs(a - b):.3g} too small")
    return family_poly("F", n).evaluate(a + b, a * b) - (a**n - b**n) / (a - b)


def derivative_identity_residual(n: int) -> BivarPoly:
    """``d/dX V_n - n*U_n``; the zero polynomial for every ``n >= 1``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return family_poly("V", n).diff_x() - n * family_poly("U", n)


def rotated_eval_residual(n: int, a: complex, b: complex, theta: float) -> complex:
    a, b = complex(a), complex(b)
    w = cmath.exp(1j * theta)
    x = a * w + b / w
    rhs = a**n * cmath.exp(1j * n * theta) + b**n * cmath.exp(-1j * n * theta)
    return family_poly("L", n).evaluate(x, a * b) - rhs
