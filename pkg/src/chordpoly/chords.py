"""Chord products on a circle stretched into an ellipse.

The ``n`` marked points are ``zeta**j * a + zeta**-j * b`` with
``zeta = exp(2*pi*i/n)``, i.e. ``((a+b) cos t, (a-b) sin t)`` at
``t = 2*pi*j/n``. Chords run from the anchor ``a + b`` (``j = 0``) to the
other ``n - 1`` points. Their product should equal ``n (a**n - b**n)/(a - b)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import InvalidEllipse, OverflowToNonFinite
from .lucasfib import OmegaSpec, omega_poly

LOG_SPACE_THRESHOLD = 64


@dataclass(frozen=True)
class EllipseSpec:
    """Semi-axis parameters: horizontal half-axis ``a+b``, vertical ``a-b``."""

    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)) or not a > abs(b):
            raise InvalidEllipse(f"need a > |b| >= 0, got a={self.a!r}, b={self.b!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def golden(cls) -> "EllipseSpec":
        r5 = math.sqrt(5.0)
        return cls((1.0 + r5) / 2.0, (1.0 - r5) / 2.0)

    @classmethod
    def circle(cls) -> "EllipseSpec":
        return cls(1.0, 0.0)


@dataclass(frozen=True)
class ChordReport:
    n: int
    spec: EllipseSpec
    chord_lengths: Tuple[float, ...]
    numeric_product: float
    formula_value: float
    relative_discrepancy: float
    log_product: float = field(default=math.nan)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "a": self.spec.a,
            "b": self.spec.b,
            "chord_lengths": list(self.chord_lengths),
            "numeric_product": self.numeric_product,
            "formula_value": self.formula_value,
            "relative_discrepancy": self.relative_discrepancy,
            "log_product": self.log_product,
        }


def _check_n(n: int, lo: int = 2) -> None:
    if not isinstance(n, int) or n < lo:
        raise ValueError(f"n must be an integer >= {lo}, got {n!r}")


def lattice_points(n: int, spec: EllipseSpec) -> List[complex]:
    _check_n(n)
    h, v = spec.a + spec.b, spec.a - spec.b
    pts = []
    for j in range(n):
        t = 2.0 * math.pi * j / n
        pts.append(complex(h * math.cos(t), v * math.sin(t)))
    return pts


def chord_lengths(n: int, spec: EllipseSpec) -> List[float]:
    """Distances from ``a + b`` to the other points.

    ``(a+b)(1 - cos t)`` is written ``2(a+b) sin(t/2)**2`` so short chords
    keep their relative accuracy.
    """
    _check_n(n)
    h, v = spec.a + spec.b, spec.a - spec.b
    out = []
    for j in range(1, n):
        t = 2.0 * math.pi * j / n
        dx = 2.0 * h * math.sin(t / 2.0) ** 2
        dy = v * math.sin(t)
        out.append(math.hypot(dx, dy))
    return out


def price_formula(n: int, spec: EllipseSpec) -> float:
    """``n * (a**n - b**n) / (a - b)`` as ``n * sum_k a**(n-1-k) * b**k``."""
    _check_n(n)
    a, b = spec.a, spec.b
    # |b| < a, so the terms shrink geometrically; no cancellation as b -> a
    acc = 0.0
    bk = 1.0
    try:
        for k in range(n):
            acc += a ** (n - 1 - k) * bk
            bk *= b
    except OverflowError as exc:
        raise OverflowToNonFinite("formula value exceeds the floating range") from exc
    val = n * acc
    if not math.isfinite(val):
        raise OverflowToNonFinite("formula value exceeds the floating range")
    return val


def chord_product_numeric(n: int, spec: EllipseSpec) -> ChordReport:
    lengths = chord_lengths(n, spec)
    log_product = math.fsum(math.log(d) for d in lengths)
    if n > LOG_SPACE_THRESHOLD:
        try:
            product = math.exp(log_product)
        except OverflowError as exc:
            raise OverflowToNonFinite(f"chord product for n={n} exceeds the floating range") from exc
    else:
        product = math.prod(lengths)
    if not math.isfinite(product):
        raise OverflowToNonFinite(f"chord product for n={n} exceeds the floating range")
    formula = price_formula(n, spec)
    return ChordReport(
        n=n,
        spec=spec,
        chord_lengths=tuple(lengths),
        numeric_product=product,
        formula_value=formula,
        relative_discrepancy=abs(product - formula) / formula,
        log_product=log_product,
    )


def circle_poly_eval(n: int, z):
    """``z**(n-1) + ... + z + 1`` by Horner; exactly ``n`` at ``z = 1``."""
    _check_n(n)
    acc = 1
    for _ in range(n - 1):
        acc = acc * z + 1
    return acc


def cotes_product(n: int, x: float) -> float:
    """``prod_j |x - zeta**j|`` for ``0 <= x < 1``; should equal ``1 - x**n``."""
    _check_n(n, lo=1)
    if not 0.0 <= x < 1.0:
        raise ValueError("x must lie in [0, 1)")
    prod = 1.0
    for j in range(n):
        t = 2.0 * math.pi * j / n
        prod *= abs(complex(x - math.cos(t), -math.sin(t)))
    return prod


def omega_root_check(n: int, spec: EllipseSpec, omega: Optional[object] = None) -> float:
    """Largest ``|Omega_n(point)|`` over the lattice points."""
    if omega is None:
        omega = omega_poly(OmegaSpec.from_ab(n, spec.a, spec.b))
    return max(abs(omega(z)) for z in lattice_points(n, spec))
