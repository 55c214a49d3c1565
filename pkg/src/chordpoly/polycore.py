"""Exact bivariate and univariate polynomials with complex evaluation.

Bivariate polynomials live in ``X`` and ``Y`` with integer coefficients and are
stored sparsely as ``{(i, j): c}`` meaning ``c * X**i * Y**j``. Univariate
polynomials in ``z`` carry :class:`fractions.Fraction` coefficients in a dense
ascending tuple.

Evaluation is exact: a finite float is a dyadic rational, so the value of an
integer polynomial at float (or rational) arguments is a Gaussian rational that
can be computed with Python integers and rounded once at the end. This removes
the cancellation error a float Horner scheme suffers on alternating families
such as ``X**n - n*X**(n-2)*Y + ...``.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .errors import OverflowToNonFinite

Number = Union[int, float, complex, Fraction]
Monomial = Tuple[int, int]

__all__ = [
    "BivarPoly",
    "UnivarPoly",
    "X",
    "Y",
    "ONE",
    "ZERO",
    "poly_add",
    "poly_mul",
    "poly_diff_x",
    "poly_eval",
    "univar_specialize",
    "parse_bivar",
    "parse_univar",
]


# ---------------------------------------------------------------------------
# exact evaluation helpers
# ---------------------------------------------------------------------------

def _gaussian_rational(z: Number) -> Tuple[int, int, int]:
    """Return ``(re, im, den)`` with ``z == (re + 1j*im) / den`` exactly, ``den > 0``."""
    if isinstance(z, Rational):
        fr = Fraction(z)
        return fr.numerator, 0, fr.denominator
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite evaluation point {z!r}")
    rn, rd = z.real.as_integer_ratio()
    im, idn = z.imag.as_integer_ratio()
    den = rd * idn // math.gcd(rd, idn)
    return rn * (den // rd), im * (den // idn), den


def _ghorner(coeffs: Sequence[Tuple[int, int]], num: Tuple[int, int], den: int) -> Tuple[int, int]:
    """Homogenised Horner over the Gaussian integers.

    With ``d = len(coeffs) - 1`` returns ``N`` such that
    ``sum(c_k * (num/den)**k) == N / den**d``.
    """
    ar, ai = coeffs[-1]
    nr, ni = num
    pw = 1
    for cr, ci in reversed(coeffs[:-1]):
        pw *= den
        ar, ai = ar * nr - ai * ni + cr * pw, ar * ni + ai * nr + ci * pw
    return ar, ai


def _round_gaussian(re_: int, im_: int, den: int) -> complex:
    try:
        return complex(re_ / den, im_ / den)
    except OverflowError as exc:
        raise OverflowToNonFinite("polynomial value exceeds the floating range") from exc


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render(terms: Iterable[Tuple[Fraction, Sequence[Tuple[str, int]]]]) -> str:
    """Join ``(coeff, [(var, exp), ...])`` pairs in the given order."""
    out = []
    for c, powers in terms:
        mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in powers if e)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out) if out else "0"


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:(\d+)(?:/(\d+))?|([A-Za-z])(?:\^(\d+))?)$")


def _parse_terms(text: str, variables: Sequence[str]) -> Dict[Tuple[int, ...], Fraction]:
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    out: Dict[Tuple[int, ...], Fraction] = {}
    pos = 0
    for m in _TERM_RE.finditer(s):
        if m.start() != pos or (pos and not m.group(1)):
            raise ValueError(f"malformed polynomial text {text!r}")
        pos = m.end()
        coeff = Fraction(-1 if m.group(1) == "-" else 1)
        exps = [0] * len(variables)
        for factor in m.group(2).split("*"):
            fm = _FACTOR_RE.match(factor)
            if fm is None:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if fm.group(1) is not None:
                coeff *= Fraction(int(fm.group(1)), int(fm.group(2) or 1))
            else:
                if fm.group(3) not in variables:
                    raise ValueError(f"unknown variable {fm.group(3)!r} in {text!r}")
                exps[variables.index(fm.group(3))] += int(fm.group(4) or 1)
        key = tuple(exps)
        out[key] = out.get(key, Fraction(0)) + coeff
    if pos != len(s):
        raise ValueError(f"malformed polynomial text {text!r}")
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------

class BivarPoly:
    """Immutable polynomial in ``X`` and ``Y`` with integer coefficients.

    ``X`` has weight 1 and ``Y`` weight 2 for :attr:`weighted_degree`.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        clean: Dict[Monomial, int] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in {(i, j)}")
            if not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                else:
                    raise TypeError(f"coefficient {c!r} is not an integer")
            if c:
                clean[(int(i), int(j))] = clean.get((int(i), int(j)), 0) + c
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def weighted_degree(self) -> Optional[int]:
        """``max(i + 2*j)`` over the terms, or ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(i + 2 * j for i, j in self._terms)

    @property
    def degree_x(self) -> Optional[int]:
        if not self._terms:
            return None
        return max(i for i, _ in self._terms)

    def is_weighted_homogeneous(self, d: Optional[int] = None) -> bool:
        weights = {i + 2 * j for i, j in self._terms}
        if d is None:
            return len(weights) <= 1
        return weights <= {d}

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _as_bivar(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_bivar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_bivar(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_bivar(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = _as_bivar(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # calculus / substitution ------------------------------------------------

    def diff_x(self) -> "BivarPoly":
        return BivarPoly({(i - 1, j): i * c for (i, j), c in self._terms.items() if i})

    def substitute_y(self, sign: int) -> "BivarPoly":
        """Image under ``Y -> sign*Y`` for ``sign`` in ``{1, -1}``."""
        return BivarPoly({(i, j): c * sign**j for (i, j), c in self._terms.items()})

    def specialize_y(self, y) -> "UnivarPoly":
        y = Fraction(y)
        dx = self.degree_x
        if dx is None:
            return UnivarPoly(())
        coeffs = [Fraction(0)] * (dx + 1)
        for (i, j), c in self._terms.items():
            coeffs[i] += c * y**j
        return UnivarPoly(coeffs)

    def __call__(self, x: Number, y: Number) -> complex:
        return self.evaluate(x, y)

    def evaluate(self, x: Number, y: Number) -> complex:
        """Value at ``(x, y)``, computed exactly and rounded once to ``complex``.

        Raises :class:`OverflowToNonFinite` when the value exceeds the float range.
        """
        if not self._terms:
            # still validate the inputs
            _gaussian_rational(x)
            _gaussian_rational(y)
            return 0j
        xr, xi, xd = _gaussian_rational(x)
        yr, yi, yd = _gaussian_rational(y)
        dx = max(i for i, _ in self._terms)
        dy = max(j for _, j in self._terms)
        rows = [[(0, 0)] * (dy + 1) for _ in range(dx + 1)]
        for (i, j), c in self._terms.items():
            rows[i][j] = (c, 0)
        inner = [_ghorner(row, (yr, yi), yd) for row in rows]
        re_, im_ = _ghorner(inner, (xr, xi), xd)
        return _round_gaussian(re_, im_, xd**dx * yd**dy)

    # display ---------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def __str__(self):
        return _render(
            (Fraction(c), (("X", i), ("Y", j))) for (i, j), c in self.sorted_terms()
        )

    def __repr__(self):
        return f"BivarPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "BivarPoly":
        return parse_bivar(text)


def _as_bivar(obj):
    if isinstance(obj, BivarPoly):
        return obj
    if isinstance(obj, int):
        return BivarPoly.const(obj)
    return NotImplemented


def parse_bivar(text: str) -> BivarPoly:
    """Inverse of ``str(BivarPoly)``; accepts e.g. ``"X^3 - 3*X*Y"``."""
    terms = _parse_terms(text, ("X", "Y"))
    for k, c in terms.items():
        if c.denominator != 1:
            raise ValueError(f"non-integer coefficient {c} in {text!r}")
    return BivarPoly({k: c.numerator for k, c in terms.items()})


ZERO = BivarPoly()
ONE = BivarPoly.const(1)
X = BivarPoly({(1, 0): 1})
Y = BivarPoly({(0, 1): 1})


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------

class UnivarPoly:
    """Immutable polynomial in ``z`` with exact rational coefficients (ascending)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if isinstance(other, UnivarPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UnivarPoly([other])
        if not isinstance(other, UnivarPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UnivarPoly(x - y for x, y in zip(a, b))

    def __call__(self, z: Number) -> complex:
        return self.evaluate(z)

    def evaluate(self, z: Number) -> complex:
        """Exact value at ``z`` rounded once to ``complex``."""
        zr, zi, zd = _gaussian_rational(z)
        if not self.coeffs:
            return 0j
        cden = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [(int(c * cden), 0) for c in self.coeffs]
        re_, im_ = _ghorner(ints, (zr, zi), zd)
        return _round_gaussian(re_, im_, cden * zd ** (len(ints) - 1))

    def __str__(self):
        return _render(
            (c, (("z", k),)) for k, c in reversed(list(enumerate(self.coeffs))) if c
        )

    def __repr__(self):
        return f"UnivarPoly({str(self)!r})"


def parse_univar(text: str) -> UnivarPoly:
    terms = _parse_terms(text, ("z",))
    if not terms:
        return UnivarPoly(())
    coeffs = [Fraction(0)] * (max(k[0] for k in terms) + 1)
    for (k,), c in terms.items():
        coeffs[k] = c
    return UnivarPoly(coeffs)


# ---------------------------------------------------------------------------
# functional surface
# ---------------------------------------------------------------------------

def poly_add(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p + q


def poly_mul(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p * q


def poly_diff_x(p: BivarPoly) -> BivarPoly:
    return p.diff_x()


def poly_eval(p: BivarPoly, x: Number, y: Number) -> complex:
    return p.evaluate(x, y)


def univar_specialize(p: BivarPoly, y) -> UnivarPoly:
    """Substitute the exact rational ``y`` for ``Y``; ``X`` becomes ``z``."""
    return p.specialize_y(y)
