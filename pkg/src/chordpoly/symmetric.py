"""Power sums, elementary and complete homogeneous symmetric functions.

These are evaluated numerically on a finite list of complex values and serve
as an independent oracle for the two-variable recurrences in
:mod:`chordpoly.lucasfib`. Newton's identity

    s_n - s_{n-1} e_1 + s_{n-2} e_2 - ... + (-1)**n * n * e_n = 0

and its complete homogeneous counterpart

    h_n - h_{n-1} e_1 + h_{n-2} e_2 - ... + (-1)**n * e_n = 0

are exposed as residual functions that should vanish up to roundoff.
"""
from __future__ import annotations

import cmath
import math
from typing import List, Sequence

from .errors import ConvergenceDomainError

IndeterminateSet = Sequence[complex]


def _values(s: IndeterminateSet) -> List[complex]:
    vals = [complex(v) for v in s]
    if not vals:
        raise ValueError("need at least one indeterminate")
    for v in vals:
        if not cmath.isfinite(v):
            raise ValueError(f"non-finite indeterminate {v!r}")
    return vals


def power_sum(s: IndeterminateSet, k: int) -> complex:
    if k < 1:
        raise ValueError("power sums are indexed from k = 1")
    return sum(v**k for v in _values(s))


def elem_sym_all(s: IndeterminateSet) -> List[complex]:
    """``[e_0, ..., e_m]`` read off the coefficients of ``prod(1 + a_j t)``."""
    e = [1 + 0j]
    for v in _values(s):
        e.append(0j)
        for k in range(len(e) - 1, 0, -1):
            e[k] += v * e[k - 1]
    return e


def elem_sym(s: IndeterminateSet, k: int) -> complex:
    if k < 0:
        raise ValueError("k must be nonnegative")
    e = elem_sym_all(s)
    return e[k] if k < len(e) else 0j


def complete_hom_all(s: IndeterminateSet, kmax: int) -> List[complex]:
    """``[h_0, ..., h_kmax]`` by dynamic programming over the prefix of values.

    After processing ``a_1..a_i``, ``h[k]`` holds the degree-``k`` complete
    homogeneous polynomial in those values; adding ``a_i`` uses
    ``h_k <- h_k + a_i * h_{k-1}`` in increasing ``k``.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    h = [1 + 0j] + [0j] * kmax
    for v in _values(s):
        for k in range(1, kmax + 1):
            h[k] += v * h[k - 1]
    return h


def complete_hom(s: IndeterminateSet, k: int) -> complex:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return complete_hom_all(s, k)[k]


def newton_residual(s: IndeterminateSet, n: int) -> complex:
    if n < 1:
        raise ValueError("n must be >= 1")
    vals = _values(s)
    e = elem_sym_all(vals)
    sig = lambda k: e[k] if k < len(e) else 0j  # noqa: E731
    total = 0j
    for k in range(n):
        total += (-1) ** k * power_sum(vals, n - k) * sig(k)
    return total + (-1) ** n * n * sig(n)


def complete_hom_residual(s: IndeterminateSet, n: int) -> complex:
    if n < 1:
        raise ValueError("n must be >= 1")
    vals = _values(s)
    e = elem_sym_all(vals)
    h = complete_hom_all(vals, n)
    return sum((-1) ** k * h[n - k] * (e[k] if k < len(e) else 0j) for k in range(n + 1))


def generating_fn_check(s: IndeterminateSet, t: complex, K: int) -> complex:
    """Truncation residual ``prod 1/(1 - a_j t) - sum_{k<=K} h_k t**k``.

    Raises :class:`ConvergenceDomainError` unless ``|t| * max|a_j| < 1``.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    vals = _values(s)
    t = complex(t)
    if abs(t) * max(abs(v) for v in vals) >= 1:
        raise ConvergenceDomainError(f"|t| = {abs(t)} outside the radius of convergence")
    closed = 1 + 0j
    for v in vals:
        closed /= 1 - v * t
    h = complete_hom_all(vals, K)
    partial = 0j
    for hk in reversed(h):
        partial = partial * t + hk
    return closed - partial


def tolerance_scale(s: IndeterminateSet, n: int) -> float:
    """``m * max|a_j|**n``, the size of the terms that cancel in the residuals."""
    vals = _values(s)
    return len(vals) * max(abs(v) for v in vals) ** n


def geometric_tail_bound(s: IndeterminateSet, t: complex, K: int) -> float:
    """Bound on ``|generating_fn_check(s, t, K)|``.

    ``|h_k| <= C(k+m-1, m-1) r**k`` with ``r = max|a_j|``; the tail is summed
    until its terms are negligible.
    """
    vals = _values(s)
    m = len(vals)
    x = abs(complex(t)) * max(abs(v) for v in vals)
    total, k = 0.0, K + 1
    while True:
        term = math.comb(k + m - 1, m - 1) * x**k
        total += term
        if term < 1e-18 * max(total, 1e-300) or k > K + 10_000:
            return total
        k += 1
