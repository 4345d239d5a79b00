"""Confluent hypergeometric series with bottom parameter -N, cut at z^N, the
truncated Kummer transformation, and the Pade table of exp(z).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_algebra import Number, Poly, Series, factorial, pochhammer, series_exp, series_mul, to_scalar

__all__ = [
    "TruncatedOneF1",
    "PadePair",
    "truncated_1f1",
    "kummer_residual",
    "pade_exp",
    "pade_residual",
    "pade_order_first_defect",
]


@dataclass(frozen=True)
class TruncatedOneF1:
    """[1F1(a; -N; scale z)]_N."""

    a: int
    N: int
    scale: Fraction
    coeffs: Series

    def as_poly(self) -> Poly:
        return self.coeffs.to_poly()


@dataclass(frozen=True)
class PadePair:
    n: int
    m: int
    numerator: Poly
    denominator: Poly


def truncated_1f1(a: int, N: int, scale: Number = 1) -> TruncatedOneF1:
    """sum_{j=0}^{N} (a)_j / ((-N)_j j!) (scale z)^j."""
    if N < 1:
        raise ValueError("N must be >= 1")
    scale = to_scalar(scale)
    cs = [pochhammer(a, j) / (pochhammer(-N, j) * factorial(j)) * scale**j for j in range(N + 1)]
    return TruncatedOneF1(a, N, scale, Series(N, cs))


def kummer_residual(a: int, N: int) -> Series:
    """[1F1(a;-N;z)]_N - e^z [1F1(-N-a;-N;-z)]_N through z^N."""
    left = truncated_1f1(a, N, 1).coeffs
    right = series_mul(series_exp(N), truncated_1f1(-N - a, N, -1).coeffs)
    return left - right


def pade_exp(n: int, m: int) -> PadePair:
    """R_nm = 1F1(-n; -n-m; z) / 1F1(-m; -n-m; -z)."""
    if n < 0 or m < 0 or n + m < 1:
        raise ValueError("need n, m >= 0 and n + m >= 1")
    N = n + m
    num = truncated_1f1(-n, N, 1).as_poly()
    den = truncated_1f1(-m, N, -1).as_poly()
    if num.degree != n or den.degree != m or den.coefficient(0) != 1:
        raise ArithmeticError("unexpected Pade polynomial degrees")
    return PadePair(n, m, num, den)


def pade_residual(n: int, m: int, order: int | None = None) -> Series:
    """e^z den - num through z^order (default n + m + 1).

    Since den(0) = 1 this has the same leading term as e^z - R_nm.
    """
    p = pade_exp(n, m)
    order = n + m + 1 if order is None else order
    return series_mul(series_exp(order), p.denominator.to_series(order)) - p.numerator.to_series(order)


def pade_order_first_defect(n: int, m: int) -> tuple[int, Fraction]:
    """First exponent where e^z den - num is nonzero, and its coefficient."""
    order = n + m + 1
    while True:
        r = pade_residual(n, m, order)
        for i, c in enumerate(r.coeffs):
            if c:
                return i, c
        order *= 2
