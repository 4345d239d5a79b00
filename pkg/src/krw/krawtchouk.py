"""Symmetric (p = 1/2) Krawtchouk polynomials K_n(k; 1/2, N) on the lattice
0 <= n, k <= N.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_algebra import Matrix, binomial, factorial, pochhammer

__all__ = [
    "KrawtchoukParams",
    "KrawtchoukTable",
    "krawtchouk_eval",
    "krawtchouk_table",
    "normalized_pn",
    "rec1_residual",
    "rec2_residual",
    "orthogonality_norm",
    "orthogonality_gram",
    "mirror_check",
]


@dataclass(frozen=True)
class KrawtchoukParams:
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be >= 1")


@dataclass(frozen=True)
class KrawtchoukTable:
    """values[n, k] = K_n(k; 1/2, N)."""

    N: int
    values: Matrix

    def __call__(self, n: int, k: int) -> Fraction:
        return self.values[n, k]

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.values.row(n)


def _check_lattice(n: int, k: int, N: int) -> None:
    if N < 1:
        raise ValueError("N must be >= 1")
    if not (0 <= n <= N and 0 <= k <= N):
        raise ValueError(f"(n, k) = ({n}, {k}) is outside the lattice 0..{N}")


def krawtchouk_eval(n: int, k: int, N: int) -> Fraction:
    """Terminating 2F1(-n, -k; -N; 2), summed directly.

    The sum stops at j = min(n, k), before (-N)_j can vanish.
    """
    _check_lattice(n, k, N)
    total = Fraction(0)
    term = Fraction(1)
    for j in range(min(n, k) + 1):
        if j:
            term = term * (-n + j - 1) * (-k + j - 1) * 2 / ((-N + j - 1) * j)
        total += term
    return total


@lru_cache(maxsize=128)
def krawtchouk_table(N: int) -> KrawtchoukTable:
    """All K_n(k) from the three-term recurrence in n,

        (N - 2k) K_n = (N - n) K_{n+1} + n K_{n-1},

    seeded with K_0 = 1.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    rows = [[Fraction(1)] * (N + 1)]
    prev = [Fraction(0)] * (N + 1)
    for n in range(N):
        cur = rows[-1]
        rows.append([((N - 2 * k) * cur[k] - n * prev[k]) / (N - n) for k in range(N + 1)])
        prev = cur
    return KrawtchoukTable(N, Matrix.from_rows(rows))


def normalized_pn(n: int, k: int, N: int) -> Fraction:
    """p_n(k) = (1/2)^n (-N)_n K_n(k), the monic normalization."""
    _check_lattice(n, k, N)
    return Fraction(1, 2**n) * pochhammer(-N, n) * krawtchouk_table(N)(n, k)


def _pn_or_zero(n: int, k: int, N: int) -> Fraction:
    # p_{-1} = 0; p_{N+1}(k) vanishes on the lattice because (-N)_{N+1} = 0
    if n < 0 or n > N:
        return Fraction(0)
    return normalized_pn(n, k, N)


def rec1_residual(n: int, k: int, N: int) -> Fraction:
    """(N-2k)K_n - (N-n)K_{n+1} - nK_{n-1} at a lattice point."""
    _check_lattice(n, k, N)
    t = krawtchouk_table(N)
    up = t(n + 1, k) if n < N else Fraction(0)
    down = t(n - 1, k) if n > 0 else Fraction(0)
    return (N - 2 * k) * t(n, k) - (N - n) * up - n * down


def rec2_residual(n: int, k: int, N: int) -> Fraction:
    """k p_n - p_{n+1} - (N/2) p_n - (n(N+1-n)/4) p_{n-1}."""
    _check_lattice(n, k, N)
    p = _pn_or_zero(n, k, N)
    return (
        k * p
        - _pn_or_zero(n + 1, k, N)
        - Fraction(N, 2) * p
        - Fraction(n * (N + 1 - n), 4) * _pn_or_zero(n - 1, k, N)
    )


def orthogonality_norm(n: int, N: int) -> Fraction:
    """2^N (-1)^n n! / (-N)_n, the squared norm of K_n under the binomial weight."""
    return 2**N * (-1) ** n * factorial(n) / pochhammer(-N, n)


def orthogonality_gram(N: int) -> Matrix:
    """G[m, n] = sum_k C(N,k) K_m(k) K_n(k)."""
    t = krawtchouk_table(N)
    w = [binomial(N, k) for k in range(N + 1)]
    rows = []
    for m in range(N + 1):
        km = t.row(m)
        rows.append([sum((w[k] * km[k] * kn for k, kn in enumerate(t.row(n))), Fraction(0)) for n in range(N + 1)])
    return Matrix.from_rows(rows)


def mirror_check(n: int, k: int, N: int) -> bool:
    """Persymmetry K_{N-n}(k) == (-1)^k K_n(k) at one lattice point."""
    _check_lattice(n, k, N)
    t = krawtchouk_table(N)
    return t(N - n, k) == (-1) ** k * t(n, k)
