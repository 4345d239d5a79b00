"""Finite-difference model: su(2) acting on grid functions f(s), s = 0..N,

    J0 = s - N/2,  J+ = -(N - s + 1) T-,  J- = -(s + 1) T+,   T± f(s) = f(s ± 1).

Shifts that would reach outside 0..N contribute nothing; the coefficients that
multiply them vanish at the walls anyway.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from .exact_algebra import Matrix, binomial, tridiagonal_null_vector
from .krawtchouk import krawtchouk_table
from .su2_rep import RepMatrices

__all__ = [
    "GridFunction",
    "fd_operators",
    "fd_transposed",
    "fd_lambda",
    "fd_lambda_star",
    "fd_biorthogonality",
    "adjoint_difference_residual",
    "printed_diff2_residual",
    "find_printed_diff2_counterexample",
]


@dataclass(frozen=True)
class GridFunction:
    N: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.N + 1:
            raise ValueError("grid function must have N + 1 values")

    def __call__(self, s: int) -> Fraction:
        return self.values[s] if 0 <= s <= self.N else Fraction(0)


def _shift_matrix(N: int, step: int, coef) -> Matrix:
    """Matrix of f(s) -> coef(s) f(s + step), truncated to 0..N."""
    d = N + 1
    rows = [[0] * d for _ in range(d)]
    for s in range(d):
        t = s + step
        if 0 <= t <= N:
            rows[s][t] = coef(s)
    return Matrix.from_rows(rows)


def fd_operators(N: int) -> RepMatrices:
    if N < 1:
        raise ValueError("N must be >= 1")
    J0 = Matrix.diag([Fraction(2 * s - N, 2) for s in range(N + 1)])
    Jp = _shift_matrix(N, -1, lambda s: -(N - s + 1))
    Jm = _shift_matrix(N, +1, lambda s: -(s + 1))
    return RepMatrices(N, J0, Jp, Jm, "plain")


def fd_transposed(N: int) -> tuple[Matrix, Matrix, Matrix]:
    """Literal transposes (J0^T, J+^T, J-^T).

    As difference operators: J+^T = -(N - s) T+, J-^T = -s T-.
    """
    ops = fd_operators(N)
    return ops.J0.T, ops.Jp.T, ops.Jm.T


def _check_k(k: int, N: int) -> None:
    if N < 1:
        raise ValueError("N must be >= 1")
    if not 0 <= k <= N:
        raise ValueError(f"k = {k} is outside 0..{N}")


def _eigen(m: Matrix, k: int, N: int) -> tuple[Fraction, ...]:
    value = Fraction(2 * k - N, 2)
    v = tridiagonal_null_vector(m, value)
    if any(a - value * b for a, b in zip(m @ v, v)):
        raise ArithmeticError(f"eigen-residual nonzero for k={k}, N={N}")
    return v


@lru_cache(maxsize=1024)
def fd_lambda(k: int, N: int) -> GridFunction:
    """lambda_k(s) = C(N, s) K_k(s), solved from (J+ + J-)/2 and checked."""
    _check_k(k, N)
    v = _eigen(fd_operators(N).X, k, N)
    t = krawtchouk_table(N)
    if v != tuple(binomial(N, s) * t(k, s) for s in range(N + 1)):
        raise ArithmeticError(f"lambda_k mismatch for k={k}, N={N}")
    return GridFunction(N, v)


@lru_cache(maxsize=1024)
def fd_lambda_star(k: int, N: int) -> GridFunction:
    """lambda*_k(s) = K_k(s), solved from the transposed matrices and checked."""
    _check_k(k, N)
    _, JpT, JmT = fd_transposed(N)
    v = _eigen(Fraction(1, 2) * (JpT + JmT), k, N)
    t = krawtchouk_table(N)
    if v != tuple(t(k, s) for s in range(N + 1)):
        raise ArithmeticError(f"lambda*_k mismatch for k={k}, N={N}")
    return GridFunction(N, v)


def fd_biorthogonality(N: int) -> Matrix:
    """G[k, l] = sum_s lambda*_k(s) lambda_l(s)."""
    left = [fd_lambda_star(k, N).values for k in range(N + 1)]
    right = [fd_lambda(l, N).values for l in range(N + 1)]
    return Matrix.from_rows(
        [[sum((a * b for a, b in zip(lk, rl)), Fraction(0)) for rl in right] for lk in left]
    )


def adjoint_difference_residual(k: int, N: int, s: int) -> Fraction:
    """(N - s) f(s+1) + s f(s-1) - (N - 2k) f(s) for f = lambda*_k."""
    f = fd_lambda_star(k, N)
    return (N - s) * f(s + 1) + s * f(s - 1) - (N - 2 * k) * f(s)


def printed_diff2_residual(k: int, N: int, s: int) -> Fraction:
    """Same with the printed coefficient (N - 2s) on f(s+1)."""
    f = fd_lambda_star(k, N)
    return (N - 2 * s) * f(s + 1) + s * f(s - 1) - (N - 2 * k) * f(s)


def find_printed_diff2_counterexample(max_N: int = 6) -> dict | None:
    """Smallest (N, k, s) at which the printed difference equation fails."""
    for N in range(1, max_N + 1):
        for k in range(N + 1):
            f = fd_lambda_star(k, N)
            for s in range(N + 1):
                if printed_diff2_residual(k, N, s):
                    return {
                        "formula": "(N-2s) f(s+1) + s f(s-1) = (N-2k) f(s)",
                        "inputs": {"N": N, "k": k, "s": s},
                        "expected": (N - 2 * k) * f(s),
                        "actual": (N - 2 * s) * f(s + 1) + s * f(s - 1),
                        "corrected_residual": adjoint_difference_residual(k, N, s),
                    }
    return None
