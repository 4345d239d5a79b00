"""Matrix realizations of the (N+1)-dimensional su(2) irrep and its transpose,
plus the eigenproblem of X = (J+ + J-)/2.

Columns are images of basis vectors: ``J[:, n]`` holds the coordinates of
``J|n>``.  Transposition is the literal matrix transpose.

For the transposed representations (``tilde`` and ``star`` bases) the
transposed raising/lowering operators swap roles, so ``RepMatrices.Jp`` holds
the matrix of J-^T and ``RepMatrices.Jm`` holds J+^T.  With that convention
every :class:`RepMatrices` satisfies the same commutation relations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Literal

from .exact_algebra import (
    Matrix,
    binomial,
    commutator,
    tridiagonal_null_vector,
)
from .krawtchouk import krawtchouk_table

__all__ = [
    "IrrepBasisKind",
    "RepMatrices",
    "EigPair",
    "build_irrep",
    "build_tilde_rep",
    "build_star_rep",
    "star_from_conjugation",
    "casimir",
    "casimir_value",
    "x_eigenvector",
    "x_adjoint_eigenvector",
    "biorthogonality_gram",
    "printed_recCn_residual",
    "derived_recCn_residual",
    "find_printed_recCn_counterexample",
]

IrrepBasisKind = Literal["plain", "tilde", "star"]


@dataclass(frozen=True)
class RepMatrices:
    N: int
    J0: Matrix
    Jp: Matrix
    Jm: Matrix
    basis: IrrepBasisKind = "plain"

    @property
    def dim(self) -> int:
        return self.N + 1

    @property
    def X(self) -> Matrix:
        return Fraction(1, 2) * (self.Jp + self.Jm)

    def transposed_generators(self) -> tuple[Matrix, Matrix, Matrix]:
        """(J0^T, J+^T, J-^T) for a transposed-basis representation."""
        if self.basis == "plain":
            raise ValueError("plain basis carries J0, J+, J- themselves")
        return self.J0, self.Jm, self.Jp

    def commutator_defects(self) -> dict[str, Matrix]:
        """[J0,J+] - J+, [J0,J-] + J-, [J+,J-] - 2 J0; all zero for a representation."""
        return {
            "[J0,J+]-J+": commutator(self.J0, self.Jp) - self.Jp,
            "[J0,J-]+J-": commutator(self.J0, self.Jm) + self.Jm,
            "[J+,J-]-2J0": commutator(self.Jp, self.Jm) - 2 * self.J0,
        }

    def satisfies_commutators(self) -> bool:
        return all(m.is_zero() for m in self.commutator_defects().values())


@dataclass(frozen=True)
class EigPair:
    k: int
    value: Fraction
    vector: tuple[Fraction, ...]


def _check_N(N: int) -> None:
    if N < 1:
        raise ValueError("N must be >= 1")


def _check_k(k: int, N: int) -> None:
    _check_N(N)
    if not 0 <= k <= N:
        raise ValueError(f"k = {k} is outside 0..{N}")


def build_irrep(N: int) -> RepMatrices:
    """J0|n> = (n - N/2)|n>, J+|n> = (n - N)|n+1>, J-|n> = -n|n-1>."""
    _check_N(N)
    d = N + 1
    J0 = Matrix.diag([Fraction(2 * n - N, 2) for n in range(d)])
    jp = [[0] * d for _ in range(d)]
    jm = [[0] * d for _ in range(d)]
    for n in range(d):
        if n < N:
            jp[n + 1][n] = n - N
        if n > 0:
            jm[n - 1][n] = -n
    return RepMatrices(N, J0, Matrix.from_rows(jp), Matrix.from_rows(jm), "plain")


def build_tilde_rep(N: int) -> RepMatrices:
    """Transposed generators acting on the dual basis, dual(m) . |n> = delta_mn."""
    plain = build_irrep(N)
    return RepMatrices(N, plain.J0.T, plain.Jm.T, plain.Jp.T, "tilde")


def _star_scale(N: int) -> list[Fraction]:
    # |n>* = n!(N-n)!/N! * dual(n) = dual(n) / C(N, n)
    return [1 / binomial(N, n) for n in range(N + 1)]


def build_star_rep(N: int) -> RepMatrices:
    """Transposed generators on |n>* = n!(N-n)!/N! dual(n):

    J0^T|n>* = (n - N/2)|n>*,  J+^T|n>* = -n|n-1>*,  J-^T|n>* = (n - N)|n+1>*.
    """
    _check_N(N)
    d = N + 1
    J0 = Matrix.diag([Fraction(2 * n - N, 2) for n in range(d)])
    jpT = [[0] * d for _ in range(d)]
    jmT = [[0] * d for _ in range(d)]
    for n in range(d):
        if n > 0:
            jpT[n - 1][n] = -n
        if n < N:
            jmT[n + 1][n] = n - N
    return RepMatrices(N, J0, Matrix.from_rows(jmT), Matrix.from_rows(jpT), "star")


def star_from_conjugation(N: int) -> RepMatrices:
    """Star matrices obtained as B J^T B^-1 with B = diag(C(N, n)).

    B is the inverse of diag(n!(N-n)!/N!), the matrix of the change of basis
    from dual to star vectors.
    """
    plain = build_irrep(N)
    s = _star_scale(N)
    B = Matrix.diag([1 / c for c in s])
    Binv = Matrix.diag(s)

    def conj(m: Matrix) -> Matrix:
        return B @ m.T @ Binv

    return RepMatrices(N, conj(plain.J0), conj(plain.Jm), conj(plain.Jp), "star")


def casimir_value(N: int) -> Fraction:
    return Fraction(N, 2) * (Fraction(N, 2) + 1)


def casimir(rep: RepMatrices) -> Matrix:
    """J0^2 - J0 + J+ J-."""
    return rep.J0 @ rep.J0 - rep.J0 + rep.Jp @ rep.Jm


def _solve_eig(m: Matrix, k: int, N: int) -> EigPair:
    value = Fraction(2 * k - N, 2)
    v = tridiagonal_null_vector(m, value)
    residual = tuple(a - value * b for a, b in zip(m @ v, v))
    if any(residual):
        raise ArithmeticError(f"eigen-residual nonzero for k={k}, N={N}: {residual}")
    return EigPair(k, value, v)


@lru_cache(maxsize=1024)
def x_eigenvector(k: int, N: int) -> EigPair:
    """Eigenvector of X on span{|n>}, normalized by C_0 = 1.

    Solved from the matrix itself, then checked against C_n = C(N,n) K_n(k).
    """
    _check_k(k, N)
    pair = _solve_eig(build_irrep(N).X, k, N)
    t = krawtchouk_table(N)
    closed = tuple(binomial(N, n) * t(n, k) for n in range(N + 1))
    if pair.vector != closed:
        raise ArithmeticError(f"eigenvector mismatch for k={k}, N={N}")
    return pair


@lru_cache(maxsize=1024)
def x_adjoint_eigenvector(k: int, N: int) -> EigPair:
    """Eigenvector of X^T in the dual basis; coefficients K_n(k)."""
    _check_k(k, N)
    pair = _solve_eig(build_tilde_rep(N).X, k, N)
    t = krawtchouk_table(N)
    closed = tuple(t(n, k) for n in range(N + 1))
    if pair.vector != closed:
        raise ArithmeticError(f"adjoint eigenvector mismatch for k={k}, N={N}")
    return pair


def biorthogonality_gram(N: int) -> Matrix:
    """G[k, l] = <lambda*_k, lambda_l> = sum_n C(N,n) K_n(k) K_n(l)."""
    _check_N(N)
    left = [x_adjoint_eigenvector(k, N).vector for k in range(N + 1)]
    right = [x_eigenvector(l, N).vector for l in range(N + 1)]
    return Matrix.from_rows(
        [[sum((a * b for a, b in zip(lk, rl)), Fraction(0)) for rl in right] for lk in left]
    )


# Coefficient recurrence for C_n(k).  The printed form carries (N+1-k) on
# C_{n-1}; the one read off the matrix actions carries (N+1-n).

def _coeff(vec, n):
    return vec[n] if 0 <= n < len(vec) else Fraction(0)


def printed_recCn_residual(n: int, k: int, N: int) -> Fraction:
    C = x_eigenvector(k, N).vector
    return (N - 2 * k) * C[n] - (n + 1) * _coeff(C, n + 1) - (N + 1 - k) * _coeff(C, n - 1)


def derived_recCn_residual(n: int, k: int, N: int) -> Fraction:
    C = x_eigenvector(k, N).vector
    return (N - 2 * k) * C[n] - (n + 1) * _coeff(C, n + 1) - (N + 1 - n) * _coeff(C, n - 1)


def find_printed_recCn_counterexample(max_N: int = 6) -> dict | None:
    """Smallest (N, k, n) at which the printed recurrence fails."""
    for N in range(1, max_N + 1):
        for k in range(N + 1):
            for n in range(N + 1):
                r = printed_recCn_residual(n, k, N)
                if r:
                    C = x_eigenvector(k, N).vector
                    return {
                        "formula": "(N-2k) C_n = (n+1) C_{n+1} + (N+1-k) C_{n-1}",
                        "inputs": {"N": N, "k": k, "n": n},
                        "expected": (N - 2 * k) * C[n],
                        "actual": (n + 1) * _coeff(C, n + 1) + (N + 1 - k) * _coeff(C, n - 1),
                        "corrected_residual": derived_recCn_residual(n, k, N),
                    }
    return None
