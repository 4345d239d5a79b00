"""Bargmann model: first-order differential operators on span{z^0..z^N}

    J0 = z d - N/2,  J+ = z^2 d - N z,  J- = -d,

and their Lagrange adjoints on span{z^-1..z^-1-N}, compressed by the
projector onto that span.
"""
from __future__ import annotations

from fractions import Fraction

from .diffop import D, DiffOp, PolySpaceOperator, Z, operator_on_basis
from .exact_algebra import (
    Laurent,
    Matrix,
    Poly,
    Series,
    binomial,
    pochhammer,
    poly_mul,
    poly_pow,
    residue_pair,
    series_mul,
    tridiagonal_null_vector,
)
from .krawtchouk import krawtchouk_table
from .su2_rep import RepMatrices

__all__ = [
    "bargmann_generators",
    "bargmann_adjoint_generators",
    "bargmann_operators",
    "bargmann_adjoint_operators",
    "bargmann_rep",
    "bargmann_adjoint_rep",
    "bargmann_lambda",
    "bargmann_ode_residual",
    "bargmann_lambda_star",
    "bargmann_biorthogonality",
    "truncated_2f1_form",
    "form_2f1_expansion",
    "lambda_closed_form",
    "lambda_sum_form",
    "lambda_star_sum_form",
]


def bargmann_generators(N: int) -> tuple[DiffOp, DiffOp, DiffOp]:
    half = Fraction(N, 2)
    return Z() * D() - half, Z(2) * D() - N * Z(), -D()


def bargmann_adjoint_generators(N: int) -> tuple[DiffOp, DiffOp, DiffOp]:
    """As written: -z d - N/2 - 1, -z^2 d - (N+2) z, d."""
    half = Fraction(N, 2)
    return -(Z() * D()) - half - 1, -(Z(2) * D()) - (N + 2) * Z(), D()


def _check(N: int, k: int | None = None) -> None:
    if N < 1:
        raise ValueError("N must be >= 1")
    if k is not None and not 0 <= k <= N:
        raise ValueError(f"k = {k} is outside 0..{N}")


def bargmann_operators(N: int) -> tuple[PolySpaceOperator, PolySpaceOperator, PolySpaceOperator]:
    """(J0, J+, J-) on the monomials z^n, n = 0..N."""
    _check(N)
    exps = list(range(N + 1))
    return tuple(operator_on_basis(op, N, exps) for op in bargmann_generators(N))


def bargmann_adjoint_operators(
    N: int, normalized: bool = False
) -> tuple[PolySpaceOperator, PolySpaceOperator, PolySpaceOperator]:
    """Pi (J0^T, J+^T, J-^T) Pi on z^(-1-n), n = 0..N.

    With ``normalized`` the basis is n!(N-n)!/N! z^(-1-n) instead.
    """
    _check(N)
    exps = [-1 - n for n in range(N + 1)]
    norms = [1 / binomial(N, n) for n in range(N + 1)] if normalized else None
    return tuple(
        operator_on_basis(op, N, exps, norms, basis_kind="negative")
        for op in bargmann_adjoint_generators(N)
    )


def bargmann_rep(N: int) -> RepMatrices:
    J0, Jp, Jm = bargmann_operators(N)
    return RepMatrices(N, J0.matrix, Jp.matrix, Jm.matrix, "plain")


def bargmann_adjoint_rep(N: int, normalized: bool = True) -> RepMatrices:
    """Projected adjoints with J-^T in the raising slot (see su2_rep)."""
    J0T, JpT, JmT = bargmann_adjoint_operators(N, normalized)
    return RepMatrices(N, J0T.matrix, JmT.matrix, JpT.matrix, "star" if normalized else "tilde")


def lambda_closed_form(k: int, N: int) -> Poly:
    return poly_mul(poly_pow([1, -1], k), poly_pow([1, 1], N - k))


def lambda_sum_form(k: int, N: int) -> Poly:
    t = krawtchouk_table(N)
    return Poly([binomial(N, n) * t(n, k) for n in range(N + 1)])


def lambda_star_sum_form(k: int, N: int) -> Laurent:
    t = krawtchouk_table(N)
    return Laurent(-1 - N, [t(n, k) for n in range(N, -1, -1)])


def bargmann_ode_residual(k: int, N: int, f: Poly | None = None) -> Laurent:
    """[(z^2 - 1) d - N z + (N - 2k)] applied to lambda_k (or to f)."""
    f = lambda_closed_form(k, N) if f is None else f
    op = (Z(2) - 1) * D() - N * Z() + (N - 2 * k)
    return op.apply(f.to_laurent())


def bargmann_lambda(k: int, N: int) -> Poly:
    """(1 - z)^k (1 + z)^(N-k), checked against sum_n C(N,n) K_n(k) z^n,
    against the eigenvector of (J+ + J-)/2 and against its ODE."""
    _check(N, k)
    closed = lambda_closed_form(k, N)
    if closed != lambda_sum_form(k, N):
        raise ArithmeticError(f"generating function mismatch for k={k}, N={N}")
    _, Jp, Jm = bargmann_operators(N)
    X = Fraction(1, 2) * (Jp.matrix + Jm.matrix)
    v = tridiagonal_null_vector(X, Fraction(2 * k - N, 2))
    if Poly(v) != closed or any(a - Fraction(2 * k - N, 2) * b for a, b in zip(X @ v, v)):
        raise ArithmeticError(f"Bargmann eigenfunction mismatch for k={k}, N={N}")
    if not bargmann_ode_residual(k, N, closed).is_zero():
        raise ArithmeticError(f"ODE residual nonzero for k={k}, N={N}")
    return closed


def bargmann_lambda_star(k: int, N: int) -> Laurent:
    """Solution of 2 Pi X^T Pi f = (2k - N) f with f = sum a_n z^(-1-n), a_0 = 1."""
    _check(N, k)
    _, JpT, JmT = bargmann_adjoint_operators(N)
    X = Fraction(1, 2) * (JpT.matrix + JmT.matrix)
    value = Fraction(2 * k - N, 2)
    a = tridiagonal_null_vector(X, value)
    if any(x - value * y for x, y in zip(X @ a, a)):
        raise ArithmeticError(f"projected eigen-residual nonzero for k={k}, N={N}")
    solved = Laurent(-1 - N, reversed(a))
    if solved != lambda_star_sum_form(k, N):
        raise ArithmeticError(f"lambda*_k coefficients mismatch for k={k}, N={N}")
    return solved


def bargmann_biorthogonality(N: int) -> Matrix:
    """G[k, l] = res(lambda_k lambda*_l)."""
    _check(N)
    lam = [bargmann_lambda(k, N) for k in range(N + 1)]
    lam_star = [bargmann_lambda_star(l, N) for l in range(N + 1)]
    return Matrix.from_rows([[residue_pair(lam[k], lam_star[l]) for l in range(N + 1)] for k in range(N + 1)])


def form_2f1_expansion(k: int, N: int) -> Laurent:
    """[ 1/(z-1) 2F1(1, -k; -N; 2/(1-z)) ]_N expanded in u = 1/z.

    With 1/(z-1) = u/(1-u) and 2/(1-z) = -2u/(1-u), the j-th hypergeometric
    term is (-k)_j/(-N)_j (-2)^j u^(j+1) (1-u)^-(j+1); the series terminates at
    j = k.  Terms u^1..u^(N+1) are kept, i.e. z^-1..z^-1-N.
    """
    _check(N, k)
    order = N + 1
    geom = Series(order, [1] * (order + 1))  # 1/(1-u)
    u = Series(order, [0, 1])
    total = Series(order, [])
    power = series_mul(u, geom)  # u/(1-u)
    step = power
    for j in range(k + 1):
        c = pochhammer(-k, j) / pochhammer(-N, j) * (-2) ** j
        total = total + c * power
        power = series_mul(power, step)
    return Laurent(-1 - N, [total.coeffs[i] for i in range(order, 0, -1)])


def truncated_2f1_form(k: int, N: int) -> Laurent:
    """Truncated 2F1 expression of lambda*_k, checked against the solved one."""
    result = form_2f1_expansion(k, N)
    if result != bargmann_lambda_star(k, N):
        raise ArithmeticError(f"truncated 2F1 form mismatch for k={k}, N={N}")
    return result
