"""Barut-Girardello model:

    J0 = z d - N/2,  J+ = z,  J- = -z d^2 + N d,

on the hatted basis z^n / (-N)_n, and the adjoints

    J0^T = -z d - N/2 - 1,  J+^T = z,  J-^T = -z d^2 - (N+2) d,

on (-1)^n n! z^(-1-n).  Each side needs exactly one hand truncation
(J+ at n = N, J+^T at n = 0); ``PolySpaceOperator.leaked`` records it.
"""
from __future__ import annotations

from fractions import Fraction

from .diffop import D, DiffOp, PolySpaceOperator, Z, operator_on_basis
from .exact_algebra import (
    Laurent,
    Matrix,
    Poly,
    factorial,
    pochhammer,
    residue_pair,
    series_exp,
    series_mul,
    tridiagonal_null_vector,
)
from .krawtchouk import krawtchouk_table
from .pade_kummer import truncated_1f1
from .su2_rep import RepMatrices

__all__ = [
    "bg_generators",
    "bg_adjoint_generators",
    "bg_operators",
    "bg_adjoint_operators",
    "bg_rep",
    "bg_adjoint_rep",
    "bg_lambda",
    "bg_ode_residual",
    "bg_lambda_star",
    "bg_adjoint_ode_residual",
    "bg_biorthogonality",
    "gen1f1_check",
    "lambda_sum_form",
    "lambda_closed_form",
    "lambda_star_sum_form",
    "lambda_star_closed_form",
    "mirror_generating_check",
    "mirror_generating_sides",
]


def _check(N: int, k: int | None = None) -> None:
    if N < 1:
        raise ValueError("N must be >= 1")
    if k is not None and not 0 <= k <= N:
        raise ValueError(f"k = {k} is outside 0..{N}")


def bg_generators(N: int) -> tuple[DiffOp, DiffOp, DiffOp]:
    return Z() * D() - Fraction(N, 2), Z(), -(Z() * D(2)) + N * D()


def bg_adjoint_generators(N: int) -> tuple[DiffOp, DiffOp, DiffOp]:
    return -(Z() * D()) - Fraction(N, 2) - 1, Z(), -(Z() * D(2)) - (N + 2) * D()


def bg_operators(N: int) -> tuple[PolySpaceOperator, PolySpaceOperator, PolySpaceOperator]:
    _check(N)
    exps = list(range(N + 1))
    norms = [1 / pochhammer(-N, n) for n in range(N + 1)]
    return tuple(operator_on_basis(op, N, exps, norms) for op in bg_generators(N))


def bg_adjoint_operators(N: int) -> tuple[PolySpaceOperator, PolySpaceOperator, PolySpaceOperator]:
    _check(N)
    exps = [-1 - n for n in range(N + 1)]
    norms = [(-1) ** n * factorial(n) for n in range(N + 1)]
    return tuple(
        operator_on_basis(op, N, exps, norms, basis_kind="negative") for op in bg_adjoint_generators(N)
    )


def bg_rep(N: int) -> RepMatrices:
    J0, Jp, Jm = bg_operators(N)
    return RepMatrices(N, J0.matrix, Jp.matrix, Jm.matrix, "plain")


def bg_adjoint_rep(N: int) -> RepMatrices:
    """Adjoints on the hatted negative basis, J-^T in the raising slot."""
    J0T, JpT, JmT = bg_adjoint_operators(N)
    return RepMatrices(N, J0T.matrix, JmT.matrix, JpT.matrix, "star")


def lambda_sum_form(k: int, N: int) -> Poly:
    t = krawtchouk_table(N)
    return Poly([(-1) ** n * t(n, k) / factorial(n) for n in range(N + 1)])


def lambda_closed_form(k: int, N: int) -> Poly:
    """[e^-z 1F1(-k; -N; 2z)]_N."""
    return series_mul(series_exp(N, -1), truncated_1f1(-k, N, 2).coeffs).to_poly()


def lambda_star_closed_form(k: int, N: int) -> Laurent:
    """(-1)^(N-k) N! z^(-1-N) [e^z 1F1(k-N; -N; -2z)]_N."""
    trunc = series_mul(series_exp(N), truncated_1f1(k - N, N, -2).coeffs)
    return Laurent(-1 - N, trunc.coeffs) * ((-1) ** (N - k) * factorial(N))


def bg_ode_residual(k: int, N: int, f: Poly | None = None) -> Laurent:
    """[-z d^2 + N d + (z + N - 2k)] f, by default f = hat-lambda_k.

    The hand truncation of J+ shows up as a single surviving z^(N+1) term.
    """
    f = lambda_sum_form(k, N) if f is None else f
    op = -(Z() * D(2)) + N * D() + Z() + (N - 2 * k)
    return op.apply(f.to_laurent())


def bg_lambda(k: int, N: int) -> Poly:
    """hat-lambda_k = sum ((-1)^n / n!) K_n(k) z^n = [e^-z 1F1(-k; -N; 2z)]_N.

    Both forms are built and compared, and the coefficients are also solved
    from the hatted-basis matrix of J+ + J-.
    """
    _check(N, k)
    by_sum = lambda_sum_form(k, N)
    if by_sum != lambda_closed_form(k, N):
        raise ArithmeticError(f"hat-lambda mismatch for k={k}, N={N}")
    _, Jp, Jm = bg_operators(N)
    X = Fraction(1, 2) * (Jp.matrix + Jm.matrix)
    value = Fraction(2 * k - N, 2)
    Dn = tridiagonal_null_vector(X, value)
    if any(a - value * b for a, b in zip(X @ Dn, Dn)):
        raise ArithmeticError(f"eigen-residual nonzero for k={k}, N={N}")
    if Poly([d / pochhammer(-N, n) for n, d in enumerate(Dn)]) != by_sum:
        raise ArithmeticError(f"hatted coefficients mismatch for k={k}, N={N}")
    res = bg_ode_residual(k, N, by_sum)
    if res != Laurent.monomial(N + 1, by_sum.coefficient(N)):
        raise ArithmeticError(f"ODE residual not confined to z^(N+1) for k={k}, N={N}")
    return by_sum


def lambda_star_sum_form(k: int, N: int) -> Laurent:
    t = krawtchouk_table(N)
    return Laurent.from_terms(
        {-1 - n: (-1) ** n * factorial(N) / factorial(N - n) * t(n, k) for n in range(N + 1)}
    )


def bg_adjoint_ode_residual(k: int, N: int, f: Laurent | None = None) -> Laurent:
    """[-z d^2 - (N+2) d + (z + N - 2k)] f, by default f = hat-lambda*_k.

    Only a z^0 term survives, from the truncation of J+^T at n = 0.
    """
    f = lambda_star_sum_form(k, N) if f is None else f
    op = -(Z() * D(2)) - (N + 2) * D() + Z() + (N - 2 * k)
    return op.apply(f)


def bg_lambda_star(k: int, N: int) -> Laurent:
    """hat-lambda*_k = sum (-1)^n N!/(N-n)! K_n(k) z^(-1-n)
                    = (-1)^(N-k) N! z^(-1-N) [e^z 1F1(k-N; -N; -2z)]_N."""
    _check(N, k)
    by_sum = lambda_star_sum_form(k, N)
    if by_sum != lambda_star_closed_form(k, N):
        raise ArithmeticError(f"hat-lambda* forms disagree for k={k}, N={N}")
    _, JpT, JmT = bg_adjoint_operators(N)
    X = Fraction(1, 2) * (JpT.matrix + JmT.matrix)
    value = Fraction(2 * k - N, 2)
    C = tridiagonal_null_vector(X, value)
    if any(a - value * b for a, b in zip(X @ C, C)):
        raise ArithmeticError(f"adjoint eigen-residual nonzero for k={k}, N={N}")
    from_basis = Laurent.from_terms({-1 - n: c * (-1) ** n * factorial(n) for n, c in enumerate(C)})
    if from_basis != by_sum:
        raise ArithmeticError(f"adjoint hatted coefficients mismatch for k={k}, N={N}")
    res = bg_adjoint_ode_residual(k, N, by_sum)
    if not set(res.terms()) <= {0}:
        raise ArithmeticError(f"adjoint ODE residual not confined to z^0 for k={k}, N={N}")
    return by_sum


def bg_biorthogonality(N: int) -> Matrix:
    _check(N)
    lam = [bg_lambda(k, N) for k in range(N + 1)]
    lam_star = [bg_lambda_star(l, N) for l in range(N + 1)]
    return Matrix.from_rows([[residue_pair(lam[k], lam_star[l]) for l in range(N + 1)] for k in range(N + 1)])


def mirror_generating_sides(k: int, N: int) -> dict[str, Poly]:
    """The truncated series entering the mirror-reflected generating identities."""
    _check(N, k)
    t = krawtchouk_table(N)
    return {
        "e^-z 1F1(k-N;-N;2z)": series_mul(series_exp(N, -1), truncated_1f1(k - N, N, 2).coeffs).to_poly(),
        "e^z 1F1(-k;-N;-2z)": series_mul(series_exp(N), truncated_1f1(-k, N, -2).coeffs).to_poly(),
        "sum K_{N-n}(k) z^n/n!": Poly([t(N - n, k) / factorial(n) for n in range(N + 1)]),
        "sum K_n(k) z^n/n!": Poly([t(n, k) / factorial(n) for n in range(N + 1)]),
    }


def gen1f1_check(k: int, N: int) -> bool:
    """[e^z 1F1(-k; -N; -2z)]_N == sum K_n(k) z^n / n!."""
    s = mirror_generating_sides(k, N)
    return s["e^z 1F1(-k;-N;-2z)"] == s["sum K_n(k) z^n/n!"]


def mirror_generating_check(k: int, N: int) -> bool:
    """Mirrored generating function, its recast form, and the agreement of
    the two truncated 1F1 expressions, all as exact coefficient identities."""
    s = mirror_generating_sides(k, N)
    lhs = s["e^-z 1F1(k-N;-N;2z)"]
    mirrored = lhs * (-1) ** k == s["sum K_{N-n}(k) z^n/n!"]
    recast = lhs == s["sum K_n(k) z^n/n!"]
    kummer = lhs == s["e^z 1F1(-k;-N;-2z)"]
    return mirrored and recast and kummer
