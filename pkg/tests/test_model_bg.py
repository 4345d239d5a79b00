from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, strategies as st

from krw.exact_algebra import Laurent, Matrix, Poly
from krw.krawtchouk import krawtchouk_eval, orthogonality_gram
from krw.model_bargmann import bargmann_biorthogonality
from krw.model_bg import (
    bg_adjoint_ode_residual,
    bg_adjoint_operators,
    bg_adjoint_rep,
    bg_biorthogonality,
    bg_lambda,
    bg_lambda_star,
    bg_ode_residual,
    bg_operators,
    bg_rep,
    gen1f1_check,
    mirror_generating_check,
    mirror_generating_sides,
)
from krw.su2_rep import casimir, casimir_value

lattice = st.integers(1, 14).flatmap(lambda N: st.tuples(st.just(N), st.integers(0, N)))


def test_lambda_examples():
    assert bg_lambda(1, 2) == Poly([1, 0, F(-1, 2)])
    assert bg_lambda(0, 1) == Poly([1, -1])


def test_lambda_star_example():
    assert bg_lambda_star(0, 1) == Laurent.from_terms({-1: 1, -2: -1})


@given(lattice)
def test_hatted_coefficients(Nk):
    N, k = Nk
    lam = bg_lambda(k, N)
    assert [lam.coefficient(n) for n in range(N + 1)] == [
        F((-1) ** n, factorial(n)) * krawtchouk_eval(n, k, N) for n in range(N + 1)
    ]
    star = bg_lambda_star(k, N)
    for n in range(N + 1):
        assert star.coefficient(-1 - n) == (-1) ** n * F(factorial(N), factorial(N - n)) * krawtchouk_eval(n, k, N)


@given(lattice)
def test_ode_residuals_confined(Nk):
    N, k = Nk
    lam = bg_lambda(k, N)
    assert bg_ode_residual(k, N) == Laurent.monomial(N + 1, lam.coefficient(N))
    assert set(bg_adjoint_ode_residual(k, N).terms()) <= {0}


@pytest.mark.parametrize("N", [1, 3, 8, 15])
def test_declared_truncations(N):
    J0, Jp, Jm = bg_operators(N)
    assert (J0.leaked, Jp.leaked, Jm.leaked) == ((), (N,), ())
    J0T, JpT, JmT = bg_adjoint_operators(N)
    assert (J0T.leaked, JpT.leaked, JmT.leaked) == ((), (0,), ())
    for rep in (bg_rep(N), bg_adjoint_rep(N)):
        assert rep.satisfies_commutators()
        assert casimir(rep) == casimir_value(N) * Matrix.identity(N + 1)


@given(lattice)
def test_generating_identities(Nk):
    N, k = Nk
    assert gen1f1_check(k, N)
    assert mirror_generating_check(k, N)


def test_mirror_sides_small():
    s = mirror_generating_sides(0, 2)
    assert s["sum K_n(k) z^n/n!"] == Poly([1, 1, F(1, 2)])
    assert s["sum K_{N-n}(k) z^n/n!"] == s["sum K_n(k) z^n/n!"]


@pytest.mark.parametrize("N", [1, 2, 7, 12])
def test_biorthogonality_agrees_across_models(N):
    G = bg_biorthogonality(N)
    assert G.is_diagonal()
    assert G == bargmann_biorthogonality(N) == orthogonality_gram(N)
