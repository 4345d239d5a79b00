from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from krw.exact_algebra import Laurent, Matrix, Poly, binomial
from krw.krawtchouk import krawtchouk_eval, orthogonality_gram
from krw.model_bargmann import (
    bargmann_adjoint_operators,
    bargmann_adjoint_rep,
    bargmann_biorthogonality,
    bargmann_lambda,
    bargmann_lambda_star,
    bargmann_ode_residual,
    bargmann_operators,
    bargmann_rep,
    form_2f1_expansion,
    truncated_2f1_form,
)
from krw.su2_rep import build_irrep, build_star_rep, casimir, casimir_value


def test_lambda_examples():
    assert bargmann_lambda(0, 1) == Poly([1, 1])
    assert bargmann_lambda(1, 1) == Poly([1, -1])
    assert bargmann_lambda(1, 2) == Poly([1, 0, -1])


def test_lambda_star_examples_N1():
    assert bargmann_lambda_star(0, 1) == Laurent.from_terms({-1: 1, -2: 1})
    assert bargmann_lambda_star(1, 1) == Laurent.from_terms({-1: 1, -2: -1})


@pytest.mark.parametrize("N", range(1, 16))
def test_generating_function_all_k(N):
    for k in range(N + 1):
        lam = bargmann_lambda(k, N)
        assert [lam.coefficient(n) for n in range(N + 1)] == [
            binomial(N, n) * krawtchouk_eval(n, k, N) for n in range(N + 1)
        ]
        assert bargmann_ode_residual(k, N).is_zero()


def test_ode_rejects_wrong_k():
    assert not bargmann_ode_residual(0, 3, bargmann_lambda(1, 3)).is_zero()


@pytest.mark.parametrize("N", [1, 2, 6, 13])
def test_positive_side_has_no_leaks_and_is_the_irrep(N):
    ops = bargmann_operators(N)
    assert all(op.leaked == () for op in ops)
    assert bargmann_rep(N) == build_irrep(N)


@pytest.mark.parametrize("N", [1, 2, 6, 13])
def test_negative_side_leaks_and_star_basis(N):
    J0T, JpT, JmT = bargmann_adjoint_operators(N)
    assert J0T.leaked == () and JpT.leaked == (0,) and JmT.leaked == (N,)
    star = bargmann_adjoint_rep(N)
    assert star == build_star_rep(N)
    tilde = bargmann_adjoint_rep(N, normalized=False)
    for rep in (star, tilde):
        assert rep.satisfies_commutators()
        assert casimir(rep) == casimir_value(N) * Matrix.identity(N + 1)


@given(st.integers(1, 14).flatmap(lambda N: st.tuples(st.just(N), st.integers(0, N))))
def test_2f1_form_matches_solution(Nk):
    N, k = Nk
    assert truncated_2f1_form(k, N) == bargmann_lambda_star(k, N)


def test_2f1_form_small():
    assert form_2f1_expansion(0, 1) == Laurent.from_terms({-1: 1, -2: 1})


@pytest.mark.parametrize("N", [1, 2, 5, 12])
def test_biorthogonality(N):
    G = bargmann_biorthogonality(N)
    assert G.is_diagonal()
    assert G == orthogonality_gram(N)


def test_out_of_range():
    with pytest.raises(ValueError):
        bargmann_lambda(2, 1)
    with pytest.raises(ValueError):
        bargmann_operators(0)
