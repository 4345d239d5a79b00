from fractions import Fraction as F
from math import comb

import pytest

from krw.exact_algebra import Matrix
from krw.krawtchouk import krawtchouk_table, orthogonality_gram
from krw.su2_rep import (
    biorthogonality_gram,
    build_irrep,
    build_star_rep,
    build_tilde_rep,
    casimir,
    casimir_value,
    derived_recCn_residual,
    find_printed_recCn_counterexample,
    printed_recCn_residual,
    star_from_conjugation,
    x_adjoint_eigenvector,
    x_eigenvector,
)


def test_irrep_N1():
    r = build_irrep(1)
    assert r.J0 == Matrix.diag([F(-1, 2), F(1, 2)])
    assert r.Jp @ (1, 0) == (0, -1)
    assert r.Jp @ (0, 1) == (0, 0)
    assert r.Jm @ (0, 1) == (-1, 0)


def test_highest_and_lowest_weight_columns():
    r = build_irrep(5)
    assert not any(r.Jp.col(5))
    assert not any(r.Jm.col(0))


@pytest.mark.parametrize("N", range(1, 31))
@pytest.mark.parametrize("builder", [build_irrep, build_tilde_rep, build_star_rep])
def test_commutators_and_casimir(N, builder):
    rep = builder(N)
    assert rep.satisfies_commutators()
    assert casimir(rep) == casimir_value(N) * Matrix.identity(N + 1)


@pytest.mark.parametrize("N,value", [(1, F(3, 4)), (2, 2), (10, 30)])
def test_casimir_values(N, value):
    assert casimir(build_irrep(N)) == value * Matrix.identity(N + 1)


def test_star_rep_actions_N1():
    s = build_star_rep(1)
    J0T, JpT, JmT = s.transposed_generators()
    assert JpT @ (0, 1) == (-1, 0)
    assert JpT @ (1, 0) == (0, 0)
    assert JmT @ (1, 0) == (0, -1)


@pytest.mark.parametrize("N", [1, 2, 3, 7])
def test_star_is_rescaled_transpose(N):
    assert star_from_conjugation(N) == build_star_rep(N)


def test_tilde_is_literal_transpose():
    p, t = build_irrep(4), build_tilde_rep(4)
    J0T, JpT, JmT = t.transposed_generators()
    assert (J0T, JpT, JmT) == (p.J0.T, p.Jp.T, p.Jm.T)
    with pytest.raises(ValueError):
        p.transposed_generators()


@pytest.mark.parametrize(
    "k,N,vector,value",
    [(0, 1, (1, 1), F(-1, 2)), (1, 1, (1, -1), F(1, 2)), (1, 2, (1, 0, -1), 0)],
)
def test_x_eigenvector_examples(k, N, vector, value):
    pair = x_eigenvector(k, N)
    assert pair.vector == vector and pair.value == value


@pytest.mark.parametrize("k,N,vector", [(0, 1, (1, 1)), (2, 2, (1, -1, 1))])
def test_x_adjoint_examples(k, N, vector):
    assert x_adjoint_eigenvector(k, N).vector == vector


@pytest.mark.parametrize("N", range(1, 21))
def test_eigenvectors_match_closed_forms(N):
    t = krawtchouk_table(N)
    plain, tilde = build_irrep(N), build_tilde_rep(N)
    for k in range(N + 1):
        C = x_eigenvector(k, N)
        assert C.vector == tuple(comb(N, n) * t(n, k) for n in range(N + 1))
        assert plain.X @ C.vector == tuple(C.value * c for c in C.vector)
        Cs = x_adjoint_eigenvector(k, N)
        assert Cs.vector == tuple(t(n, k) for n in range(N + 1))
        assert tilde.X @ Cs.vector == tuple(Cs.value * c for c in Cs.vector)


def test_spectrum_of_X_equals_J0():
    N = 6
    vals = sorted(x_eigenvector(k, N).value for k in range(N + 1))
    assert vals == sorted(build_irrep(N).J0.diagonal())


def test_out_of_range_k():
    with pytest.raises(ValueError):
        x_eigenvector(3, 2)
    with pytest.raises(ValueError):
        x_adjoint_eigenvector(-1, 2)


def test_biorthogonality():
    assert biorthogonality_gram(2) == Matrix.diag([4, 2, 4])
    assert biorthogonality_gram(10).is_diagonal()
    assert biorthogonality_gram(6) == orthogonality_gram(6)


def test_coefficient_recurrence_printed_vs_derived():
    for N in range(1, 8):
        for k in range(N + 1):
            for n in range(N + 1):
                assert derived_recCn_residual(n, k, N) == 0
    assert printed_recCn_residual(1, 0, 1) == -1
    cex = find_printed_recCn_counterexample()
    assert cex["inputs"] == {"N": 1, "k": 0, "n": 1}
    assert (cex["expected"], cex["actual"], cex["corrected_residual"]) == (1, 2, 0)
