from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from krw.exact_algebra import (
    Laurent,
    Matrix,
    Poly,
    Series,
    binomial,
    fmt,
    parse_scalar,
    pochhammer,
    poly_mul,
    poly_pow,
    residue_pair,
    series_exp,
    series_mul,
    to_scalar,
    tridiagonal_null_vector,
)

fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
small_polys = st.lists(fractions, min_size=1, max_size=6).map(Poly)
small_laurents = st.builds(Laurent, st.integers(-6, 6), st.lists(fractions, min_size=1, max_size=5))


@pytest.mark.parametrize("N,k,expected", [(4, 2, 6), (5, 0, 1), (3, 5, 0), (3, -1, 0), (10, 3, 120)])
def test_binomial(N, k, expected):
    assert binomial(N, k) == expected


@pytest.mark.parametrize(
    "a,n,expected",
    [(-3, 2, 6), (-3, 4, 0), (F(1, 2), 0, 1), (-5, 3, -60), (F(1, 2), 2, F(3, 4))],
)
def test_pochhammer(a, n, expected):
    assert pochhammer(a, n) == expected


def test_pochhammer_negative_N_identity():
    # (-N)_n = (-1)^n N!/(N-n)!
    for N in range(1, 12):
        for n in range(N + 1):
            assert pochhammer(-N, n) == (-1) ** n * pochhammer(N - n + 1, n)


@given(fractions, st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_splits(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


def test_poly_pow_and_zero_form():
    assert poly_pow([1, -1], 2) == Poly([1, -2, 1])
    assert Poly([0, 0, 0]).coeffs == (0,)
    assert Poly([0]).degree == 0
    assert Poly([1, 2, 0, 0]).degree == 1
    assert poly_pow(Poly([1, 1]), 0) == Poly([1])


@given(small_polys, small_polys, small_polys)
def test_poly_ring_laws(p, q, r):
    assert poly_mul(p, q) == poly_mul(q, p)
    assert poly_mul(p, q + r) == poly_mul(p, q) + poly_mul(p, r)
    assert (p * q)(F(3, 7)) == p(F(3, 7)) * q(F(3, 7))


def test_series_exp_and_inverse_pair():
    assert series_exp(3).coeffs == (1, 1, F(1, 2), F(1, 6))
    assert series_mul(series_exp(2), series_exp(2, -1)).coeffs == (1, 0, 0)


@given(st.integers(0, 15), st.integers(0, 15))
def test_series_exp_truncation(M, Mp):
    lo, hi = sorted((M, Mp))
    assert series_exp(hi).truncate(lo) == series_exp(lo)


def test_series_mul_order_is_min():
    a = Series(5, [1, 2, 3])
    b = Series(2, [1, 1])
    assert series_mul(a, b).order == 2
    with pytest.raises(IndexError):
        series_mul(a, b).coefficient(3)


def test_residue_pair_examples():
    one_plus_z = Poly([1, 1])
    one_minus_z = Poly([1, -1])
    g = Laurent(-2, [1, 1])  # z^-2 + z^-1
    assert residue_pair(one_plus_z, g) == 2
    assert residue_pair(one_minus_z, g) == 0


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_residue_pair_monomials(a, b):
    assert residue_pair(Laurent.monomial(a), Laurent.monomial(b)) == (1 if a + b == -1 else 0)


@given(small_laurents, small_laurents, small_laurents, fractions)
def test_residue_pair_bilinear(f, g, h, c):
    assert residue_pair(f + g, h) == residue_pair(f, h) + residue_pair(g, h)
    assert residue_pair(c * f, h) == c * residue_pair(f, h)
    assert residue_pair(f, g) == residue_pair(g, f)


def test_laurent_canonical_form():
    f = Laurent(-3, [0, 0, 1, 2, 0])
    assert (f.low, f.coeffs) == (-1, (1, 2))
    assert Laurent(-2, [0, 0]).is_zero()
    assert Laurent(4, [0]) == Laurent(0, [0])


@given(fractions)
def test_fmt_round_trip(q):
    assert parse_scalar(fmt(q)) == q


def test_fmt_forms():
    assert fmt(F(-1, 12)) == "-1/12"
    assert fmt(F(6, 3)) == "2"
    assert fmt(0) == "0"


def test_floats_rejected():
    with pytest.raises(TypeError):
        to_scalar(0.5)


def test_matrix_basics():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert a.T == Matrix.from_rows([[1, 3], [2, 4]])
    assert a @ Matrix.identity(2) == a
    assert a @ (1, 1) == (3, 7)
    assert (a - a).is_zero()
    assert Matrix.diag([1, 2]).is_diagonal() and not a.is_diagonal()
    with pytest.raises(ValueError):
        Matrix(2, 2, (F(1),))


def test_tridiagonal_null_vector():
    x = Matrix.from_rows([[0, F(-1, 2)], [F(-1, 2), 0]])
    assert tridiagonal_null_vector(x, F(-1, 2)) == (1, 1)
    assert tridiagonal_null_vector(x, F(1, 2)) == (1, -1)
    with pytest.raises(ValueError):
        tridiagonal_null_vector(Matrix.from_rows([[0, 0, 1], [0, 0, 0], [1, 0, 0]]), 0)
