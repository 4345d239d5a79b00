from fractions import Fraction as F
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from krw.exact_algebra import Matrix
from krw.krawtchouk import (
    krawtchouk_eval,
    krawtchouk_table,
    mirror_check,
    normalized_pn,
    orthogonality_gram,
    orthogonality_norm,
    rec1_residual,
    rec2_residual,
)


def brute_K(n, k, N):
    """Independent oracle: 2F1(-n,-k;-N;2) with the rising factorials spelled
    out as signed falling products."""
    total = F(0)
    for j in range(min(n, k) + 1):
        num = (-1) ** j * factorial(n) // factorial(n - j) * (-1) ** j * factorial(k) // factorial(k - j)
        den = (-1) ** j * factorial(N) // factorial(N - j) * factorial(j)
        total += F(num * 2**j, den)
    return total


def test_eval_examples():
    assert all(krawtchouk_eval(0, k, 5) == 1 for k in range(6))
    assert krawtchouk_eval(1, 1, 2) == 0
    assert krawtchouk_eval(2, 1, 2) == -1


@pytest.mark.parametrize("bad", [(-1, 0, 3), (4, 0, 3), (0, 4, 3)])
def test_eval_rejects_off_lattice(bad):
    with pytest.raises(ValueError):
        krawtchouk_eval(*bad)


def test_table_small():
    assert krawtchouk_table(2).values == Matrix.from_rows([[1, 1, 1], [1, 0, -1], [1, -1, 1]])
    assert krawtchouk_table(1).values == Matrix.from_rows([[1, 1], [1, -1]])


@pytest.mark.parametrize("N", range(1, 31))
def test_table_matches_direct_sum_and_oracle(N):
    t = krawtchouk_table(N)
    for n in range(N + 1):
        for k in range(N + 1):
            assert t(n, k) == krawtchouk_eval(n, k, N)
    if N <= 12:
        assert all(t(n, k) == brute_K(n, k, N) for n in range(N + 1) for k in range(N + 1))
    assert t.values.is_symmetric()
    assert all(t(0, k) == 1 and t(k, 0) == 1 for k in range(N + 1))


def test_normalized_pn_examples():
    assert normalized_pn(0, 3, 5) == 1
    assert normalized_pn(1, 0, 2) == -1
    assert rec2_residual(1, 1, 2) == 0


@pytest.mark.parametrize("N", [1, 2, 5, 9, 16])
def test_recurrences_vanish(N):
    for n in range(N + 1):
        for k in range(N + 1):
            assert rec1_residual(n, k, N) == 0
            assert rec2_residual(n, k, N) == 0


def test_gram_small():
    assert orthogonality_gram(2) == Matrix.diag([4, 2, 4])


@pytest.mark.parametrize("N", range(1, 31))
def test_gram_diagonal(N):
    G = orthogonality_gram(N)
    assert G.is_diagonal()
    assert G[0, 1] == 0
    assert G.diagonal() == tuple(orthogonality_norm(n, N) for n in range(N + 1))
    # the norm equals 2^N / C(N, n); at n = N it is 2^N
    assert G[N, N] == 2**N
    assert all(G[n, n] == F(2**N, comb(N, n)) for n in range(N + 1))


def test_mirror_examples():
    assert [krawtchouk_table(2)(2, k) for k in range(3)] == [1, -1, 1]
    assert all(mirror_check(0, k, 2) for k in range(3))
    assert all(mirror_check(n, 0, 9) for n in range(10))
    assert all(mirror_check(n, k, 7) for n in range(8) for k in range(8))


@given(st.integers(1, 30).flatmap(lambda N: st.tuples(st.just(N), st.integers(0, N), st.integers(0, N))))
def test_mirror_property(args):
    N, n, k = args
    assert mirror_check(n, k, N)
