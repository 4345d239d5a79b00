import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from krw.exact_algebra import Laurent, Matrix, Poly, parse_scalar
from krw.verify import IDENTITIES, to_jsonable, verify, verify_all


@given(st.fractions())
def test_fraction_round_trip(x):
    assert parse_scalar(json.loads(json.dumps(to_jsonable(x)))) == x


@given(st.lists(st.fractions(), min_size=1, max_size=6), st.integers(-5, 5))
def test_structured_round_trip(cs, low):
    p = Poly(cs)
    assert Poly([parse_scalar(s) for s in to_jsonable(p)]) == p
    f = Laurent(low, cs)
    d = to_jsonable(f)
    assert Laurent(d["low"], [parse_scalar(s) for s in d["coeffs"]]) == f


def test_matrix_serialization():
    assert to_jsonable(Matrix.diag([F(1, 2), 3])) == [["1/2", "0"], ["0", "3"]]
    with pytest.raises(TypeError):
        to_jsonable(0.5)


def test_identity_set_is_fixed():
    assert list(IDENTITIES) == [
        "orthogonality", "duality", "mirror", "casimir", "commutators", "eig-rep",
        "biortho-rep", "biortho-fd", "gen-bargmann", "form-2f1", "biortho-bargmann",
        "gen-bg", "gen-bg-adjoint", "mirror-gen", "biortho-bg", "kummer", "pade",
    ]


def test_verify_rejects_bad_input():
    with pytest.raises(KeyError):
        verify("nope", 3)
    with pytest.raises(ValueError):
        verify("mirror", 0)
    with pytest.raises(ValueError):
        verify_all(0)


def test_pade_report_carries_defects():
    rep = verify("pade", 2)
    assert rep.passed
    assert to_jsonable(rep.extra)["first_defects"]


def test_verify_all_5():
    reports = verify_all(5)
    assert len(reports) == 5 * len(IDENTITIES)
    assert all(r.passed for r in reports)


def test_verify_all_20():
    reports = verify_all(20)
    assert len(reports) == 20 * len(IDENTITIES)
    failed = [(r.identity, r.params) for r in reports if not r.passed]
    assert not failed
