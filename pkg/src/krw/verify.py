"""Identity-verification harness: one named check per identity, each
producing a :class:`VerifyReport` with an exact counterexample on failure."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from . import krawtchouk as kr
from . import model_bargmann as mb
from . import model_bg as bg
from . import model_fd as fd
from . import pade_kummer as pk
from . import su2_rep as su
from .exact_algebra import Laurent, Matrix, Poly, Series, fmt, tridiagonal_null_vector

__all__ = ["VerifyReport", "IDENTITIES", "verify", "verify_all", "representations", "to_jsonable"]


@dataclass
class VerifyReport:
    identity: str
    params: dict[str, Any]
    status: str = "pass"
    counterexample: dict[str, Any] | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"identity": self.identity, "params": self.params, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = to_jsonable(self.counterexample)
        out.update(to_jsonable(self.extra))
        return out


def to_jsonable(x: Any) -> Any:
    """Fractions become "p/q" strings, plain ints stay JSON integers."""
    if isinstance(x, Fraction):
        return fmt(x)
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Poly):
        return [fmt(c) for c in x.coeffs]
    if isinstance(x, Series):
        return {"order": x.order, "coeffs": [fmt(c) for c in x.coeffs]}
    if isinstance(x, Laurent):
        return {"low": x.low, "coeffs": [fmt(c) for c in x.coeffs]}
    if isinstance(x, Matrix):
        return [[fmt(c) for c in row] for row in x.to_lists()]
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


class _Fail(Exception):
    def __init__(self, inputs: dict, expected: Any, actual: Any):
        self.cex = {"inputs": inputs, "expected": expected, "actual": actual}


def _expect(inputs: dict, expected: Any, actual: Any) -> None:
    if expected != actual:
        raise _Fail(inputs, expected, actual)


def _expect_seq(inputs: dict, expected: Sequence, actual: Sequence, label: str = "i") -> None:
    for i in range(max(len(expected), len(actual))):
        e = Fraction(expected[i]) if i < len(expected) else Fraction(0)
        a = Fraction(actual[i]) if i < len(actual) else Fraction(0)
        if e != a:
            raise _Fail({**inputs, label: i}, e, a)


def _expect_matrix(inputs: dict, expected: Matrix, actual: Matrix) -> None:
    for i in range(expected.rows):
        for j in range(expected.cols):
            if expected[i, j] != actual[i, j]:
                raise _Fail({**inputs, "row": i, "col": j}, expected[i, j], actual[i, j])


def _diag_gram(N: int) -> Matrix:
    return Matrix.diag([kr.orthogonality_norm(n, N) for n in range(N + 1)])


def representations(N: int) -> dict[str, su.RepMatrices]:
    """Every matrix realization built here, keyed by model/basis."""
    return {
        "plain": su.build_irrep(N),
        "tilde": su.build_tilde_rep(N),
        "star": su.build_star_rep(N),
        "fd": fd.fd_operators(N),
        "bargmann": mb.bargmann_rep(N),
        "bargmann-adjoint": mb.bargmann_adjoint_rep(N, normalized=False),
        "bargmann-adjoint-star": mb.bargmann_adjoint_rep(N, normalized=True),
        "bg": bg.bg_rep(N),
        "bg-adjoint": bg.bg_adjoint_rep(N),
    }


# --- individual checks ------------------------------------------------------

def _orthogonality(N: int, **_) -> dict:
    _expect_matrix({"N": N}, _diag_gram(N), kr.orthogonality_gram(N))
    return {}


def _duality(N: int, **_) -> dict:
    t = kr.krawtchouk_table(N)
    for n in range(N + 1):
        for k in range(N + 1):
            _expect({"N": N, "n": n, "k": k, "check": "recurrence vs direct sum"}, kr.krawtchouk_eval(n, k, N), t(n, k))
            _expect({"N": N, "n": n, "k": k, "check": "K_n(k) = K_k(n)"}, t(k, n), t(n, k))
    return {}


def _mirror(N: int, **_) -> dict:
    t = kr.krawtchouk_table(N)
    for n in range(N + 1):
        for k in range(N + 1):
            _expect({"N": N, "n": n, "k": k}, (-1) ** k * t(n, k), t(N - n, k))
    return {}


def _casimir(N: int, **_) -> dict:
    target = su.casimir_value(N) * Matrix.identity(N + 1)
    for name, rep in representations(N).items():
        _expect_matrix({"N": N, "model": name}, target, su.casimir(rep))
    return {}


def _commutators(N: int, **_) -> dict:
    zero = Matrix.zeros(N + 1)
    for name, rep in representations(N).items():
        for rel, m in rep.commutator_defects().items():
            _expect_matrix({"N": N, "model": name, "relation": rel}, zero, m)
    # the hand truncations, per model and side
    leaks = {
        "bargmann": [op.leaked for op in mb.bargmann_operators(N)],
        "bargmann-adjoint": [op.leaked for op in mb.bargmann_adjoint_operators(N)],
        "bg": [op.leaked for op in bg.bg_operators(N)],
        "bg-adjoint": [op.leaked for op in bg.bg_adjoint_operators(N)],
    }
    expected = {
        "bargmann": [(), (), ()],
        "bargmann-adjoint": [(), (0,), (N,)],
        "bg": [(), (N,), ()],
        "bg-adjoint": [(), (0,), ()],
    }
    for name in leaks:
        _expect({"N": N, "model": name, "check": "truncated columns (J0, J+, J-)"}, expected[name], leaks[name])
    return {}


def _closed_C(k: int, N: int) -> list[Fraction]:
    t = kr.krawtchouk_table(N)
    return [kr.binomial(N, n) * t(n, k) for n in range(N + 1)]


def _eigen_residual(m: Matrix, v: Sequence[Fraction], value: Fraction) -> list[Fraction]:
    return [a - value * b for a, b in zip(m @ v, v)]


def _eig_rep(N: int, **_) -> dict:
    t = kr.krawtchouk_table(N)
    plain, tilde = su.build_irrep(N), su.build_tilde_rep(N)
    for k in range(N + 1):
        value = Fraction(2 * k - N, 2)
        inp = {"N": N, "k": k}
        v = tridiagonal_null_vector(plain.X, value)
        _expect_seq({**inp, "check": "X C = (k - N/2) C"}, [0] * (N + 1), _eigen_residual(plain.X, v, value), "n")
        _expect_seq({**inp, "check": "C_n = C(N,n) K_n(k)"}, _closed_C(k, N), v, "n")
        w = tridiagonal_null_vector(tilde.X, value)
        _expect_seq({**inp, "check": "X^T C* = (k - N/2) C*"}, [0] * (N + 1), _eigen_residual(tilde.X, w, value), "n")
        _expect_seq({**inp, "check": "C*_n = K_n(k)"}, [t(n, k) for n in range(N + 1)], w, "n")
        for n in range(N + 1):
            _expect({**inp, "n": n, "check": "derived coefficient recurrence"}, 0, su.derived_recCn_residual(n, k, N))
    cex = su.find_printed_recCn_counterexample(max(N, 2))
    return {"printed_form": {"holds": cex is None, "counterexample": cex}}


def _biortho_rep(N: int, **_) -> dict:
    _expect_matrix({"N": N}, _diag_gram(N), su.biorthogonality_gram(N))
    return {}


def _biortho_fd(N: int, **_) -> dict:
    t = kr.krawtchouk_table(N)
    for k in range(N + 1):
        _expect_seq({"N": N, "k": k, "check": "lambda_k(s)"}, _closed_C(k, N), fd.fd_lambda(k, N).values, "s")
        _expect_seq({"N": N, "k": k, "check": "lambda*_k(s)"}, t.row(k), fd.fd_lambda_star(k, N).values, "s")
        for s in range(N + 1):
            _expect({"N": N, "k": k, "s": s, "check": "derived adjoint difference equation"}, 0,
                    fd.adjoint_difference_residual(k, N, s))
    _expect_matrix({"N": N}, _diag_gram(N), fd.fd_biorthogonality(N))
    cex = fd.find_printed_diff2_counterexample(max(N, 2))
    return {"printed_form": {"holds": cex is None, "counterexample": cex}}


def _gen_bargmann(N: int, **_) -> dict:
    for k in range(N + 1):
        inp = {"N": N, "k": k}
        closed = mb.lambda_closed_form(k, N)
        _expect_seq({**inp, "check": "(1-z)^k (1+z)^(N-k) = sum C(N,n) K_n(k) z^n"},
                    mb.lambda_sum_form(k, N).coeffs, closed.coeffs, "n")
        res = mb.bargmann_ode_residual(k, N, closed)
        _expect({**inp, "check": "ODE residual"}, Laurent(0, [0]), res)
        _expect_seq({**inp, "check": "eigenfunction of (J+ + J-)/2"}, closed.coeffs, mb.bargmann_lambda(k, N).coeffs, "n")
    return {}


def _form_2f1(N: int, **_) -> dict:
    for k in range(N + 1):
        expected = mb.lambda_star_sum_form(k, N)
        got = mb.form_2f1_expansion(k, N)
        _expect_seq({"N": N, "k": k, "check": "truncated 2F1 vs sum K_n(k) z^(-1-n)"},
                    [expected.coefficient(-1 - n) for n in range(N + 1)],
                    [got.coefficient(-1 - n) for n in range(N + 1)], "n")
        solved = mb.bargmann_lambda_star(k, N)
        _expect({"N": N, "k": k, "check": "projected eigenproblem solution"}, expected, solved)
    return {}


def _biortho_bargmann(N: int, **_) -> dict:
    _expect_matrix({"N": N}, _diag_gram(N), mb.bargmann_biorthogonality(N))
    return {}


def _gen_bg(N: int, **_) -> dict:
    for k in range(N + 1):
        inp = {"N": N, "k": k}
        _expect_seq({**inp, "check": "[e^-z 1F1(-k;-N;2z)]_N = sum (-1)^n K_n(k) z^n/n!"},
                    bg.lambda_sum_form(k, N).coeffs, bg.lambda_closed_form(k, N).coeffs, "n")
        s = bg.mirror_generating_sides(k, N)
        _expect_seq({**inp, "check": "[e^z 1F1(-k;-N;-2z)]_N = sum K_n(k) z^n/n!"},
                    s["sum K_n(k) z^n/n!"].coeffs, s["e^z 1F1(-k;-N;-2z)"].coeffs, "n")
        _expect({**inp, "check": "solved eigenfunction"}, bg.lambda_sum_form(k, N), bg.bg_lambda(k, N))
    return {}


def _gen_bg_adjoint(N: int, **_) -> dict:
    for k in range(N + 1):
        inp = {"N": N, "k": k}
        a, b = bg.lambda_star_sum_form(k, N), bg.lambda_star_closed_form(k, N)
        _expect_seq({**inp, "check": "sum form vs closed form"},
                    [a.coefficient(-1 - n) for n in range(N + 1)],
                    [b.coefficient(-1 - n) for n in range(N + 1)], "n")
        _expect({**inp, "check": "solved adjoint eigenfunction"}, a, bg.bg_lambda_star(k, N))
    return {}


def _mirror_gen(N: int, **_) -> dict:
    for k in range(N + 1):
        s = bg.mirror_generating_sides(k, N)
        lhs = s["e^-z 1F1(k-N;-N;2z)"]
        inp = {"N": N, "k": k}
        _expect_seq({**inp, "check": "mirrored generating function"},
                    s["sum K_{N-n}(k) z^n/n!"].coeffs, (lhs * (-1) ** k).coeffs, "n")
        _expect_seq({**inp, "check": "recast generating function"}, s["sum K_n(k) z^n/n!"].coeffs, lhs.coeffs, "n")
        _expect_seq({**inp, "check": "two truncated 1F1 forms agree"}, s["e^z 1F1(-k;-N;-2z)"].coeffs, lhs.coeffs, "n")
    return {}


def _biortho_bg(N: int, **_) -> dict:
    _expect_matrix({"N": N}, _diag_gram(N), bg.bg_biorthogonality(N))
    return {}


def _kummer(N: int, a: int | None = None, **_) -> dict:
    values = [a] if a is not None else list(range(-N, 1)) + [1, 2, 3]
    for av in values:
        r = pk.kummer_residual(av, N)
        _expect_seq({"N": N, "a": av}, [0] * (N + 1), r.coeffs, "j")
    return {}


def _pade(N: int, n: int | None = None, m: int | None = None, **_) -> dict:
    if n is not None and m is not None:
        pairs = [(n, m)]
    else:
        pairs = [(i, N - i) for i in range(N + 1)]
    defects = []
    for i, j in pairs:
        r = pk.pade_residual(i, j)
        _expect_seq({"n": i, "m": j, "check": "e^z den - num vanishes through z^(n+m)"}, [0] * (i + j + 1),
                    r.coeffs[: i + j + 1], "j")
        idx, val = pk.pade_order_first_defect(i, j)
        _expect({"n": i, "m": j, "check": "first defect index"}, i + j + 1, idx)
        defects.append([i, j, idx, val])
    return {"first_defects": defects}


IDENTITIES: dict[str, Callable[..., dict]] = {
    "orthogonality": _orthogonality,
    "duality": _duality,
    "mirror": _mirror,
    "casimir": _casimir,
    "commutators": _commutators,
    "eig-rep": _eig_rep,
    "biortho-rep": _biortho_rep,
    "biortho-fd": _biortho_fd,
    "gen-bargmann": _gen_bargmann,
    "form-2f1": _form_2f1,
    "biortho-bargmann": _biortho_bargmann,
    "gen-bg": _gen_bg,
    "gen-bg-adjoint": _gen_bg_adjoint,
    "mirror-gen": _mirror_gen,
    "biortho-bg": _biortho_bg,
    "kummer": _kummer,
    "pade": _pade,
}


def verify(identity: str, N: int, **opts) -> VerifyReport:
    if identity not in IDENTITIES:
        raise KeyError(identity)
    if N < 1:
        raise ValueError("N must be >= 1")
    params = {"N": N, **{k: v for k, v in opts.items() if v is not None}}
    report = VerifyReport(identity, params)
    try:
        report.extra = IDENTITIES[identity](N, **opts)
    except _Fail as f:
        report.status = "fail"
        report.counterexample = f.cex
    except ArithmeticError as e:
        # raised by a model's own internal cross-check
        report.status = "fail"
        report.counterexample = {"inputs": params, "expected": "consistent", "actual": str(e)}
    return report


def verify_all(n_max: int, identities: Iterable[str] | None = None) -> list[VerifyReport]:
    """One report per (identity, N), sorted by identity then N."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    names = sorted(identities if identities is not None else IDENTITIES)
    return [verify(name, N) for name in names for N in range(1, n_max + 1)]
