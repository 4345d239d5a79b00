"""``krw`` command-line front end.

Exit codes: 0 success/pass, 1 identity failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import model_bargmann as mb
from . import model_bg as bg
from . import model_fd as fd
from .exact_algebra import Laurent, fmt
from .krawtchouk import krawtchouk_eval, krawtchouk_table
from .pade_kummer import pade_exp, pade_order_first_defect
from .su2_rep import x_adjoint_eigenvector, x_eigenvector
from .verify import IDENTITIES, to_jsonable, verify, verify_all

DEFAULT_NMAX = 12


class _UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(to_jsonable(obj), separators=(",", ":"))


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise _UsageError(f"{args.command} requires {' '.join(missing)}")


def _laurent_json(f: Laurent) -> dict:
    return {"low": f.low, "coeffs": [fmt(c) for c in f.coeffs]}


def _cmd_eval(args, out) -> int:
    _need(args, "n", "k", "N")
    out.write(_dump(krawtchouk_eval(args.n, args.k, args.N)) + "\n")
    return 0


def _cmd_table(args, out) -> int:
    _need(args, "N")
    rows = [[fmt(c) for c in row] for row in krawtchouk_table(args.N).values.to_lists()]
    if args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        out.write(buf.getvalue())
    else:
        out.write(json.dumps(rows, separators=(",", ":")) + "\n")
    return 0


def _cmd_eigvec(args, out) -> int:
    _need(args, "k", "N")
    pair = (x_adjoint_eigenvector if args.adjoint else x_eigenvector)(args.k, args.N)
    out.write(_dump({"eigenvalue": pair.value, "coefficients": list(pair.vector)}) + "\n")
    return 0


def _cmd_model(args, out) -> int:
    _need(args, "k", "N")
    k, N = args.k, args.N
    if args.target == "fd":
        payload = {
            "model": "fd",
            "lambda": list(fd.fd_lambda(k, N).values),
            "lambda_star": list(fd.fd_lambda_star(k, N).values),
        }
    elif args.target == "bargmann":
        payload = {
            "model": "bargmann",
            "lambda": list(mb.bargmann_lambda(k, N).coeffs),
            "lambda_star": _laurent_json(mb.bargmann_lambda_star(k, N)),
        }
    else:
        payload = {
            "model": "bg",
            "lambda": list(bg.bg_lambda(k, N).coeffs),
            "lambda_star": _laurent_json(bg.bg_lambda_star(k, N)),
        }
    out.write(_dump(payload) + "\n")
    return 0


def _cmd_pade(args, out) -> int:
    _need(args, "n", "m")
    p = pade_exp(args.n, args.m)
    idx, val = pade_order_first_defect(args.n, args.m)
    payload = {
        "numerator": list(p.numerator.coeffs),
        "denominator": list(p.denominator.coeffs),
        "contact_order": idx - 1,
        "first_defect": [idx, val],
    }
    out.write(_dump(payload) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    name = args.target
    if name not in IDENTITIES:
        raise _UsageError(f"unknown identity {name!r}; valid names: {', '.join(IDENTITIES)}")
    if name == "pade" and args.N is None:
        _need(args, "n", "m")
        N = args.n + args.m
    else:
        _need(args, "N")
        N = args.N
    opts = {}
    if name == "kummer":
        opts["a"] = args.a
    if name == "pade":
        opts["n"], opts["m"] = args.n, args.m
    report = verify(name, N, **opts)
    out.write(json.dumps(report.to_dict(), separators=(",", ":")) + "\n")
    return 0 if report.passed else 1


def _cmd_verify_all(args, out) -> int:
    n_max = args.N
    if n_max is None:
        env = os.environ.get("KRW_NMAX")
        try:
            n_max = int(env) if env else DEFAULT_NMAX
        except ValueError:
            raise _UsageError(f"KRW_NMAX must be an integer, got {env!r}")
    reports = verify_all(n_max)
    payload = {
        "n_max": n_max,
        "status": "pass" if all(r.passed for r in reports) else "fail",
        "reports": [r.to_dict() for r in reports],
    }
    out.write(json.dumps(payload, separators=(",", ":")) + "\n")
    return 0 if payload["status"] == "pass" else 1


COMMANDS = {
    "eval": _cmd_eval,
    "table": _cmd_table,
    "eigvec": _cmd_eigvec,
    "model": _cmd_model,
    "pade": _cmd_pade,
    "verify": _cmd_verify,
    "verify-all": _cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="krw",
        description="Exact Krawtchouk / su(2) model computations and identity checks.",
    )
    parser.add_argument("command", choices=list(COMMANDS))
    parser.add_argument("target", nargs="?", help="model name (fd|bargmann|bg) or identity name")
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--N", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--a", type=int)
    parser.add_argument("--adjoint", action="store_true")
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "model" and args.target not in ("fd", "bargmann", "bg"):
            raise _UsageError("model requires one of: fd, bargmann, bg")
        if args.command == "verify" and args.target is None:
            raise _UsageError(f"verify requires an identity name; valid names: {', '.join(IDENTITIES)}")
        if args.format == "csv" and args.command != "table":
            raise _UsageError("--format csv applies to table only")
        return COMMANDS[args.command](args, out)
    except (_UsageError, ValueError) as e:
        err.write(f"krw: error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
