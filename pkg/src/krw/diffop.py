"""Differential operators with polynomial coefficients, sum of c * z^p d^q.

Used to realize su(2) generators on finite monomial bases.  Lagrange adjoints
are taken with respect to the residue pairing res(f g), under which
(z^p d^q)^T = (-d)^q z^p.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

from .exact_algebra import Laurent, Matrix, Number, binomial, falling, to_scalar

__all__ = ["DiffOp", "PolySpaceOperator", "operator_on_basis", "Z", "D", "const"]


@dataclass(frozen=True)
class DiffOp:
    """Normal-ordered operator: ``terms[(p, q)]`` multiplies z^p d^q."""

    terms: tuple[tuple[tuple[int, int], Fraction], ...] = ()

    @classmethod
    def from_dict(cls, d: dict[tuple[int, int], Fraction]) -> "DiffOp":
        return cls(tuple(sorted((k, to_scalar(v)) for k, v in d.items() if v)))

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.terms)

    def __add__(self, other: "DiffOp | Number") -> "DiffOp":
        if not isinstance(other, DiffOp):
            other = const(other)
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d.get(k, Fraction(0)) + v
        return DiffOp.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "DiffOp":
        return DiffOp.from_dict({k: -v for k, v in self.terms})

    def __sub__(self, other: "DiffOp | Number") -> "DiffOp":
        if not isinstance(other, DiffOp):
            other = const(other)
        return self + (-other)

    def __rsub__(self, other: Number) -> "DiffOp":
        return const(other) - self

    def __mul__(self, other: "DiffOp | Number") -> "DiffOp":
        """Composition (self after other), or scalar multiple."""
        if not isinstance(other, DiffOp):
            c = to_scalar(other)
            return DiffOp.from_dict({k: c * v for k, v in self.terms})
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), u in self.terms:
            for (c, d), w in other.terms:
                # d^b z^c = sum_j C(b,j) c(c-1)..(c-j+1) z^(c-j) d^(b-j)
                for j in range(b + 1):
                    coef = binomial(b, j) * falling(c, j)
                    if coef:
                        key = (a + c - j, b - j + d)
                        out[key] = out.get(key, Fraction(0)) + u * w * coef
        return DiffOp.from_dict(out)

    def __rmul__(self, c: Number) -> "DiffOp":
        return self * c

    def commutator(self, other: "DiffOp") -> "DiffOp":
        return self * other - other * self

    def adjoint(self) -> "DiffOp":
        """Lagrange adjoint under the residue pairing."""
        out = DiffOp()
        for (p, q), c in self.terms:
            out = out + c * ((-1) ** q) * (D(q) * Z(p))
        return out

    def apply_monomial(self, e: int) -> Laurent:
        t: dict[int, Fraction] = {}
        for (p, q), c in self.terms:
            f = falling(e, q)
            if f:
                t[e - q + p] = t.get(e - q + p, Fraction(0)) + c * f
        return Laurent.from_terms(t)

    def apply(self, f: Laurent) -> Laurent:
        out = Laurent(0, [0])
        for e, c in f.terms().items():
            out = out + c * self.apply_monomial(e)
        return out


def Z(p: int = 1) -> DiffOp:
    return DiffOp.from_dict({(p, 0): Fraction(1)})


def D(q: int = 1) -> DiffOp:
    return DiffOp.from_dict({(0, q): Fraction(1)})


def const(c: Number) -> DiffOp:
    return DiffOp.from_dict({(0, 0): to_scalar(c)})


@dataclass(frozen=True)
class PolySpaceOperator:
    """Matrix of a differential operator on the basis norms[n] * z^exponents[n].

    ``leaked`` lists the basis indices whose image had components outside the
    span; those components were dropped (projected away).
    """

    N: int
    matrix: Matrix
    basis_kind: Literal["positive", "negative"]
    leaked: tuple[int, ...] = field(default=())


def operator_on_basis(
    op: DiffOp,
    N: int,
    exponents: Sequence[int],
    norms: Sequence[Number] | None = None,
    basis_kind: Literal["positive", "negative"] = "positive",
) -> PolySpaceOperator:
    norms = [Fraction(1)] * len(exponents) if norms is None else [to_scalar(c) for c in norms]
    index = {e: i for i, e in enumerate(exponents)}
    d = len(exponents)
    cols = []
    leaked = []
    for n, (e, c) in enumerate(zip(exponents, norms)):
        image = op.apply_monomial(e) * c
        col = [Fraction(0)] * d
        outside = False
        for f, a in image.terms().items():
            if f in index:
                col[index[f]] += a / norms[index[f]]
            else:
                outside = True
        if outside:
            leaked.append(n)
        cols.append(col)
    return PolySpaceOperator(N, Matrix.from_columns(cols), basis_kind, tuple(leaked))
