"""Exact rational scalars, polynomials, Laurent polynomials, truncated series
and small dense matrices.

Scalars are :class:`fractions.Fraction`; everything else is an immutable
container of Fractions.  No floating point is used anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Scalar",
    "to_scalar",
    "fmt",
    "parse_scalar",
    "binomial",
    "pochhammer",
    "falling",
    "factorial",
    "Poly",
    "Laurent",
    "Series",
    "Matrix",
    "poly_mul",
    "poly_pow",
    "series_mul",
    "series_exp",
    "residue_pair",
    "commutator",
    "tridiagonal_null_vector",
]

Scalar = Fraction
Number = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_scalar(x: Number | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(x)


def fmt(q: Number) -> str:
    """Serialize a rational as ``"p/q"`` (or ``"p"`` when q == 1)."""
    q = to_scalar(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_scalar(s: str) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------
# combinatorial factors (iterative products, no factorial ratios)
# ---------------------------------------------------------------------------

def binomial(N: int, k: int) -> Fraction:
    """C(N, k), zero outside 0 <= k <= N."""
    if k < 0 or k > N:
        return Fraction(0)
    k = min(k, N - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (N - k + i) // i
    return Fraction(out)


def pochhammer(a: Number, n: int) -> Fraction:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = to_scalar(a)
    out = _ONE
    for i in range(n):
        out *= a + i
        if out == 0:
            return _ZERO
    return out


def falling(a: Number, n: int) -> Fraction:
    """Falling factorial a (a-1) ... (a-n+1)."""
    a = to_scalar(a)
    out = _ONE
    for i in range(n):
        out *= a - i
    return out


def factorial(n: int) -> Fraction:
    return pochhammer(1, n)


def _trim_right(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end > 1 and coeffs[end - 1] == 0:
        end -= 1
    if end == 0:
        return (_ZERO,)
    return tuple(coeffs[:end])


# ---------------------------------------------------------------------------
# dense polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Poly:
    """Polynomial in z; ``coeffs[i]`` multiplies z**i.  Zero is ``(0,)``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number]):
        object.__setattr__(
            self, "coeffs", _trim_right([to_scalar(c) for c in coeffs])
        )

    @classmethod
    def monomial(cls, n: int, c: Number = 1) -> "Poly":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (_ZERO,)

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _ZERO

    def __call__(self, z: Number) -> Fraction:
        z = to_scalar(z)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: Union["Poly", Number]) -> "Poly":
        if isinstance(other, Poly):
            return poly_mul(self, other)
        c = to_scalar(other)
        return Poly(c * a for a in self.coeffs)

    __rmul__ = __mul__

    def scale_argument(self, c: Number) -> "Poly":
        """p(z) -> p(c z)."""
        c = to_scalar(c)
        return Poly(a * c**i for i, a in enumerate(self.coeffs))

    def derivative(self) -> "Poly":
        return Poly([i * a for i, a in enumerate(self.coeffs)][1:] or [0])

    def to_laurent(self) -> "Laurent":
        return Laurent(0, self.coeffs)

    def to_series(self, order: int) -> "Series":
        return Series(order, [self.coefficient(i) for i in range(order + 1)])


def poly_mul(p: Poly, q: Poly) -> Poly:
    out = [_ZERO] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            if b:
                out[i + j] += a * b
    return Poly(out)


def poly_pow(p: Poly | Sequence[Number], e: int) -> Poly:
    if e < 0:
        raise ValueError("exponent must be >= 0")
    if not isinstance(p, Poly):
        p = Poly(p)
    out = Poly([1])
    base = p
    while e:
        if e & 1:
            out = poly_mul(out, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return out


# ---------------------------------------------------------------------------
# finite Laurent polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Laurent:
    """Finite Laurent polynomial: ``coeffs[i]`` multiplies z**(low + i)."""

    low: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, low: int, coeffs: Iterable[Number]):
        cs = [to_scalar(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        if start == len(cs):
            object.__setattr__(self, "low", 0)
            object.__setattr__(self, "coeffs", (_ZERO,))
            return
        object.__setattr__(self, "low", low + start)
        object.__setattr__(self, "coeffs", _trim_right(cs[start:]))

    @classmethod
    def monomial(cls, e: int, c: Number = 1) -> "Laurent":
        return cls(e, [c])

    @classmethod
    def from_terms(cls, terms: dict[int, Fraction]) -> "Laurent":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls(0, [0])
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, _ZERO) for e in range(lo, hi + 1)])

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (_ZERO,)

    def coefficient(self, e: int) -> Fraction:
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _ZERO

    def terms(self) -> dict[int, Fraction]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def __add__(self, other: "Laurent") -> "Laurent":
        t = self.terms()
        for e, c in other.terms().items():
            t[e] = t.get(e, _ZERO) + c
        return Laurent.from_terms(t)

    def __neg__(self) -> "Laurent":
        return Laurent(self.low, [-c for c in self.coeffs])

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: Union["Laurent", Number]) -> "Laurent":
        if isinstance(other, Laurent):
            out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return Laurent(self.low + other.low, out)
        c = to_scalar(other)
        return Laurent(self.low, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def shift(self, k: int) -> "Laurent":
        """Multiply by z**k."""
        if self.is_zero():
            return self
        return Laurent(self.low + k, self.coeffs)

    def project(self, lo: int, hi: int) -> "Laurent":
        """Keep only exponents lo..hi."""
        return Laurent.from_terms({e: c for e, c in self.terms().items() if lo <= e <= hi})


def residue_pair(f: Laurent | Poly, g: Laurent | Poly) -> Fraction:
    """Coefficient of z**-1 in f*g, i.e. (1/2 pi i) times the contour integral
    of f g around the origin."""
    if isinstance(f, Poly):
        f = f.to_laurent()
    if isinstance(g, Poly):
        g = g.to_laurent()
    acc = _ZERO
    for e, c in f.terms().items():
        d = g.coefficient(-1 - e)
        if d:
            acc += c * d
    return acc


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Series:
    """Power series known exactly through z**order."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, order: int, coeffs: Iterable[Number]):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [to_scalar(c) for c in coeffs][: order + 1]
        cs += [_ZERO] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def coefficient(self, i: int) -> Fraction:
        if i > self.order:
            raise IndexError(f"coefficient {i} is beyond order {self.order}")
        return self.coeffs[i]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(order, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_poly(self) -> Poly:
        return Poly(self.coeffs)

    def __add__(self, other: "Series") -> "Series":
        m = min(self.order, other.order)
        return Series(m, [self.coeffs[i] + other.coeffs[i] for i in range(m + 1)])

    def __neg__(self) -> "Series":
        return Series(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: Union["Series", Number]) -> "Series":
        if isinstance(other, Series):
            return series_mul(self, other)
        c = to_scalar(other)
        return Series(self.order, [c * a for a in self.coeffs])

    __rmul__ = __mul__


def series_mul(a: Series, b: Series) -> Series:
    m = min(a.order, b.order)
    out = [_ZERO] * (m + 1)
    for i in range(m + 1):
        ai = a.coeffs[i]
        if ai == 0:
            continue
        for j in range(m + 1 - i):
            if b.coeffs[j]:
                out[i + j] += ai * b.coeffs[j]
    return Series(m, out)


def series_exp(order: int, scale: Number = 1) -> Series:
    """exp(scale * z) through z**order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    scale = to_scalar(scale)
    out = [_ONE]
    for j in range(1, order + 1):
        out.append(out[-1] * scale / j)
    return Series(order, out)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows * self.cols != len(self.entries):
            raise ValueError("rows * cols must equal the number of entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(to_scalar(x) for row in rows for x in row))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence[Number]) -> "Matrix":
        n = len(values)
        e = [_ZERO] * (n * n)
        for i, v in enumerate(values):
            e[i * n + i] = to_scalar(v)
        return cls(n, n, tuple(e))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Number]]) -> "Matrix":
        return cls.from_rows(cols).T

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j :: self.cols]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def _check_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __mul__(self, c: Number) -> "Matrix":
        c = to_scalar(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            # the operator matrices are banded; skip zeros
            nz = [[(j, b) for j, b in enumerate(other.row(k)) if b] for k in range(other.rows)]
            out = [_ZERO] * (self.rows * other.cols)
            for i in range(self.rows):
                base = i * other.cols
                for k, a in enumerate(self.row(i)):
                    if a == 0:
                        continue
                    for j, b in nz[k]:
                        out[base + j] += a * b
            return Matrix(self.rows, other.cols, tuple(out))
        v = [to_scalar(x) for x in other]
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(
            sum((a * x for a, x in zip(self.row(i), v) if a and x), _ZERO) for i in range(self.rows)
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i * self.cols + j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.T

    def nonzero_positions(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.rows) for j in range(self.cols) if self[i, j]]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def tridiagonal_null_vector(m: Matrix, value: Number, first: Number = 1) -> tuple[Fraction, ...]:
    """Solve (m - value) v = 0 for a tridiagonal m by forward substitution
    from v[0] = first.

    Row n fixes v[n+1] through the superdiagonal entry m[n, n+1], which must be
    nonzero.  The last row is not used; callers verify the full residual.
    """
    value = to_scalar(value)
    n = m.rows
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1 and m[i, j]:
                raise ValueError("matrix is not tridiagonal")
    v = [to_scalar(first)]
    for i in range(n - 1):
        sup = m[i, i + 1]
        if sup == 0:
            raise ValueError(f"zero superdiagonal entry at row {i}")
        acc = (value - m[i, i]) * v[i]
        if i > 0:
            acc -= m[i, i - 1] * v[i - 1]
        v.append(acc / sup)
    return tuple(v)
