"""Exact scalars and dense linear algebra over Q and Q(i).

Rationals are plain :class:`fractions.Fraction` values. Gaussian rationals
are :class:`GaussianRational`. Matrices are sequences of rows; nothing here
mutates its inputs.

Ranks use fraction-free (Bareiss) elimination on integer matrices obtained
by clearing row denominators. Ranks over Q(i) go through the real 2x2 block
form ``[[A, -B], [B, A]]`` of ``A + iB``, whose rank is twice the complex
rank. Characteristic polynomials use the division-free Berkowitz scheme.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Sequence, Union

from .errors import DimensionMismatch, NotSymmetric

__all__ = [
    "GaussianRational",
    "I",
    "as_fraction",
    "as_scalar",
    "is_gaussian",
    "rank_exact",
    "pivot_columns",
    "char_poly_sym",
    "is_psd_exact",
    "is_pd_exact",
    "span_dim",
    "intersection_dim",
    "transpose",
    "is_symmetric",
    "scalar_to_json",
    "scalar_from_json",
    "rational_to_str",
    "rational_from_str",
]


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """A complex number ``re + im*i`` with rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if type(self.re) is not Fraction:
            object.__setattr__(self, "re", Fraction(self.re))
        if type(self.im) is not Fraction:
            object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(Fraction(other), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * o.conjugate() * GaussianRational(1 / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


I = GaussianRational(0, 1)

Scalar = Union[int, Fraction, GaussianRational]


def as_fraction(x) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, GaussianRational):
        if x.im != 0:
            raise ValueError(f"{x} is not real")
        return x.re
    if isinstance(x, (int, Fraction)) or isinstance(x, _RationalABC):
        return Fraction(x)
    if isinstance(x, str):
        return rational_from_str(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def as_scalar(x):
    """Normalize ints to Fraction; leave Gaussian rationals alone."""
    if isinstance(x, GaussianRational):
        return x
    return as_fraction(x)


def is_gaussian(values) -> bool:
    """True if any value in the (possibly nested) iterable is a GaussianRational."""
    for v in values:
        if isinstance(v, GaussianRational):
            return True
        if isinstance(v, (list, tuple)) and is_gaussian(v):
            return True
    return False


# -- serialization ---------------------------------------------------------

def rational_to_str(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    if not isinstance(s, str):
        raise TypeError(f"expected a 'p/q' string, got {type(s).__name__}")
    return Fraction(s.strip())


def scalar_to_json(x):
    if isinstance(x, GaussianRational):
        return {"re": rational_to_str(x.re), "im": rational_to_str(x.im)}
    return rational_to_str(x)


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return GaussianRational(rational_from_str(obj["re"]),
                                rational_from_str(obj["im"]))
    return rational_from_str(obj)


# -- matrices --------------------------------------------------------------

def transpose(M):
    return [list(col) for col in zip(*M)]


def is_symmetric(M) -> bool:
    n = len(M)
    if any(len(row) != n for row in M):
        return False
    return all(M[i][j] == M[j][i] for i in range(n) for j in range(i + 1, n))


def _check_rectangular(M):
    if not M:
        return 0
    cols = len(M[0])
    for row in M:
        if len(row) != cols:
            raise DimensionMismatch("ragged matrix rows")
    return cols


def _integer_rows(M):
    """Scale every row of a rational matrix to integers."""
    out = []
    for row in M:
        row = [as_fraction(x) for x in row]
        den = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (den // x.denominator) for x in row])
    return out


def _realify(M):
    """Real block form ``[[A, -B], [B, A]]`` of ``M = A + iB``."""
    top, bottom = [], []
    for row in M:
        re = [x.re if isinstance(x, GaussianRational) else Fraction(x) for x in row]
        im = [x.im if isinstance(x, GaussianRational) else Fraction(0) for x in row]
        top.append(re + [-v for v in im])
        bottom.append(im + re)
    return top + bottom


def _bareiss(rows):
    """Fraction-free row echelon pass; returns the list of pivot columns.

    Works in place on an integer matrix. Every intermediate entry is a minor
    of the input, so the division by the previous pivot is exact.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if k is None:
            continue
        if k != r:
            rows[r], rows[k] = rows[k], rows[r]
        piv = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - a * prow[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def rank_exact(M) -> int:
    """Exact rank of a rational or Gaussian-rational matrix."""
    _check_rectangular(M)
    if not M or not M[0]:
        return 0
    if is_gaussian(M):
        rank2 = len(_bareiss(_integer_rows(_realify(M))))
        assert rank2 % 2 == 0
        return rank2 // 2
    return len(_bareiss(_integer_rows(M)))


def pivot_columns(M) -> list[int]:
    """Indices of the first linearly independent columns of a rational matrix.

    Column ``j`` is listed iff it is not in the span of columns ``0..j-1``.
    """
    _check_rectangular(M)
    if not M or not M[0]:
        return []
    if is_gaussian(M):
        raise TypeError("pivot_columns expects a rational matrix")
    return _bareiss(_integer_rows(M))


def _berkowitz(A):
    """Coefficients ``[1, c1, ..., cn]`` of ``det(tI - A)`` for a square ring
    matrix, using only ring operations."""
    n = len(A)
    if n == 0:
        return [1]
    p = [1, -A[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        a = A[k][k]
        R = A[k][k + 1:]
        C = [A[i][k] for i in range(k + 1, n)]
        sub = [row[k + 1:] for row in A[k + 1:]]
        m = n - k - 1
        q = [1, -a]
        v = C
        for _ in range(m):
            q.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(x * y for x, y in zip(row, v)) for row in sub]
        p = [sum(q[i - j] * p[j] for j in range(min(i, m) + 1)) for i in range(m + 2)]
    return p


def char_poly_sym(M) -> list[Fraction]:
    """Signed characteristic coefficients ``e_1..e_n`` of a symmetric matrix.

    ``det(tI - M) = t^n - e_1 t^(n-1) + e_2 t^(n-2) - ...``, so ``e_k`` is the
    k-th elementary symmetric function of the eigenvalues.
    """
    if not is_symmetric(M):
        raise NotSymmetric("char_poly_sym needs a square symmetric matrix")
    n = len(M)
    entries = [as_fraction(x) for row in M for x in row]
    den = 1
    for x in entries:
        den = den * x.denominator // math.gcd(den, x.denominator)
    N = [[int(as_fraction(x) * den) for x in row] for row in M]
    c = _berkowitz(N)
    return [Fraction((-1) ** k * c[k], den ** k) for k in range(1, n + 1)]


def is_psd_exact(M) -> bool:
    """True iff the symmetric matrix ``M`` is positive semidefinite."""
    return all(e >= 0 for e in char_poly_sym(M))


def is_pd_exact(M) -> bool:
    """True iff the symmetric matrix ``M`` is positive definite."""
    return all(e > 0 for e in char_poly_sym(M))


# -- subspaces -------------------------------------------------------------

def _as_rows(vectors: Sequence[Sequence]) -> list[list]:
    rows = [list(v) for v in vectors]
    if rows:
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("vectors have different lengths")
    return rows


def span_dim(vectors) -> int:
    """Dimension of the span of a list of equal-length vectors."""
    rows = _as_rows(vectors)
    if not rows:
        return 0
    return rank_exact(rows)


def intersection_dim(A, B) -> int:
    """``dim(span A ∩ span B) = dim A + dim B - dim(A + B)``."""
    A = _as_rows(A)
    B = _as_rows(B)
    if A and B and len(A[0]) != len(B[0]):
        raise DimensionMismatch("spans live in different ambient spaces")
    return span_dim(A) + span_dim(B) - span_dim(A + B)
