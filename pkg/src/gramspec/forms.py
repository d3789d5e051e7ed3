"""Binary forms in ``x1, x2`` with exact rational or Gaussian-rational coefficients.

A form of degree ``d`` is stored as ``d + 1`` coefficients, index ``k``
holding the coefficient of ``x1^(d-k) * x2^k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, lcm
from typing import Sequence

from .errors import DegreeMismatch, InvalidInput, ZeroForm
from .exactnum import (
    GaussianRational,
    as_scalar,
    rank_exact,
    scalar_from_json,
    scalar_to_json,
)

__all__ = [
    "BinaryForm",
    "x1",
    "x2",
    "monomial",
    "linear_form",
    "multiply",
    "conjugate",
    "products",
    "product_span_dim",
    "is_quadratically_independent",
    "are_coprime",
    "coefficient_matrix",
]


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(as_scalar(c) for c in self.coeffs)
        if self.degree < 0 or len(coeffs) != self.degree + 1:
            raise InvalidInput(
                f"degree {self.degree} form needs {self.degree + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "BinaryForm":
        coeffs = tuple(coeffs)
        return cls(len(coeffs) - 1, coeffs)

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, (0,) * (degree + 1))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_real(self) -> bool:
        return all(not isinstance(c, GaussianRational) or c.im == 0 for c in self.coeffs)

    def real_part(self) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(
            c.re if isinstance(c, GaussianRational) else c for c in self.coeffs))

    def imag_part(self) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(
            c.im if isinstance(c, GaussianRational) else Fraction(0) for c in self.coeffs))

    def as_rational(self) -> "BinaryForm":
        """Drop a zero imaginary part; raises if some coefficient is not real."""
        if not self.is_real:
            raise InvalidInput("form has non-real coefficients")
        return self.real_part()

    def conjugate(self) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(
            c.conjugate() if isinstance(c, GaussianRational) else c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch("cannot add forms of different degrees")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return BinaryForm(self.degree, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return BinaryForm(self.degree, tuple(c * other for c in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = BinaryForm(0, (1,))
        for _ in range(k):
            result = multiply(result, self)
        return result

    def __call__(self, a, b):
        """Evaluate at ``(x1, x2) = (a, b)``."""
        d = self.degree
        return sum(c * a ** (d - k) * b ** k for k, c in enumerate(self.coeffs))

    def __str__(self):
        d = self.degree
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in (("x1", d - k), ("x2", k)) if e > 0)
            terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [scalar_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "BinaryForm":
        try:
            return cls(int(obj["degree"]), tuple(scalar_from_json(c) for c in obj["coeffs"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"bad form record: {exc}") from exc


x1 = BinaryForm(1, (1, 0))
x2 = BinaryForm(1, (0, 1))


def monomial(d: int, k: int, c=1) -> BinaryForm:
    """``c * x1^(d-k) * x2^k``."""
    coeffs = [0] * (d + 1)
    coeffs[k] = c
    return BinaryForm(d, tuple(coeffs))


def linear_form(root) -> BinaryForm:
    """``x1 - root * x2``, vanishing at ``[root : 1]``."""
    return BinaryForm(1, (1, -root))


def _integer_parts(f: BinaryForm):
    """``(re, im, den)`` with integer lists and ``f = (re + i*im) / den``."""
    res = [c.re if isinstance(c, GaussianRational) else c for c in f.coeffs]
    ims = [c.im if isinstance(c, GaussianRational) else None for c in f.coeffs]
    den = 1
    for x in res + ims:
        if x is not None:
            den = lcm(den, x.denominator)
    re = [int(x * den) for x in res]
    if all(x is None or x == 0 for x in ims):
        return re, None, den
    return re, [0 if x is None else int(x * den) for x in ims], den


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def multiply(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    ar, ai, da = _integer_parts(f)
    br, bi, db = _integer_parts(g)
    den = da * db
    re = _convolve(ar, br)
    if ai is None and bi is None:
        if not isinstance(f.coeffs[0], GaussianRational) and not isinstance(g.coeffs[0], GaussianRational):
            return BinaryForm(f.degree + g.degree, tuple(Fraction(x, den) for x in re))
        im = [0] * len(re)
    else:
        if ai is not None and bi is not None:
            re = [x - y for x, y in zip(re, _convolve(ai, bi))]
        im = [0] * len(re)
        if bi is not None:
            im = [x + y for x, y in zip(im, _convolve(ar, bi))]
        if ai is not None:
            im = [x + y for x, y in zip(im, _convolve(ai, br))]
    return BinaryForm(f.degree + g.degree, tuple(
        GaussianRational(Fraction(x, den), Fraction(y, den)) for x, y in zip(re, im)))


def conjugate(f: BinaryForm) -> BinaryForm:
    return f.conjugate()


def _check_degrees(forms):
    if not forms:
        return None
    d = forms[0].degree
    if any(p.degree != d for p in forms):
        raise DegreeMismatch("forms must share a degree")
    return d


def coefficient_matrix(forms: Sequence[BinaryForm]) -> list[list]:
    _check_degrees(forms)
    return [list(p.coeffs) for p in forms]


def products(forms: Sequence[BinaryForm]) -> list[BinaryForm]:
    """All ``p_i * p_j`` with ``i <= j``, in lexicographic order of ``(i, j)``."""
    return [multiply(p, q) for p, q in combinations_with_replacement(forms, 2)]


def product_span_dim(forms: Sequence[BinaryForm]) -> int:
    """``dim span{p_i p_j : i <= j}``."""
    forms = list(forms)
    if not forms:
        return 0
    _check_degrees(forms)
    return rank_exact(coefficient_matrix(products(forms)))


def is_quadratically_independent(forms: Sequence[BinaryForm]) -> bool:
    """True iff the ``C(r+1, 2)`` products ``p_i p_j`` are linearly independent."""
    forms = list(forms)
    d = _check_degrees(forms)
    if any(p.is_zero for p in forms):
        raise ZeroForm("quadratic independence is undefined for a zero member")
    r = len(forms)
    if d is not None and comb(r + 1, 2) > 2 * d + 1:
        return False
    return product_span_dim(forms) == comb(r + 1, 2)


def are_coprime(f: BinaryForm, g: BinaryForm) -> bool:
    """Coprimality of two nonzero forms via the Sylvester matrix.

    ``f * A_(n-1) + g * A_(m-1) = A_(m+n-1)`` exactly when ``gcd(f, g) = 1``.
    """
    if f.is_zero or g.is_zero:
        raise ZeroForm("coprimality needs nonzero forms")
    m, n = f.degree, g.degree
    if m == 0 or n == 0:
        return True
    rows = [list(multiply(f, monomial(n - 1, k)).coeffs) for k in range(n)]
    rows += [list(multiply(g, monomial(m - 1, k)).coeffs) for k in range(m)]
    return rank_exact(rows) == m + n
