"""Gram matrices of binary forms and the facial structure of Gram(f).

A Gram point of a form ``f`` of degree ``2d`` is a symmetric rational
``(d+1) x (d+1)`` matrix ``G`` in the monomial basis with ``mu(G) = f``.
The face of Gram(f) containing a psd point ``G`` in its relative interior is
determined by the range ``U`` of ``G``; its dimension is
``C(r+1, 2) - dim(UU)`` with ``r = dim U``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import (
    DegreeMismatch,
    DifferentForm,
    EqualPoints,
    InvalidInput,
    NotPsd,
    NotSymmetric,
    SizeMismatch,
)
from .exactnum import (
    as_fraction,
    is_pd_exact,
    is_psd_exact,
    is_symmetric,
    pivot_columns,
    rank_exact,
    rational_from_str,
    rational_to_str,
)
from .forms import BinaryForm, is_quadratically_independent, product_span_dim

__all__ = [
    "GramPoint",
    "SegmentReport",
    "mu",
    "gram_from_sos",
    "range_forms",
    "supporting_face_dim",
    "is_extreme_point",
    "segment_face_dim",
    "gram_affine_dim",
    "is_interior_point",
    "find_pd_gram",
    "midpoint",
]


def _freeze(G):
    return tuple(tuple(as_fraction(x) for x in row) for row in G)


def mu(G, d: int) -> BinaryForm:
    """Antidiagonal sums of ``G``: the form ``sum_jk G[j][k] x^(j) x^(k)``."""
    n = d + 1
    if len(G) != n or any(len(row) != n for row in G):
        raise SizeMismatch(f"expected a {n}x{n} matrix for degree parameter {d}")
    if not is_symmetric(G):
        raise NotSymmetric("Gram matrices are symmetric")
    coeffs = [Fraction(0)] * (2 * d + 1)
    for j in range(n):
        for k in range(n):
            coeffs[j + k] += as_fraction(G[j][k])
    return BinaryForm(2 * d, tuple(coeffs))


@dataclass(frozen=True)
class GramPoint:
    """A symmetric matrix ``G`` together with the form ``f = mu(G)``.

    ``f`` is recomputed from ``G`` when omitted, and validated when given.
    """

    d: int
    G: tuple
    f: BinaryForm = None

    def __post_init__(self):
        G = _freeze(self.G)
        f = mu(G, self.d)
        if self.f is not None:
            if self.f.degree != f.degree or self.f.as_rational() != f:
                raise InvalidInput("mu(G) does not match the stated form")
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "f", f)

    @property
    def rank(self) -> int:
        return rank_exact(self.G)

    @property
    def is_psd(self) -> bool:
        return is_psd_exact(self.G)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "G": [[rational_to_str(x) for x in row] for row in self.G],
            "f": self.f.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GramPoint":
        try:
            d = int(obj["d"])
            G = [[rational_from_str(x) for x in row] for row in obj["G"]]
            f = BinaryForm.from_json(obj["f"]) if "f" in obj else None
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"bad GramPoint record: {exc}") from exc
        return cls(d, G, f)


def gram_from_sos(forms: Sequence[BinaryForm]) -> GramPoint:
    """The Gram point ``sum_i v_i v_i^T`` of ``f = sum_i p_i^2``."""
    forms = list(forms)
    if not forms:
        raise InvalidInput("need at least one form")
    d = forms[0].degree
    if any(p.degree != d for p in forms):
        raise DegreeMismatch("forms must share a degree")
    vecs = [p.as_rational().coeffs for p in forms]
    n = d + 1
    G = [[sum((v[j] * v[k] for v in vecs), Fraction(0)) for k in range(n)] for j in range(n)]
    return GramPoint(d, G)


def _columns_as_forms(M, d, indices):
    return [BinaryForm(d, tuple(row[j] for row in M)) for j in indices]


def range_forms(theta: GramPoint) -> list[BinaryForm]:
    """A basis of the range of ``theta``: its first independent columns."""
    return _columns_as_forms(theta.G, theta.d, pivot_columns(theta.G))


def _require_psd(theta):
    if not theta.is_psd:
        raise NotPsd("point is not positive semidefinite")


def supporting_face_dim(theta: GramPoint) -> int:
    """Dimension of the face of Gram(f) with ``theta`` in its relative interior."""
    _require_psd(theta)
    U = range_forms(theta)
    return comb(len(U) + 1, 2) - product_span_dim(U)


def is_extreme_point(theta: GramPoint) -> bool:
    _require_psd(theta)
    return is_quadratically_independent(range_forms(theta))


@dataclass(frozen=True)
class SegmentReport:
    u_dim: int
    face_dim: int
    is_edge: bool
    midpoint_rank: int

    def to_json(self) -> dict:
        return {"u_dim": self.u_dim, "face_dim": self.face_dim,
                "is_edge": self.is_edge, "midpoint_rank": self.midpoint_rank}


def midpoint(theta: GramPoint, other: GramPoint) -> GramPoint:
    if theta.d != other.d:
        raise SizeMismatch("points live in different degrees")
    half = Fraction(1, 2)
    G = [[(a + b) * half for a, b in zip(r1, r2)] for r1, r2 in zip(theta.G, other.G)]
    return GramPoint(theta.d, G)


def segment_face_dim(theta: GramPoint, other: GramPoint) -> SegmentReport:
    """Supporting face of the segment ``[theta, other]``.

    The face is the supporting face of the midpoint, whose range is the sum
    of the two ranges.
    """
    if theta.d != other.d or theta.f != other.f:
        raise DifferentForm("points are Gram matrices of different forms")
    if theta.G == other.G:
        raise EqualPoints("segment endpoints coincide")
    _require_psd(theta)
    _require_psd(other)
    joined = [list(r1) + list(r2) for r1, r2 in zip(theta.G, other.G)]
    basis = _columns_as_forms(joined, theta.d, pivot_columns(joined))
    u_dim = len(basis)
    face_dim = comb(u_dim + 1, 2) - product_span_dim(basis)
    return SegmentReport(
        u_dim=u_dim,
        face_dim=face_dim,
        is_edge=face_dim == 1,
        midpoint_rank=midpoint(theta, other).rank,
    )


def gram_affine_dim(d: int) -> int:
    """``dim Gram(f) = C(d, 2)`` for ``f`` in the interior of the sos cone."""
    if d < 1:
        raise InvalidInput("d must be >= 1")
    return comb(d, 2)


def is_interior_point(theta: GramPoint) -> bool:
    """Full rank ``d + 1`` and positive definite."""
    return is_pd_exact(theta.G)


def find_pd_gram(points: Sequence[GramPoint]) -> GramPoint | None:
    """Average the given Gram points of one form; return it if positive definite.

    Returns ``None`` when the average is singular.
    """
    points = list(points)
    if not points:
        return None
    d = points[0].d
    n = d + 1
    k = len(points)
    G = [[sum((p.G[i][j] for p in points), Fraction(0)) / k for j in range(n)] for i in range(n)]
    avg = GramPoint(d, G)
    if any(p.f != avg.f for p in points):
        raise DifferentForm("points are Gram matrices of different forms")
    return avg if is_interior_point(avg) else None
