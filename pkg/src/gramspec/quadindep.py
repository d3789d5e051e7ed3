"""Quadratically independent tuples of binary forms.

Witnesses are found by rejection sampling small integer coefficients and
certified exactly with :func:`gramspec.forms.is_quadratically_independent`.
Generic tuples are quadratically independent whenever ``C(r+1, 2) <= 2d+1``,
so a handful of tries is enough in practice.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import DegreeMismatch, ExhaustedTries, InvalidInput, NotVanishingAtInfinity, PatakiViolation, PNotInSpan
from .exactnum import intersection_dim, span_dim
from .forms import (
    BinaryForm,
    is_quadratically_independent,
    monomial,
    multiply,
    product_span_dim,
    products,
)
from .rng import make_rng

__all__ = ["QiWitness", "random_qi_tuple", "random_form", "Lemma1aResult", "lemma1a_check"]

DEFAULT_BOUND = 10
DEFAULT_TRIES = 5


@dataclass(frozen=True)
class QiWitness:
    d: int
    r: int
    forms: tuple
    tries_used: int
    seed: int

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "r": self.r,
            "seed": self.seed,
            "tries_used": self.tries_used,
            "forms": [p.to_json() for p in self.forms],
        }


def random_form(d: int, rng, bound: int = DEFAULT_BOUND) -> BinaryForm:
    return BinaryForm(d, tuple(rng.randint(-bound, bound) for _ in range(d + 1)))


def random_qi_tuple(d: int, r: int, seed: int, max_tries: int = DEFAULT_TRIES,
                    bound: int = DEFAULT_BOUND) -> QiWitness:
    """Draw ``r`` forms of degree ``d`` until they are quadratically independent.

    Raises
    ------
    PatakiViolation
        If ``C(r+1, 2) > 2d + 1``: the products cannot be independent in the
        ``(2d+1)``-dimensional space of degree ``2d`` forms.
    ExhaustedTries
        After ``max_tries`` rejected samples; the samples are attached.
    """
    if d < 1 or r < 1 or max_tries < 1:
        raise InvalidInput("need d >= 1, r >= 1, max_tries >= 1")
    if comb(r + 1, 2) > 2 * d + 1:
        raise PatakiViolation(f"C({r + 1}, 2) = {comb(r + 1, 2)} > 2d + 1 = {2 * d + 1}")
    rng = make_rng(seed)
    rejected = []
    for attempt in range(1, max_tries + 1):
        forms = tuple(random_form(d, rng, bound) for _ in range(r))
        if not any(p.is_zero for p in forms) and is_quadratically_independent(forms):
            return QiWitness(d=d, r=r, forms=forms, tries_used=attempt, seed=seed)
        rejected.append(forms)
    raise ExhaustedTries(f"no quadratically independent {r}-tuple in degree {d} after {max_tries} tries",
                         samples=rejected)


@dataclass(frozen=True)
class Lemma1aResult:
    lhs: int
    rhs: int
    holds: bool


def lemma1a_check(U_forms: Sequence[BinaryForm], p: BinaryForm) -> Lemma1aResult:
    """Compare ``dim(p A_d ∩ UU)`` with ``max(dim U, dim UU - d + 1)``.

    Every form in ``U_forms`` (and ``p``, which must lie in their span) has
    to vanish at infinity, i.e. have zero ``x1^d`` coefficient.
    """
    U_forms = list(U_forms)
    if not U_forms:
        raise InvalidInput("U must be nonempty")
    d = p.degree
    for q in U_forms + [p]:
        if q.degree != d:
            raise DegreeMismatch("all forms must share a degree")
        if q.coeffs[0] != 0:
            raise NotVanishingAtInfinity(f"{q} does not vanish at infinity")
    U = [list(q.coeffs) for q in U_forms]
    dim_u = span_dim(U)
    if span_dim(U + [list(p.coeffs)]) != dim_u:
        raise PNotInSpan("p is not in the span of U")
    pA = [list(multiply(p, monomial(d, k)).coeffs) for k in range(d + 1)]
    UU = [list(q.coeffs) for q in products(U_forms)]
    lhs = intersection_dim(pA, UU)
    rhs = max(dim_u, product_span_dim(U_forms) - d + 1)
    return Lemma1aResult(lhs=lhs, rhs=rhs, holds=lhs >= rhs)
