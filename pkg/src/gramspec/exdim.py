"""Dimension count for the set of rank-``r`` extreme points.

The sum-of-squares map ``(p_1..p_r) -> sum p_i^2`` has differential
``(q_1..q_r) -> 2 sum p_i q_i`` with image ``sum_i p_i A_d``. At a generic
quadratically independent tuple that image is all of ``A_2d``, the fibre has
dimension ``r(d+1) - (2d+1)``, and dividing out the free ``O(r)`` action
leaves ``(r-2)(2d-r+1)/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import DegreeMismatch, PatakiViolation
from .exactnum import rank_exact
from .forms import BinaryForm, monomial, multiply
from .pataki import pataki_binary
from .quadindep import DEFAULT_TRIES, random_qi_tuple

__all__ = ["ExdimReport", "exdim_formula", "sigma_jacobian_rank", "exdim_report"]


def exdim_formula(d: int, r: int) -> int:
    return (r - 2) * (2 * d - r + 1) // 2


def sigma_jacobian_rank(forms: Sequence[BinaryForm]) -> int:
    """``dim(p_1 A_d + ... + p_r A_d)``."""
    forms = list(forms)
    if not forms:
        return 0
    d = forms[0].degree
    if any(p.degree != d for p in forms):
        raise DegreeMismatch("forms must share a degree")
    rows = [list(multiply(p, monomial(d, k)).coeffs) for p in forms for k in range(d + 1)]
    return rank_exact(rows)


@dataclass(frozen=True)
class ExdimReport:
    d: int
    r: int
    formula_value: int
    jacobian_rank: int
    fiber_dim: int
    certified: bool
    identity_holds: bool
    seed: int
    tries_used: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def exdim_report(d: int, r: int, seed: int, max_tries: int = DEFAULT_TRIES) -> ExdimReport:
    if r not in pataki_binary(d):
        raise PatakiViolation(f"r = {r} is outside the Pataki range of degree {2 * d}")
    formula = exdim_formula(d, r)
    witness = random_qi_tuple(d, r, seed, max_tries=max_tries)
    jac = sigma_jacobian_rank(witness.forms)
    fiber = r * (d + 1) - jac
    return ExdimReport(
        d=d, r=r, formula_value=formula, jacobian_rank=jac, fiber_dim=fiber,
        certified=jac == 2 * d + 1,
        identity_holds=r * (d + 1) - (2 * d + 1) - comb(r, 2) == formula,
        seed=seed, tries_used=witness.tries_used,
    )
