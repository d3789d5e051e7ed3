from math import comb
import random

import pytest

from gramspec.errors import DegreeMismatch, PatakiViolation
from gramspec.exdim import exdim_formula, exdim_report, sigma_jacobian_rank
from gramspec.forms import BinaryForm, are_coprime, monomial
from gramspec.pataki import pataki_binary

from oracles import gauss_rank, poly_mul


def test_jacobian_examples():
    for d in range(1, 7):
        assert sigma_jacobian_rank([monomial(d, 0)]) == d + 1
        assert sigma_jacobian_rank([monomial(d, 0), monomial(d, d)]) == 2 * d + 1


def test_jacobian_matches_oracle():
    rng = random.Random(0)
    for _ in range(20):
        d, r = rng.randint(1, 5), rng.randint(1, 3)
        fs = [BinaryForm(d, tuple(rng.randint(-3, 3) for _ in range(d + 1))) for _ in range(r)]
        rows = [poly_mul(p.coeffs, monomial(d, k).coeffs) for p in fs for k in range(d + 1)]
        assert sigma_jacobian_rank(fs) == gauss_rank(rows)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        sigma_jacobian_rank([monomial(2, 0), monomial(3, 0)])


def test_coprime_pair_gives_full_rank():
    rng = random.Random(1)
    checked = 0
    while checked < 40:
        d = rng.randint(1, 7)
        r = rng.randint(2, 4)
        fs = [BinaryForm(d, tuple(rng.randint(-4, 4) for _ in range(d + 1))) for _ in range(r)]
        if fs[0].is_zero or fs[1].is_zero or not are_coprime(fs[0], fs[1]):
            continue
        assert sigma_jacobian_rank(fs) == 2 * d + 1
        checked += 1


def test_report_examples():
    for d in range(1, 8):
        assert exdim_report(d, 2, seed=0).formula_value == 0
    assert exdim_report(4, 3, seed=0).formula_value == 3
    rep = exdim_report(5, 4, seed=0)
    assert rep.formula_value == 7 == 4 * 6 - 11 - comb(4, 2)


def test_formula_identity():
    for d in range(1, 51):
        for r in pataki_binary(d).ranks():
            assert r * (d + 1) - (2 * d + 1) - comb(r, 2) == exdim_formula(d, r)
            assert 2 * exdim_formula(d, r) == (r - 2) * (2 * d - r + 1)


@pytest.mark.parametrize("d", range(1, 11))
def test_certified_in_range(d):
    for r in pataki_binary(d).ranks():
        rep = exdim_report(d, r, seed=d * 100 + r)
        assert rep.certified and rep.identity_holds
        assert rep.jacobian_rank == 2 * d + 1
        assert rep.fiber_dim == r * (d + 1) - (2 * d + 1)


def test_outside_range():
    with pytest.raises(PatakiViolation):
        exdim_report(2, 3, seed=0)
    with pytest.raises(PatakiViolation):
        exdim_report(3, 1, seed=0)
