from fractions import Fraction
from itertools import combinations
import random

import pytest
from hypothesis import given, strategies as st

from gramspec.errors import DegreeMismatch, InvalidInput, ZeroForm
from gramspec.exactnum import GaussianRational, I
from gramspec.forms import (
    BinaryForm,
    are_coprime,
    conjugate,
    is_quadratically_independent,
    linear_form,
    monomial,
    multiply,
    product_span_dim,
    products,
    x1,
    x2,
)

from oracles import gauss_rank, poly_mul

coeff = st.integers(-6, 6)


def forms(d):
    return st.lists(coeff, min_size=d + 1, max_size=d + 1).map(lambda c: BinaryForm(d, tuple(c)))


def gaussian_forms(d):
    return st.lists(st.tuples(coeff, coeff), min_size=d + 1, max_size=d + 1).map(
        lambda c: BinaryForm(d, tuple(GaussianRational(a, b) for a, b in c)))


def test_coefficient_order():
    f = BinaryForm(2, (1, 2, 3))
    assert f(1, 0) == 1 and f(0, 1) == 3
    assert str(f) == "1*x1^2 + 2*x1*x2 + 3*x2^2"


def test_wrong_length_rejected():
    with pytest.raises(InvalidInput):
        BinaryForm(2, (1, 2))


class TestMultiply:
    def test_examples(self):
        assert x1 * x2 == BinaryForm(2, (0, 1, 0))
        assert multiply(linear_form(I), linear_form(-I)).as_rational() == BinaryForm(2, (1, 0, 1))
        z = GaussianRational(1, 1)
        assert multiply(linear_form(z), linear_form(z.conjugate())).as_rational() == \
            BinaryForm(2, (1, -2, 2))

    @given(forms(3), forms(2))
    def test_matches_convolution(self, f, g):
        assert list(multiply(f, g).coeffs) == poly_mul(f.coeffs, g.coeffs)

    @given(gaussian_forms(2), gaussian_forms(3))
    def test_gaussian_matches_convolution(self, f, g):
        assert list(multiply(f, g).coeffs) == poly_mul(f.coeffs, g.coeffs)

    @given(forms(2), forms(2))
    def test_evaluation_is_multiplicative(self, f, g):
        assert multiply(f, g)(3, -2) == f(3, -2) * g(3, -2)

    def test_rational_fractions(self):
        f = BinaryForm(1, (Fraction(1, 2), Fraction(-1, 3)))
        assert (f * f).coeffs == (Fraction(1, 4), Fraction(-1, 3), Fraction(1, 9))

    def test_add_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            x1 + x1 * x1


class TestConjugate:
    def test_examples(self):
        assert conjugate(linear_form(I)) == linear_form(-I)
        f = BinaryForm(2, (1, 5, -3))
        assert conjugate(f) == f
        assert conjugate(BinaryForm(2, (I, 0, 0))) == BinaryForm(2, (-I, 0, 0))

    @given(gaussian_forms(2), gaussian_forms(2))
    def test_multiplicative_involution(self, f, g):
        assert conjugate(conjugate(f)) == f
        assert conjugate(multiply(f, g)) == multiply(conjugate(f), conjugate(g))


class TestProductSpan:
    def test_examples(self):
        assert product_span_dim([x1, x2]) == 3
        for d in range(1, 7):
            assert product_span_dim([monomial(d, 0), monomial(d, d)]) == 3
        assert product_span_dim([BinaryForm(3, (1, 2, 0, -1))]) == 1

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            product_span_dim([x1, x1 * x2])

    def test_product_order(self):
        a, b, c = monomial(2, 0), monomial(2, 1), monomial(2, 2)
        assert products([a, b, c]) == [a * a, a * b, a * c, b * b, b * c, c * c]

    @given(st.integers(1, 4).flatmap(lambda d: st.lists(forms(d), min_size=1, max_size=4)))
    def test_bounded_and_matches_oracle(self, fs):
        d = fs[0].degree
        s = product_span_dim(fs)
        assert s <= 2 * d + 1
        assert s == gauss_rank([list(p.coeffs) for p in products(fs)])

    @given(st.lists(forms(3), min_size=3, max_size=3), st.randoms(use_true_random=False))
    def test_invariant_under_recombination(self, fs, rnd):
        # upper unitriangular times a random permutation is always invertible
        r = len(fs)
        T = [[Fraction(rnd.randint(-3, 3)) if j > i else Fraction(int(i == j))
              for j in range(r)] for i in range(r)]
        perm = list(range(r))
        rnd.shuffle(perm)
        mixed = []
        for i in range(r):
            acc = BinaryForm.zero(3)
            for j in range(r):
                acc = acc + fs[perm[j]] * T[i][j]
            mixed.append(acc)
        assert product_span_dim(mixed) == product_span_dim(fs)


class TestQuadraticIndependence:
    def test_examples(self):
        assert is_quadratically_independent([x1, x2])
        assert not is_quadratically_independent([x1, x2, x1 + x2])
        rng = random.Random(0)
        assert not is_quadratically_independent(
            [BinaryForm(2, tuple(rng.randint(-5, 5) or 1 for _ in range(3))) for _ in range(3)])

    def test_seed0_degree4_triple(self):
        rng = random.Random(0)
        fs = [BinaryForm(4, tuple(rng.randint(-10, 10) for _ in range(5))) for _ in range(3)]
        # oracle: Gauss-Jordan rank of the six products must be 6
        assert gauss_rank([poly_mul(p.coeffs, q.coeffs) for i, p in enumerate(fs)
                           for q in fs[i:]]) == 6
        assert is_quadratically_independent(fs)

    def test_zero_member_rejected(self):
        with pytest.raises(ZeroForm):
            is_quadratically_independent([x1, BinaryForm.zero(1)])

    @given(st.lists(forms(4), min_size=1, max_size=3))
    def test_passes_to_subsets(self, fs):
        if any(f.is_zero for f in fs) or not is_quadratically_independent(fs):
            return
        for k in range(1, len(fs)):
            for sub in combinations(fs, k):
                assert is_quadratically_independent(sub)

    @given(st.lists(forms(4), min_size=1, max_size=3))
    def test_implies_linear_independence(self, fs):
        if any(f.is_zero for f in fs):
            return
        if is_quadratically_independent(fs):
            assert gauss_rank([list(f.coeffs) for f in fs]) == len(fs)


class TestCoprime:
    def test_examples(self):
        assert are_coprime(x1, x2)
        assert not are_coprime(x1 * x2, x1 * x1)
        assert are_coprime(x1 * x1 + x2 * x2, x1 * x2)
        assert not are_coprime(linear_form(I) * x1, linear_form(I) * x2)

    @given(forms(2), forms(1), forms(1))
    def test_shared_factor_detected(self, f, g, h):
        if f.is_zero or g.is_zero or h.is_zero:
            return
        assert not are_coprime(f * h, g * h)


def test_json_round_trip():
    f = BinaryForm(2, (Fraction(1, 2), GaussianRational(0, -3), 4))
    assert BinaryForm.from_json(f.to_json()) == f
    assert BinaryForm(1, (1, 2)).to_json() == {"degree": 1, "coeffs": ["1", "2"]}
