from itertools import combinations
import random

import pytest
from hypothesis import given, settings, strategies as st

from gramspec.edges import (
    EdgeGraph,
    classify_graph,
    edge_graph,
    is_edge_structural,
    nine_products,
    nine_products_span_dim,
    nine_products_span_dim4,
    split_factors,
)
from gramspec.errors import EqualCodes, InvalidInput, ZeroForm
from gramspec.exactnum import GaussianRational
from gramspec.factorization import factor_g, random_root_set, split_degrees
from gramspec.forms import BinaryForm, are_coprime, x1, x2

from oracles import gauss_rank


def gaussian_form(d, rng, bound=5):
    return BinaryForm(d, tuple(GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))
                               for _ in range(d + 1)))


def coprime_pair(d, rng):
    while True:
        a, b = gaussian_form(d, rng), gaussian_form(d, rng)
        if not a.is_zero and not b.is_zero and are_coprime(a, b):
            return a, b


@pytest.fixture(scope="module")
def d4_graph():
    return edge_graph(random_root_set(4, random.Random(2024)))


class TestNineProducts:
    def test_collapse_to_one(self):
        assert nine_products_span_dim(x1 ** 3, x1) == 1

    def test_monomial_instance(self):
        assert nine_products_span_dim4(x1 ** 3, x2 ** 3, x1, x2) == 9

    def test_oracle_rank(self):
        rng = random.Random(3)
        g1, g2 = coprime_pair(3, rng)
        h1, h2 = coprime_pair(1, rng)
        rows = [list(p.coeffs) for p in nine_products(g1, g2, h1, h2)]
        assert nine_products_span_dim4(g1, g2, h1, h2) == gauss_rank(rows) == 9

    @settings(max_examples=60)
    @given(st.integers(0, 2 ** 32))
    def test_quadratic_case_always_dependent(self, seed):
        rng = random.Random(seed)
        forms = [gaussian_form(2, rng) for _ in range(4)]
        if any(f.is_zero for f in forms):
            return
        assert nine_products_span_dim4(*forms) <= 8

    def test_quadratic_case_reaches_eight(self):
        rng = random.Random(0)
        dims = {nine_products_span_dim4(*(gaussian_form(2, rng) for _ in range(4))) for _ in range(20)}
        assert max(dims) == 8

    @pytest.mark.parametrize("delta,eps", [(3, 1), (3, 2), (4, 1), (2, 3)])
    def test_generic_independence(self, delta, eps):
        rng = random.Random(delta * 10 + eps)
        for _ in range(5):
            g1, g2 = coprime_pair(delta, rng)
            h1, h2 = coprime_pair(eps, rng)
            assert nine_products_span_dim4(g1, g2, h1, h2) == 9

    def test_zero_form(self):
        with pytest.raises(ZeroForm):
            nine_products_span_dim(BinaryForm.zero(2), x1)


class TestStructural:
    def test_split_factors_reconstruct(self):
        R = random_root_set(5, random.Random(1))
        for c1, c2 in combinations(range(0, 32, 2), 2):
            g, h = split_factors(R, c1, c2)
            assert g * h == factor_g(R, c1)
            assert g * h.conjugate() == factor_g(R, c2)
            assert g.degree == 5 - bin(c1 ^ c2).count("1")

    def test_d4_verdicts(self):
        R = random_root_set(4, random.Random(8))
        for c1, c2 in combinations(range(0, 16, 2), 2):
            rep = is_edge_structural(R, c1, c2)
            assert rep.is_edge == (split_degrees(c1, c2, 4) == (1, 3))
            assert rep.u_dim == 4

    def test_d3_never_edges(self):
        for seed in range(5):
            R = random_root_set(3, random.Random(seed))
            for c1, c2 in combinations(range(0, 8, 2), 2):
                rep = is_edge_structural(R, c1, c2)
                assert rep.u_dim == 4 and not rep.is_edge

    def test_errors(self):
        R = random_root_set(3, random.Random(0))
        with pytest.raises(EqualCodes):
            is_edge_structural(R, 2, 2)
        with pytest.raises(InvalidInput):
            is_edge_structural(R, 1, 2)


class TestEdgeGraph:
    def test_d2(self):
        E = edge_graph(random_root_set(2, random.Random(0)))
        assert E.edge_count == 1 and classify_graph(E).kind == "complete"

    def test_d3(self):
        E = edge_graph(random_root_set(3, random.Random(4)))
        assert (E.edge_count, E.pair_count) == (0, 6)
        assert classify_graph(E).label == "empty"
        assert all(p.face_dim == 3 and p.midpoint_rank == 4 for p in E.pairs)

    def test_d4(self, d4_graph):
        E = d4_graph
        assert (E.edge_count, E.pair_count) == (16, 28)
        assert all(p.midpoint_rank == 4 for p in E.pairs)
        assert all((p.face_dim == 1) == p.is_edge for p in E.pairs)
        shape = classify_graph(E)
        assert shape.label == "complete_bipartite(4,4)" and shape.class_rule_holds
        even = tuple(c for c in E.vertices if bin(c).count("1") % 2 == 0)
        assert set(map(frozenset, shape.parts)) == {frozenset(even), frozenset(set(E.vertices) - set(even))}

    def test_d5(self):
        E = edge_graph(random_root_set(5, random.Random(5)))
        assert E.edge_count == E.pair_count == 120
        assert classify_graph(E).label == "complete"

    def test_parallel_matches_serial(self, d4_graph):
        R = random_root_set(4, random.Random(2024))
        assert edge_graph(R, jobs=2) == d4_graph

    def test_d1_rejected(self):
        with pytest.raises(InvalidInput):
            edge_graph(random_root_set(1, random.Random(0)))

    def test_json_and_dot(self, d4_graph):
        doc = d4_graph.to_json()
        assert doc["vertices"][1] == "0100"
        assert len(doc["edges"]) == 16 and len(doc["pairs"]) == 28
        assert set(doc["pairs"][0]) == {"codes", "split", "u_dim", "face_dim", "midpoint_rank"}
        dot = d4_graph.to_dot()
        assert dot.startswith("graph") and dot.count(" -- ") == 16
        assert dot.count("lightblue") == 4 and dot.count("salmon") == 4


def test_classify_other():
    E = EdgeGraph(d=3, vertices=(0, 2, 4, 6), edges=((0, 2),), pairs=())
    assert classify_graph(E).kind == "other"
