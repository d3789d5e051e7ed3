"""Edges of Gram(f) between rank-two extreme points.

Two rank-two points with factorizations ``p = g h`` and ``q = g conj(h)``
span a segment whose supporting face has range
``U_C = span(gh, g conj(h), conj(g) h, conj(gh))``. When ``dim U = 4`` the
segment is an edge iff the nine products
``g^a1 conj(g)^a2 h^b1 conj(h)^b2`` (``a1+a2 = b1+b2 = 2``) are linearly
independent. :func:`edge_graph` evaluates this structural test and the
midpoint face dimension from :mod:`gramspec.gram` on every pair, and refuses
to return a graph when they disagree.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import CrossCheckMismatch, DegreeMismatch, EqualCodes, InvalidInput, ZeroForm
from .exactnum import rank_exact
from .factorization import (
    MAX_DEGREE,
    RootPairSet,
    chosen_roots,
    code_to_bits,
    enumerate_rank2,
    is_canonical,
    split_degrees,
    linear_product,
)
from .forms import BinaryForm, multiply
from .gram import segment_face_dim

__all__ = [
    "nine_products",
    "nine_products_span_dim",
    "nine_products_span_dim4",
    "split_factors",
    "StructuralReport",
    "is_edge_structural",
    "PairReport",
    "EdgeGraph",
    "edge_graph",
    "GraphShape",
    "classify_graph",
]


def nine_products(g1: BinaryForm, g2: BinaryForm, h1: BinaryForm, h2: BinaryForm) -> list[BinaryForm]:
    """``g1^a1 g2^a2 h1^b1 h2^b2`` for ``a1 + a2 = b1 + b2 = 2``."""
    for f in (g1, g2, h1, h2):
        if f.is_zero:
            raise ZeroForm("nine products need nonzero forms")
    if g1.degree != g2.degree or h1.degree != h2.degree:
        raise DegreeMismatch("g1, g2 (and h1, h2) must share a degree")
    gs = [g1 ** 2, g1 * g2, g2 ** 2]
    hs = [h1 ** 2, h1 * h2, h2 ** 2]
    return [multiply(a, b) for a in gs for b in hs]


def nine_products_span_dim4(g1, g2, h1, h2) -> int:
    return rank_exact([list(p.coeffs) for p in nine_products(g1, g2, h1, h2)])


def nine_products_span_dim(g: BinaryForm, h: BinaryForm) -> int:
    """Span dimension of the nine products of ``g, conj(g), h, conj(h)``."""
    return nine_products_span_dim4(g, g.conjugate(), h, h.conjugate())


def split_factors(R: RootPairSet, c1: int, c2: int) -> tuple[BinaryForm, BinaryForm]:
    """``(g, h)`` with ``g h`` the factor of code ``c1`` and ``g conj(h)`` that of ``c2``.

    ``g`` carries the scale ``s`` and the roots where the codes agree.
    """
    if c1 == c2:
        raise EqualCodes("codes coincide")
    w1 = chosen_roots(R, c1)
    diff = c1 ^ c2
    shared = [w for j, w in enumerate(w1) if not (diff >> j) & 1]
    other = [w for j, w in enumerate(w1) if (diff >> j) & 1]
    return linear_product(shared, R.scale_sqrt), linear_product(other, 1)


@dataclass(frozen=True)
class StructuralReport:
    u_dim: int
    nine_dim: int
    is_edge: bool


def is_edge_structural(R: RootPairSet, c1: int, c2: int) -> StructuralReport:
    if not (is_canonical(c1) and is_canonical(c2)):
        raise InvalidInput("codes must be canonical")
    g, h = split_factors(R, c1, c2)
    gb, hb = g.conjugate(), h.conjugate()
    U = [g * h, g * hb, gb * h, gb * hb]
    u_dim = rank_exact([list(p.coeffs) for p in U])
    nine = nine_products_span_dim4(g, gb, h, hb)
    return StructuralReport(u_dim=u_dim, nine_dim=nine, is_edge=(u_dim == 4 and nine == 9))


@dataclass(frozen=True)
class PairReport:
    codes: tuple[int, int]
    split: tuple[int, int]
    u_dim: int
    face_dim: int
    midpoint_rank: int
    is_edge: bool
    nine_dim: Optional[int] = None

    def to_json(self, d: int) -> dict:
        return {
            "codes": [code_to_bits(c, d) for c in self.codes],
            "split": list(self.split),
            "u_dim": self.u_dim,
            "face_dim": self.face_dim,
            "midpoint_rank": self.midpoint_rank,
        }


@dataclass(frozen=True)
class EdgeGraph:
    d: int
    vertices: tuple
    edges: tuple
    pairs: tuple = field(repr=False)
    points: tuple = field(default=(), repr=False, compare=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def pair_count(self) -> int:
        return len(self.pairs)

    def to_json(self) -> dict:
        bits = lambda c: code_to_bits(c, self.d)
        return {
            "d": self.d,
            "vertices": [bits(c) for c in self.vertices],
            "edges": [[bits(a), bits(b)] for a, b in self.edges],
            "pairs": [p.to_json(self.d) for p in self.pairs],
        }

    def to_dot(self) -> str:
        bits = lambda c: code_to_bits(c, self.d)
        lines = [f"graph gram_edges_d{self.d} {{"]
        for c in self.vertices:
            if self.d == 4:
                color = "lightblue" if bin(c).count("1") % 2 == 0 else "salmon"
                lines.append(f'  "{bits(c)}" [style=filled, fillcolor={color}];')
            else:
                lines.append(f'  "{bits(c)}";')
        for a, b in self.edges:
            lines.append(f'  "{bits(a)}" -- "{bits(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _evaluate_pair(args):
    R, (c1, p1), (c2, p2) = args
    seg = segment_face_dim(p1, p2)
    split = split_degrees(c1, c2, R.d)
    # dim U = 4 cannot happen inside the 3-dimensional space of quadrics
    struct = is_edge_structural(R, c1, c2) if R.d >= 3 else None
    if struct is not None and (struct.is_edge != seg.is_edge or struct.u_dim != seg.u_dim):
        raise CrossCheckMismatch(
            f"pair {code_to_bits(c1, R.d)}/{code_to_bits(c2, R.d)}: face_dim {seg.face_dim}, "
            f"u_dim {seg.u_dim} vs structural u_dim {struct.u_dim}, nine-products dim {struct.nine_dim}",
            pair=(c1, c2),
            report={"segment": seg.to_json(), "structural": struct.__dict__},
        )
    return PairReport(
        codes=(c1, c2), split=split, u_dim=seg.u_dim, face_dim=seg.face_dim,
        midpoint_rank=seg.midpoint_rank, is_edge=seg.is_edge,
        nine_dim=None if struct is None else struct.nine_dim,
    )


def edge_graph(R: RootPairSet, max_degree: int = MAX_DEGREE, jobs: int = 1) -> EdgeGraph:
    """Edge graph on the ``2^(d-1)`` rank-two extreme points of Gram(f).

    Raises :class:`CrossCheckMismatch` if the two edge criteria disagree on
    any pair.
    """
    if R.d < 2:
        raise InvalidInput("edge graphs need d >= 2")
    points = enumerate_rank2(R, max_degree=max_degree)
    tasks = [(R, a, b) for a, b in combinations(points, 2)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_evaluate_pair, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        reports = [_evaluate_pair(t) for t in tasks]
    edges = tuple(r.codes for r in reports if r.is_edge)
    return EdgeGraph(
        d=R.d,
        vertices=tuple(c for c, _ in points),
        edges=edges,
        pairs=tuple(reports),
        points=tuple(p for _, p in points),
    )


@dataclass(frozen=True)
class GraphShape:
    kind: str
    parts: Optional[tuple] = None
    class_rule_holds: Optional[bool] = None

    @property
    def label(self) -> str:
        if self.kind == "complete_bipartite":
            return f"complete_bipartite({len(self.parts[0])},{len(self.parts[1])})"
        return self.kind


def classify_graph(E: EdgeGraph) -> GraphShape:
    """Classify as empty, complete, complete bipartite, or other.

    For complete bipartite graphs the parts are reported (the part holding
    the first vertex comes first), and ``class_rule_holds`` says whether two
    distinct codes share a part exactly when their split is ``(2, 2)``.
    """
    n = len(E.vertices)
    edge_set = {frozenset(e) for e in E.edges}
    total = n * (n - 1) // 2
    if not edge_set:
        return GraphShape("empty")
    if len(edge_set) == total:
        return GraphShape("complete")
    v0 = E.vertices[0]
    first = [v for v in E.vertices if v == v0 or frozenset((v0, v)) not in edge_set]
    second = [v for v in E.vertices if v not in first]
    side = {v: 0 for v in first}
    side.update({v: 1 for v in second})
    bipartite = bool(second) and all(
        (frozenset((a, b)) in edge_set) == (side[a] != side[b])
        for a, b in combinations(E.vertices, 2))
    if not bipartite:
        return GraphShape("other")
    rule = all(
        (side[a] == side[b]) == (split_degrees(a, b, E.d) == (2, 2))
        for a, b in combinations(E.vertices, 2))
    return GraphShape("complete_bipartite", parts=(tuple(first), tuple(second)), class_rule_holds=rule)
