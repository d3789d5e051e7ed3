"""Exact facial geometry of Gram spectrahedra of positive binary forms."""

from .errors import *  # noqa: F401,F403
from .exactnum import (
    GaussianRational,
    I,
    char_poly_sym,
    intersection_dim,
    is_pd_exact,
    is_psd_exact,
    rank_exact,
    span_dim,
)
from .forms import BinaryForm, is_quadratically_independent, multiply, product_span_dim, x1, x2
from .gram import (
    GramPoint,
    gram_affine_dim,
    gram_from_sos,
    is_extreme_point,
    mu,
    range_forms,
    segment_face_dim,
    supporting_face_dim,
)
from .pataki import PatakiInterval, pataki_binary, pataki_general
from .factorization import (
    RootPairSet,
    enumerate_rank2,
    form_from_roots,
    random_root_set,
    rank2_point,
    split_degrees,
)
from .edges import classify_graph, edge_graph, is_edge_structural, nine_products_span_dim
from .quadindep import QiWitness, lemma1a_check, random_qi_tuple
from .exdim import ExdimReport, exdim_report, sigma_jacobian_rank

__version__ = "0.1.0"
