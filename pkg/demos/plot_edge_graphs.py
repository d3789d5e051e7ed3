"""
Edges between rank-two points
=============================

For degree 8 forms the eight rank-two points are joined by exactly sixteen
edges, arranged as a complete bipartite graph. From degree 10 on every
pair is an edge.
"""

from gramspec import classify_graph, edge_graph, random_root_set
from gramspec.factorization import code_to_bits
from gramspec.rng import make_rng

rng = make_rng(2024)

for d in (3, 4, 5):
    E = edge_graph(random_root_set(d, rng))
    shape = classify_graph(E)
    print(f"d={d}: {E.edge_count} edges among {E.pair_count} pairs -> {shape.label}")

###############################################################################
# The two parts at d = 4 are the codes of even and odd weight.

E = edge_graph(random_root_set(4, rng))
shape = classify_graph(E)
for part in shape.parts:
    print([code_to_bits(c, 4) for c in part])
print("same part iff split (2, 2):", shape.class_rule_holds)

###############################################################################
# Per-pair data: the split of the factorizations decides the face dimension.

for rep in E.pairs[:6]:
    print(rep.to_json(4))

###############################################################################
# A DOT rendering, ready for ``dot -Tpng``.

print(E.to_dot())
