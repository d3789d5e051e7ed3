"""
Which ranks can extreme points have?
====================================

The Pataki bounds confine the rank of an extreme point. For Gram
spectrahedra of binary forms of degree ``2d`` they reduce to ``r >= 2`` and
``C(r+1, 2) <= 2d + 1``, and every rank in that range is realized.
"""

from math import comb

from gramspec import gram_from_sos, is_extreme_point, pataki_binary, pataki_general, random_qi_tuple

for d in range(1, 11):
    P = pataki_binary(d)
    G = pataki_general(d + 1, comb(d, 2))
    print(f"d={d:2d}  ranks {list(P.ranks())}  general formula agrees: {(P.r_min, P.r_max) == (G.r_min, G.r_max)}")

###############################################################################
# Realize the top rank at d = 6 with a random quadratically independent tuple.

w = random_qi_tuple(6, pataki_binary(6).r_max, seed=1)
theta = gram_from_sos(w.forms)
print("rank", theta.rank, "extreme", is_extreme_point(theta), "after", w.tries_used, "tries")
for p in w.forms:
    print("   ", p)
