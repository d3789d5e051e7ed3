"""
Rank-two Gram matrices of a positive sextic
===========================================

A positive binary form of degree 6 with simple roots factors as
``f = g * conj(g)`` in four essentially different ways. Each factorization
gives a sum of two squares and hence a rank-two Gram matrix.
"""

from fractions import Fraction

from gramspec import GaussianRational, RootPairSet, enumerate_rank2, form_from_roots, is_extreme_point
from gramspec.factorization import code_to_bits, rank2_forms

# three roots in the upper half plane fix f up to scale
R = RootPairSet(3, (GaussianRational(0, 1), GaussianRational(1, 2), GaussianRational(-2, 1)))
f = form_from_roots(R)
print("f =", f)

###############################################################################
# Every canonical code picks one root from each conjugate pair.

for code, theta in enumerate_rank2(R):
    p, q = rank2_forms(R, code)
    print(code_to_bits(code, 3), " p =", p, "  q =", q)
    print("    rank", theta.rank, " extreme:", is_extreme_point(theta), " mu == f:", theta.f == f)

###############################################################################
# Scaling the form by a rational square keeps everything exact.

R2 = RootPairSet(3, R.roots, Fraction(3, 2))
print("scaled leading coefficient:", form_from_roots(R2).coeffs[0])
