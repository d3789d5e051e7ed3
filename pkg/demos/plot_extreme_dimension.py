"""
Dimension of the rank-r extreme points
======================================

The set of rank ``r`` extreme points has dimension ``(r-2)(2d-r+1)/2``.
Here the count is checked through the rank of the differential of the
sum-of-squares map at random witnesses.
"""

from gramspec import exdim_report, pataki_binary

print(" d  r  dim  jacobian  fibre")
for d in range(2, 9):
    for r in pataki_binary(d).ranks():
        rep = exdim_report(d, r, seed=d * 31 + r)
        assert rep.certified and rep.identity_holds
        print(f"{d:2d} {r:2d} {rep.formula_value:4d} {rep.jacobian_rank:9d} {rep.fiber_dim:6d}")
