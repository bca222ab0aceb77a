"""
Zonotopes spanned by totally unimodular matrices
================================================

Membership of a zonotope in the class T_d is decided by rewriting its
generators in a basis, scaling rows and columns along a spanning forest, and
testing the result for total unimodularity.
"""

from mvse_lab import tumat
from mvse_lab.corpus import HEXAGON, OCTAGON
from mvse_lab.zonotope import Zonotope

print("[[1,0,1],[0,1,1]] TU:", tumat.is_tu([[1, 0, 1], [0, 1, 1]]))
v = tumat.tu_violation([[1, 0, 1, 1], [0, 1, 1, -1]])
print("first violating minor: rows", v.rows, "cols", v.cols, "det", v.det)

# Gomory's lemma: d + 2 columns whose six joined minors are all nonzero
D = [[1, 0, 1, 1], [0, 1, 1, -1]]
cert = tumat.gomory_certificate(D)
print("certificate columns", cert.column_indices, "minors", [str(x) for x in cert.minors(D)])

G = [[1, 0, 1], [0, 1, 2]]
Ghat, rec = tumat.forest_scaling(G)
print("scaled:", [[str(x) for x in r] for r in Ghat.tolist()])
print("row scales", [str(x) for x in rec.row_scales], "column scales", [str(x) for x in rec.col_scales])

for name, Z in [("hexagon", HEXAGON), ("skew hexagon", Zonotope([(1, 0), (0, 1), (1, 2)])), ("octagon", OCTAGON)]:
    res = tumat.td_membership(Z)
    if res:
        print(name, "-> member, scales", [str(a) for a in res.generator_scales])
    else:
        print(name, "-> refused:", res.reason)
