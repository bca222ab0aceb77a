"""
A regular hexagon inside a minimal projection
=============================================

When a minimal-volume projection of l_inf^m has an image that is not a
parallelepiped, the space contains a plane whose unit ball is an affine image
of the regular hexagon.  The steps below follow that construction on Y4.
"""

from fractions import Fraction

from mvse_lab import mvse
from mvse_lab.core import RationalMatrix
from mvse_lab.corpus import Y4

space = mvse.make_space(Y4)
witness = mvse.simplex_projection(space, ["1/3", "1/3", "1/3"])
print("witness ratio:", mvse.volume_ratio(space, witness))
print("circuit among image generators:", mvse.find_circuit(witness))

rep = mvse.hexagonal_subspace(space, witness)
print("normalized matrix rows (reordered):")
for row in rep.normalized_matrix.tolist():
    print("   ", [str(x) for x in row])
print("bound checks:", rep.checks)
print("unit ball of the plane:", rep.hexagon.kind.value)

# the max-norm on the plane is max(|a|, |b|, |a + b|)
x1, x2 = rep.basis_pair
for a, b in [(1, 0), (1, 1), (2, -1), (Fraction(1, 2), Fraction(-3, 2))]:
    norm = max(abs(a * p + b * q) for p, q in zip(x1, x2))
    print((str(a), str(b)), "->", norm, "=", max(abs(a), abs(b), abs(a + b)))

# l_inf^3 itself: a single minimal projection, nothing hexagonal to find
cube_space = mvse.make_space(RationalMatrix.identity(3))
print("cube minimizers:", mvse.enumerate_parallelepiped_mvse(cube_space))
print("hexagon witness:", mvse.find_hexagon_witness(cube_space))
