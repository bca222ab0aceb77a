"""
Support-function bounds on the Banach-Mazur distance
====================================================

For two zonotopes in a fixed position the product of the extreme ratios of
their support functions bounds the distance from above.  In the plane the
extremes sit at directions orthogonal to generators, so the value is exact.
"""

import math

from mvse_lab import bmdist
from mvse_lab.corpus import HEXAGON, OCTAGON, SQUARE, cube
from mvse_lab.zonotope import Zonotope

for name, (Z1, Z2) in {
    "square vs hexagon": (SQUARE, HEXAGON),
    "square vs octagon": (SQUARE, OCTAGON),
    "hexagon vs 3 * hexagon": (HEXAGON, HEXAGON.scale(3)),
}.items():
    b = bmdist.bm_upper_bound(Z1, Z2)
    print(f"{name}: {b.upper_bound} (max {b.max_ratio} at {tuple(map(str, b.max_ratio_direction))}, min {b.min_ratio})")

# a crude float sweep agrees from below
g1, g2 = SQUARE.generators, OCTAGON.generators
ratios = []
for k in range(3600):
    c, s = math.cos(math.pi * k / 3600), math.sin(math.pi * k / 3600)
    h1 = sum(abs(c * float(a) + s * float(b)) for a, b in g1)
    h2 = sum(abs(c * float(a) + s * float(b)) for a, b in g2)
    ratios.append(h1 / h2)
print("sweep:", max(ratios) / min(ratios))

# in dimension 3 the value is a sampled estimate
b = bmdist.bm_upper_bound(cube(3), Zonotope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]), n_samples=300)
print("cube vs cube plus a diagonal segment:", b.upper_bound, "exact" if b.exact else "heuristic")
