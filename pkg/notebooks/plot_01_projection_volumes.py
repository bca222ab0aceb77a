"""
Projection volumes in a polyhedral space
========================================

A two-dimensional subspace of l_inf^3 is spanned by the columns of Y3.  Every
projection onto it maps the unit cube to a hexagon or a parallelogram, and the
ratio of that image's volume to the smallest possible one is read off from
maximal minors alone.
"""

from mvse_lab import core, mvse
from mvse_lab.corpus import Y3, simplex_points

space = mvse.make_space(Y3)
print("Plucker vector of Y3:", [core.fmt(x) for x in space.u.values])
print("minimal volume:", mvse.mvse_volume(space))

# a projection is any A with A @ Y == I
A = mvse.make_projection(space, [[0, -1, 1], [-1, 0, 1]])
print("ratio for t = (1, 1):", mvse.volume_ratio(space, A))
print("pairing sum u_S w_S:", mvse.pairing(space, A))

# the simplex family A(t) reaches ratio 1 on the whole closed simplex
ratios = {mvse.volume_ratio(space, mvse.simplex_projection(space, t)) for t in simplex_points(91)}
print("ratios over 91 simplex points:", ratios)

# random projections never beat the minimum
worst = min(mvse.volume_ratio(space, mvse.random_projection(space, seed)) for seed in range(200))
print("smallest ratio over 200 random projections:", worst)

# coordinate projections at maximal minors are parallelepiped minimizers
for S in mvse.enumerate_parallelepiped_mvse(space):
    p = mvse.coordinate_projection(space, S)
    print("rows", S, "image generators", [tuple(map(core.fmt, g)) for g in p.image().generators])
