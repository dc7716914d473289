"""
Sinc building blocks
====================

The iterated formulas are assembled from three pieces: the
double-exponential change of variable, the sine-integral constants
sigma_k, and the one-dimensional Sinc rules.  This script looks at each.
"""

import math

from sinc_iterint import DeMap, build_sigma_table, de_sinc_indefinite, de_sinc_quadrature, make_node

# The map squeezes nodes towards both endpoints very quickly.  Near the
# right end x itself rounds to b, but the stored distance does not.
m = DeMap(0.0, 1.0)
for t in (0.0, 1.0, 2.0, 3.0, 4.0):
    node = make_node(m, t)
    print(f"t={t:3.1f}  x={node.x:.17f}  dist_b={node.dist_b:.3e}  w={node.w:.3e}")

# sigma_k = Si(pi k)/pi tends to 1/2 with an oscillating tail
table = build_sigma_table(8)
for k in range(0, 9):
    print(f"sigma_{k} = {table[k]: .15f}   |sigma_k - 1/2| = {abs(table[k] - 0.5):.2e}")

# Quadrature of an integrand with an endpoint singularity: int_0^1 x^{-1/2} dx = 2
for h in (0.5, 0.25, 0.125):
    M = math.ceil(math.log(4 / h) / h)
    approx = de_sinc_quadrature(lambda n: 1 / math.sqrt(n.dist_a), m, h, M, M)
    print(f"h={h:<6} M={M:<3d} quadrature error = {abs(approx - 2):.2e}")

# Indefinite integration: int_0^x cos(s) ds = sin(x), with one node set for every x
h, N = 0.2, 30
for x in (0.1, 0.5, 0.9):
    approx = de_sinc_indefinite(lambda n: math.cos(n.x), m, h, N, N, x)
    print(f"x={x}  indefinite error = {abs(approx - math.sin(x)):.2e}")
