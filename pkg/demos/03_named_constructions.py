"""Explicit colorings of the named families, each confirmed by the verifier.

Run: python3 demos/03_named_constructions.py
"""

from improper_interval import spectrum, verify
from improper_interval.constructions import (
    color_cartesian,
    color_hertz,
    color_M,
    color_multipartite,
    color_S,
    color_theta,
)
from improper_interval.families import (
    cartesian_product,
    gen_complete_multipartite,
    gen_cycle,
    gen_hertz,
    gen_M,
    gen_S,
    gen_theta,
)

g = gen_S(7, 7, 7)
print("S(7,7,7):", g.n, "vertices, 2-improper interval:", verify(g, color_S(7, 7, 7), 2))
g = gen_M(5, 5, 5)
print("M(5,5,5):", g.n, "vertices, 2-improper interval:", verify(g, color_M(5, 5, 5), 2))

# Hertz graph H_{7,2}: vertex d sees every color 1..7 exactly twice.
h = gen_hertz(7, 2)
ch = color_hertz(7, 2)
print("H_{7,2}: verifies with k=2:", verify(h, ch, 2), "| spectrum at d:", spectrum(h, ch, h.vertex("d")).counts)

th = gen_theta((1, 2, 3, 2, 4))
ct = color_theta(th.graph, th.path_of_edge)
print("theta(1,2,3,2,4):", ct, "verifies:", verify(th.graph, ct, 2))

for sizes in [(3, 3), (2, 2, 2), (3, 2, 1, 1)]:
    res = color_multipartite(sizes)
    print(f"K{sizes}: k = {res.k}, verifies:", verify(gen_complete_multipartite(sizes), res.coloring, res.k))

# Product of two odd cycles from their all-ones colorings.
c5 = gen_cycle(5)
res = color_cartesian(c5, c5, (1,) * 5, (1,) * 5)
print("C5 x C5: k =", res.k, "colors", sorted(set(res.coloring)), "verifies:",
      verify(cartesian_product(c5, c5), res.coloring, res.k))
