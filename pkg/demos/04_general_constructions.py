"""Constructions that work for whole graph classes rather than one family.

Run: python3 demos/04_general_constructions.py
"""

from math import ceil

import networkx as nx

from improper_interval import verify
from improper_interval.constructions import (
    color_bipartite_quarter,
    color_bipartite_split,
    color_half_delta,
    color_maxdeg5,
    color_near_regular,
    color_outerplanar8,
    color_outerplanar_quarter,
    color_regular,
    color_split_double,
)
from improper_interval.corpora import from_networkx, random_large_degree, random_low_degree
from improper_interval.families import gen_circulant, gen_complete, gen_complete_multipartite, gen_cycle, gen_star
from improper_interval.graph_core import Graph


def show(name, g, res, k=None):
    k = res.k if k is None else k
    print(f"  {name:28} Delta={g.max_degree:2}  k={k}  verifies={verify(g, res.coloring, k)}")


petersen = from_networkx(nx.petersen_graph())
show("regular: K5 (2-factors)", gen_complete(5), color_regular(gen_complete(5)))
show("regular: K6 (Class 1)", gen_complete(6), color_regular(gen_complete(6)))
show("regular: Petersen", petersen, color_regular(petersen))
show("Delta<=5: Petersen", petersen, color_maxdeg5(petersen), 2)
for i, g in enumerate(random_low_degree(3, seed=1)):
    show(f"Delta<=5: random #{i}", g, color_maxdeg5(g), 2)
g = gen_circulant(9, (1, 2, 4))
show("near-regular: C9(1,2,4)", g, color_near_regular(g), 2)
show("split-double: star K1,4", gen_star(4), color_split_double(gen_star(4)))
for i, g in enumerate(random_large_degree(3, seed=2)):
    show(f"ceil(Delta/2): random #{i}", g, color_half_delta(g), ceil(g.max_degree / 2))
k33 = gen_complete_multipartite((3, 3))
show("bipartite split to delta: K3,3", k33, color_bipartite_split(k33))
show("bipartite split to 3: K1,7", gen_star(7), color_bipartite_split(gen_star(7), target=3))
k66 = gen_complete_multipartite((6, 6))
show("bipartite quarter: K6,6", k66, color_bipartite_quarter(k66))
show("outerplanar Delta<=8: C7", gen_cycle(7), color_outerplanar8(gen_cycle(7)))
fan = Graph(11, tuple([(0, i) for i in range(1, 11)] + [(i, i + 1) for i in range(1, 10)]))
show("outerplanar quarter: fan(10)", fan, color_outerplanar_quarter(fan))
