"""Certificates that a graph needs impropriety above k, and the color-count bound.

Run: python3 demos/05_lower_bounds.py
"""

import networkx as nx

from improper_interval import verify
from improper_interval.bounds import (
    cor_Kmn,
    cor_Kn,
    doubled_certificate,
    lb_erdos,
    lb_subdivision,
    lb_tree,
    that_upper,
    tree_stats,
)
from improper_interval.constructions import color_hertz
from improper_interval.families import gen_complete, gen_cycle, gen_hertz, gen_projective_plane
from improper_interval.solver import mu_int

# Bipartite graphs of every impropriety: the Hertz graph H_{p,k} with p = 2k^2 - 1.
for k in (1, 2, 3):
    p = max(2, 2 * k * k - 1)
    tree = gen_hertz(p, k, with_d=False)
    stats = tree_stats(tree)
    cert = lb_tree(tree, k - 1)
    ok = verify(gen_hertz(p, k), color_hertz(p, k), k)
    print(f"H_({p},{k}): leaves {stats.leaf_count}, M = {stats.path_max};"
          f" {cert.lhs} > {cert.rhs} so mu_int > {k - 1}; a {k}-improper coloring verifies: {ok}")
    print(f"  certified graph is H_({p},{k}):",
          nx.is_isomorphic(cert.graph.to_networkx(), gen_hertz(p, k).to_networkx()))

cert = lb_subdivision(gen_complete(10), 1)
print("subdivided K10 plus apex:", cert.lhs, ">", cert.rhs)
print("closed form for K10:", cor_Kn(10, 1).lhs, ">", cor_Kn(10, 1).rhs)
print("closed form for K10,10:", cor_Kmn(10, 10, 1).lhs, ">", cor_Kmn(10, 10, 1).rhs)
cert = lb_erdos(gen_projective_plane(3), [1] * 13, 1)
print("projective plane of order 3, one copy per line:", cert.lhs, ">", cert.rhs,
      f"({cert.graph.n} vertices)")

# Doubling a colored graph into a bipartite one adds exactly two colors.
g = gen_cycle(5)
res = mu_int(g)
h, beta = doubled_certificate(g, res.witness)
print(f"C5 doubled: {h.n} vertices, {len(set(beta))} colors (was {len(set(res.witness))}),"
      f" verifies: {verify(h, beta, h.max_degree)}, bound for H: {that_upper(h)}")
