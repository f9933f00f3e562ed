"""The exact solver: smallest impropriety and the largest number of colors.

Run: python3 demos/02_exact_solver.py
"""

from improper_interval.bounds import that_upper
from improper_interval.families import cartesian_product, gen_complete, gen_cycle, gen_theta, gen_wheel
from improper_interval.solver import exists_coloring, mu_int, t_hat

print("mu_int on cycles, complete graphs and wheels")
for name, g in [
    *((f"C{n}", gen_cycle(n)) for n in range(3, 9)),
    *((f"K{n}", gen_complete(n)) for n in range(2, 7)),
    *((f"W{n}", gen_wheel(n)) for n in range(4, 11)),
]:
    res = mu_int(g)
    print(f"  {name:4} mu_int = {res.value}   witness {res.witness}")

# Theta graphs: impropriety 2 exactly when Eulerian with an odd edge count.
for lengths in [(1, 3, 5), (2, 2, 2), (1, 2, 4, 2)]:
    th = gen_theta(lengths)
    print(f"  theta{lengths}: m={th.graph.m}, mu_int = {mu_int(th.graph).value}")

# Deciding a single k gives either a witness or an exhaustive "none".
print("C5 with k=1:", exists_coloring(gen_cycle(5), 1))

# Two odd cycles multiply to a graph that still needs impropriety 2.
prod = cartesian_product(gen_cycle(3), gen_cycle(3))
print("C3 x C3: m =", prod.m, " mu_int =", mu_int(prod).value)

print("\nt_hat: most colors in any improper interval coloring")
for name, g in [("K2", gen_complete(2)), ("C4", gen_cycle(4)), ("C6", gen_cycle(6)), ("K4", gen_complete(4))]:
    res = t_hat(g)
    print(f"  {name}: t_hat = {res.value}, upper bound {that_upper(g)}, witness {res.witness}")
