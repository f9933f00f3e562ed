"""Petersen 2-factorization of 2r-regular multigraphs."""

from __future__ import annotations

from ..graph_core import MultiGraph, PreconditionError
from .euler import euler_circuit
from .matching import bipartite_matching


def two_factorize(g: MultiGraph, r: int) -> list[list[int]]:
    """Split the edges of a 2r-regular multigraph into r spanning 2-regular factors.

    Each Euler circuit is oriented, giving in- and out-degree r everywhere.
    The out/in incidence graph is then r-regular bipartite and its perfect
    matchings (peeled one at a time, lowest vertex first) are exactly the
    2-factors. Returns edge indices per factor, each list sorted.
    """
    if r < 1:
        raise PreconditionError("r must be positive")
    bad = [v for v, d in enumerate(g.degrees) if d != 2 * r]
    if bad:
        raise PreconditionError(
            f"graph is not {2 * r}-regular: vertex {bad[0]} has degree {g.degrees[bad[0]]}"
        )
    # arcs[x] = list of (head, edge) leaving x, in circuit order
    arcs: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for circuit in euler_circuit(g):
        for st in circuit:
            arcs[st.tail].append((st.head, st.edge))
    for lst in arcs:
        lst.sort(key=lambda a: (a[0], a[1]))
    factors = []
    for _ in range(r):
        adj = [[h for h, _ in lst] for lst in arcs]
        match = bipartite_matching(g.n, g.n, adj)
        if any(y < 0 for y in match):
            raise AssertionError("regular bipartite multigraph without a perfect matching")
        factor = []
        for x, y in enumerate(match):
            i = next(i for i, (h, _) in enumerate(arcs[x]) if h == y)
            factor.append(arcs[x].pop(i)[1])
        factors.append(sorted(factor))
    return factors
