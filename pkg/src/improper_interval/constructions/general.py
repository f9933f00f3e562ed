"""Upper-bound constructions for general graphs: regular, Δ <= 5, Δ - δ <= 1,
2⌈Δ/δ⌉ via splitting, and ⌈Δ/2⌉ via an Euler circuit."""

from __future__ import annotations

from math import ceil

from ..graph_core import EdgeColoring, Graph, MultiGraph, PreconditionError, ResourceLimitError
from ..subroutines.edge_coloring import exact_class1_color, vizing_edge_color
from ..subroutines.euler import euler_circuit
from ..subroutines.matching import bipartite_matching, max_matching
from ..subroutines.splitting import split_vertices
from ._common import (
    ColoringResult,
    ConstructionFailure,
    checked,
    double_graph,
    factor_coloring,
    odd_vertices,
    two_color_by_factors,
)


def _regular_by_factors(g: Graph) -> EdgeColoring:
    d = g.max_degree
    if d % 2 == 0:
        return tuple(factor_coloring(MultiGraph.from_graph(g), d // 2))
    doubled = double_graph(g, range(g.n))
    return tuple(factor_coloring(MultiGraph.from_graph(doubled), (d + 1) // 2)[: g.m])


def color_regular(g: Graph, class1_edge_limit: int = 64) -> ColoringResult:
    """k = 1 from a Class-1 coloring when one is found, otherwise k = 2 from 2-factors.

    Odd degree 2r-1 is handled by doubling the graph with a perfect matching
    between the copies, factorizing the 2r-regular result and keeping one copy.
    Every vertex then sees every color, which ``color_split_double`` relies on.
    """
    if not g.is_regular():
        raise PreconditionError("graph is not regular")
    if g.m == 0:
        return ColoringResult((), 1)
    try:
        proper = exact_class1_color(g, max_edges=class1_edge_limit, time_budget=30.0)
    except ResourceLimitError:
        proper = None
    if proper is not None:
        return checked(g, proper, 1, "regular Class-1 coloring")
    return checked(g, _regular_by_factors(g), 2, "regular 2-factor coloring")


def color_maxdeg5(g: Graph) -> ColoringResult:
    """2-improper interval coloring for Δ <= 5 using at most four colors."""
    delta = g.max_degree
    if delta > 5:
        raise PreconditionError(f"maximum degree {delta} exceeds 5")
    if g.m == 0:
        return ColoringResult((), 2)
    if delta <= 2:
        return checked(g, [1] * g.m, 2, "Δ<=2 coloring")
    if delta <= 4:
        return checked(g, two_color_by_factors(g), 2, "Δ<=4 factor coloring")
    return checked(g, _maxdeg5_colors(g), 2, "Δ=5 coloring")


def _maxdeg5_colors(g: Graph) -> list[int]:
    top = [v for v in range(g.n) if g.degree(v) == 5]
    sub, old = g.induced(top)
    matching = [g.edge_index(old[a], old[b]) for a, b in (sub.edges[e] for e in max_matching(sub))]
    in_m = set(matching)
    h_ids = [e for e in range(g.m) if e not in in_m]
    hdeg = [0] * g.n
    for e in h_ids:
        for x in g.edges[e]:
            hdeg[x] += 1
    five = [v for v in range(g.n) if hdeg[v] == 5]
    # M' : a matching of H covering its degree-5 vertices; they are pairwise
    # non-adjacent (M is maximum), and every other vertex has H-degree <= 4,
    # so Hall's condition holds
    in_h = set(h_ids)
    cover: list[int] = []
    if five:
        if any(g.has_edge(a, b) and g.edge_index(a, b) in in_h for a in five for b in five if a < b):
            raise ConstructionFailure("degree-5 vertices of G - M are adjacent")
        right = sorted({g.other(e, v) for v in five for e in g.incident(v) if e in in_h})
        ridx = {w: i for i, w in enumerate(right)}
        adj = [[ridx[g.other(e, v)] for e in g.incident(v) if e in in_h] for v in five]
        match = bipartite_matching(len(five), len(right), adj)
        if any(y < 0 for y in match):
            raise ConstructionFailure("no matching covers the degree-5 vertices of G - M")
        cover = [g.edge_index(v, right[y]) for v, y in zip(five, match)]
    in_cover = set(cover)
    h2_ids = [e for e in h_ids if e not in in_cover]
    h2 = Graph(g.n, tuple(g.edges[e] for e in h2_ids))
    alpha = two_color_by_factors(h2)
    beta: dict[int, int] = {e: x for e, x in zip(h2_ids, alpha)}
    for e in matching:
        beta[e] = 3
    top_color = [0] * g.n
    for e, x in beta.items():
        for v in g.edges[e]:
            top_color[v] = max(top_color[v], x)
    gamma = [0] * g.m
    for e, x in beta.items():
        gamma[e] = x
    for e in cover:
        u, v = g.edges[e]
        gamma[e] = 3 if top_color[u] == 2 and top_color[v] == 2 else 0
    if min(gamma) == 0:
        gamma = [x + 1 for x in gamma]
    return gamma


def color_near_regular(g: Graph) -> ColoringResult:
    """2-improper interval coloring when Δ - δ <= 1."""
    delta = g.max_degree
    if g.m and delta - g.min_degree > 1:
        raise PreconditionError(f"Δ - δ = {delta - g.min_degree} exceeds 1")
    if delta <= 5:
        return color_maxdeg5(g)
    top = [v for v in range(g.n) if g.degree(v) == delta]
    sub, old = g.induced(top)
    matching = [g.edge_index(old[a], old[b]) for a, b in (sub.edges[e] for e in max_matching(sub))]
    in_m = set(matching)
    h_ids = [e for e in range(g.m) if e not in in_m]
    h = Graph(g.n, tuple(g.edges[e] for e in h_ids))
    hdelta = h.max_degree
    heavy = [v for v in range(h.n) if h.degree(v) == delta]
    independent = not any(h.has_edge(a, b) for i, a in enumerate(heavy) for b in heavy[i + 1 :])
    if hdelta != delta - 1 and not independent:
        raise ConstructionFailure("G - M has adjacent vertices of maximum degree")
    if hdelta < delta:
        phi = list(vizing_edge_color(h))  # at most Δ(H) + 1 = Δ colors
    else:
        found = exact_class1_color(h, max_edges=400, time_budget=300.0)
        if found is None:
            raise ConstructionFailure("G - M satisfies Fournier's condition but is Class 2")
        phi = list(found)
    at: list[set[int]] = [set() for _ in range(h.n)]
    for e, x in enumerate(phi):
        for v in h.edges[e]:
            at[v].add(x)
    # orient every path/cycle of H[M_1 ∪ M_Δ] so in- and out-degree are <= 1
    two = [e for e, x in enumerate(phi) if x in (1, delta)]
    adj: dict[int, list[int]] = {}
    for e in two:
        for v in h.edges[e]:
            adj.setdefault(v, []).append(e)
    arcs: list[tuple[int, int, int]] = []  # (edge, tail, head)
    used = set()
    starts = sorted(adj, key=lambda v: (len(adj[v]) != 1, v))  # path ends first
    for s in starts:
        x = s
        while True:
            nxt = [e for e in adj[x] if e not in used]
            if not nxt:
                break
            e = min(nxt)
            used.add(e)
            y = h.other(e, x)
            arcs.append((e, x, y))
            x = y
    new = list(phi)
    for e, _, b in arcs:
        free = [c for c in range(2, delta) if c not in at[b]]
        if free:
            new[e] = free[0]
    color = [0] * g.m
    for e, x in zip(h_ids, new):
        color[e] = x
    for e in matching:
        color[e] = delta
    return checked(g, color, 2, "Δ-δ<=1 coloring")


def color_split_double(g: Graph, edge_limit: int = 200_000) -> ColoringResult:
    """2⌈Δ/δ⌉-improper interval coloring.

    Vertices are split into pieces of degree δ (plus one smaller remainder),
    and the split graph is completed to a δ-regular supergraph by repeated
    doubling: two copies, with every deficient vertex joined to its twin,
    which raises each deficient degree by one per round. The supergraph is
    colored by ``color_regular``; every vertex there sees the same color
    set, so the projection onto ``g`` is interval.
    """
    if g.m == 0:
        return ColoringResult((), 2)
    delta, low = g.max_degree, g.min_degree
    if low < 1:
        raise PreconditionError("δ must be at least 1")
    k = 2 * ceil(delta / low)
    split, origin = split_vertices(g, low)
    sup = split
    while not sup.is_regular():
        if 2 * sup.m > edge_limit:
            raise ResourceLimitError(f"regular supergraph would exceed {edge_limit} edges")
        sup = double_graph(sup, [v for v in range(sup.n) if sup.degree(v) < low])
    colors, _ = color_regular(sup)
    return checked(g, colors[: g.m], k, "2⌈Δ/δ⌉ coloring")


def color_half_delta(g: Graph) -> ColoringResult:
    """⌈Δ/2⌉-improper interval coloring for Δ >= 6, colors {1, 2} per component.

    Components of maximum degree below 6 go to ``color_maxdeg5`` and regular
    components to ``color_regular``; both give at most 2 <= ⌈Δ/2⌉.
    """
    delta = g.max_degree
    if delta < 6:
        return color_maxdeg5(g)
    k = ceil(delta / 2)
    color = [0] * g.m
    for ids in g.component_edges():
        sub, _ = g.compact(ids)
        if sub.max_degree < 6:
            local = color_maxdeg5(sub).coloring
        elif sub.is_regular():
            local = color_regular(sub).coloring
        else:
            local = _euler_two_colors(sub)
        for e, x in zip(ids, local):
            color[e] = x
    return checked(g, color, k, "⌈Δ/2⌉ coloring")


def _euler_two_colors(g: Graph) -> list[int]:
    delta = g.max_degree
    budget = ceil(delta / 2)
    odd = odd_vertices(g)
    h = double_graph(g, odd) if odd else g
    v = min(x for x in range(g.n) if g.degree(x) == delta)
    (trail,) = euler_circuit(MultiGraph.from_graph(h), start=v)
    phi = [0] * h.m
    for i, st in enumerate(trail):
        phi[st.edge] = 1 if i % 2 == 0 else 2

    def over_budget() -> bool:
        return max(_count_at(g, phi, v, 1), _count_at(g, phi, v, 2)) > budget

    if not over_budget():
        return phi[: g.m]
    # first vertex along the circuit whose degree in G is below Δ
    pos = next(
        (i for i, st in enumerate(trail) if g.degree(st.head % g.n) <= delta - 1), None
    )
    if pos is None:
        raise ConstructionFailure("Euler circuit never reaches a vertex of degree below Δ")
    x = trail[pos].head
    e1 = trail[pos].edge
    flip_to = pos
    if delta % 2 == 0 and x < g.n and e1 < g.m and g.degree(x) == delta - 1:
        join = next(e for e in range(2 * g.m, h.m) if x in h.edges[e])
        if phi[join] == phi[e1]:  # case (c): extend the switch to the join edge
            flip_to = next(i for i, st in enumerate(trail) if st.edge == join)
    for st in trail[: flip_to + 1]:
        phi[st.edge] = 3 - phi[st.edge]
    return phi[: g.m]


def _count_at(g: Graph, phi: list[int], v: int, c: int) -> int:
    return sum(1 for e in g.incident(v) if phi[e] == c)
