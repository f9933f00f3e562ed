"""Bipartite upper bounds through vertex splitting: ⌈Δ/δ⌉, ⌈Δ/3⌉, and ⌈Δ/4⌉ without degree-3 vertices."""

from __future__ import annotations

from math import ceil

from ..graph_core import Graph, PreconditionError
from ..subroutines.edge_coloring import interval_coloring_search, konig_edge_color
from ..subroutines.splitting import split_vertices
from ..subroutines.structure import bipartition
from ..subroutines.factor import two_factorize
from ._common import ColoringResult, ConstructionFailure, checked, double_graph, pad_with_loops


def color_bipartite_split(
    g: Graph, target: int | None = None, max_edges: int = 64, time_budget: float = 120.0
) -> ColoringResult:
    """Split to degree ``target`` (default δ) and project a proper coloring of the pieces.

    ``target = δ``: König's Δ-coloring of the split graph gives every full
    piece all δ colors, so each original vertex sees an interval.
    ``target = 3``: an interval coloring of the pieces is searched for, with
    the extra requirement that the union of the pieces of each vertex is an
    interval too (per-piece intervals alone do not guarantee that).
    """
    bipartition(g)
    if g.m == 0:
        return ColoringResult((), 1)
    low = min(d for d in g.degrees if d)  # isolated vertices carry no constraint
    if target is None:
        target = low
    if target not in (low, 3):
        raise PreconditionError(f"target must be δ = {low} or 3, got {target}")
    k = ceil(g.max_degree / target)
    split, origin = split_vertices(g, target)
    if target == low:
        colors = konig_edge_color(split)
    else:
        pieces = [0] * g.n
        for v in origin:
            pieces[v] += 1
        extra = [g.incident(v) for v in range(g.n) if pieces[v] > 1]
        caps = [pieces[v] for v in range(g.n) if pieces[v] > 1]
        colors = interval_coloring_search(
            split, extra, caps, max_edges=max_edges, time_budget=time_budget
        )
        if colors is None:
            raise ConstructionFailure("no interval coloring of the split graph was found")
    return checked(g, colors, k, f"bipartite split to degree {target}")


def color_bipartite_quarter(g: Graph) -> ColoringResult:
    """⌈Δ/4⌉-improper interval coloring of a bipartite graph without degree-3 vertices."""
    bipartition(g)
    if any(d == 3 for d in g.degrees):
        raise PreconditionError("graph has a vertex of degree 3")
    if g.m == 0:
        return ColoringResult((), 1)
    k = ceil(g.max_degree / 4)
    split, _ = split_vertices(g, 4)
    join = [v for v in range(split.n) if split.degree(v) in (1, 3)]
    doubled = double_graph(split, join)
    multi = pad_with_loops(doubled, 4)
    factors = two_factorize(multi, 2)
    color = [0] * doubled.m
    for base, factor in zip((1, 3), factors):
        real = [e for e in factor if e < doubled.m]
        for cycle in _cycles(doubled, real):
            for i, e in enumerate(cycle):
                color[e] = base + i % 2
    return checked(g, color[: g.m], k, "bipartite ⌈Δ/4⌉ coloring")


def _cycles(g: Graph, edge_ids: list[int]) -> list[list[int]]:
    """Edge sequences of the cycles of a 2-regular edge set, each walked from its least edge."""
    adj: dict[int, list[int]] = {}
    for e in edge_ids:
        for v in g.edges[e]:
            adj.setdefault(v, []).append(e)
    seen: set[int] = set()
    out = []
    for e0 in sorted(edge_ids):
        if e0 in seen:
            continue
        cycle, e, x = [], e0, g.edges[e0][1]
        while e not in seen:
            seen.add(e)
            cycle.append(e)
            e = next(f for f in adj[x] if f != e)
            x = g.other(e, x)
        out.append(cycle)
    return out
