"""Shared plumbing for the constructive colorings."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from ..graph_core import EdgeColoring, Graph, MultiGraph, verify
from ..subroutines.edge_coloring import exact_class1_color, vizing_edge_color
from ..subroutines.factor import two_factorize


class ColoringResult(NamedTuple):
    coloring: EdgeColoring
    k: int


class ConstructionFailure(RuntimeError):
    """A construction produced something its theorem says cannot happen.

    Raised instead of patching the construction, so the offending instance
    is reported rather than hidden.
    """


def checked(g: Graph, coloring: Sequence[int], k: int, what: str) -> ColoringResult:
    c = tuple(coloring)
    if not verify(g, c, k):
        raise ConstructionFailure(f"{what}: output is not a {k}-improper interval coloring")
    return ColoringResult(c, k)


def double_graph(g: Graph, join: Sequence[int]) -> Graph:
    """Two copies of ``g`` (vertex ``v`` and ``v + n``) with ``v``-``v+n`` joined for ``v`` in ``join``.

    Edge ``i < m`` is edge ``i`` of the first copy, so restricting a coloring
    to the first ``m`` entries gives a coloring of ``g``.
    """
    n = g.n
    edges = list(g.edges)
    edges += [(u + n, v + n) for u, v in g.edges]
    edges += [(v, v + n) for v in join]
    return Graph(2 * n, tuple(edges))


def odd_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) % 2]


def factor_coloring(g: MultiGraph, r: int) -> list[int]:
    """Color each edge by the index (1-based) of its 2-factor."""
    color = [0] * len(g.edges)
    for i, factor in enumerate(two_factorize(g, r), start=1):
        for e in factor:
            color[e] = i
    return color


def pad_with_loops(g: Graph, degree: int) -> MultiGraph:
    """``g`` as a multigraph made ``degree``-regular by loops (each adds 2)."""
    edges = list(g.edges)
    for v in range(g.n):
        gap = degree - g.degree(v)
        if gap < 0 or gap % 2:
            raise ValueError(f"vertex {v} cannot be padded to degree {degree}")
        edges += [(v, v)] * (gap // 2)
    return MultiGraph(g.n, tuple(edges))


def two_color_by_factors(g: Graph) -> EdgeColoring:
    """Colors {1, 2} for a graph of maximum degree at most 4.

    Two copies joined at odd-degree vertices, padded with loops to a
    4-regular multigraph and split into two 2-factors; factor i gets
    color i and the first copy is kept. Vertices of degree 3 or 4 see both
    colors, vertices of degree 1 or 2 see a single color.
    """
    if g.max_degree > 4:
        raise ValueError("maximum degree above 4")
    if g.m == 0:
        return ()
    doubled = double_graph(g, odd_vertices(g))
    color = factor_coloring(pad_with_loops(doubled, 4), 2)
    return tuple(color[: g.m])


def proper_coloring_within(h: Graph, palette: int, what: str) -> EdgeColoring:
    """Proper edge coloring of ``h`` with colors ``1..palette``, component by component.

    Components of maximum degree below ``palette`` use Vizing's bound;
    components of maximum degree ``palette`` need a Class-1 coloring.
    """
    color = [0] * h.m
    for ids in h.component_edges():
        sub, _ = h.compact(ids)
        if sub.max_degree < palette:
            local = vizing_edge_color(sub)
        else:
            local = exact_class1_color(sub, max_edges=400, time_budget=300.0)
            if local is None:
                raise ConstructionFailure(f"{what}: a component is Class 2")
        for e, x in zip(ids, local):
            color[e] = x
    assert max(color, default=0) <= palette
    return tuple(color)
