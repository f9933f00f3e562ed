"""Vertex splitting, plus the outerplanar embedding helpers it relies on."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import networkx as nx

from ..graph_core import Graph, PreconditionError
from .blocks import blocks

VertexSplitMap = tuple[int, ...]  # split-graph vertex -> source vertex


def split_vertices(g: Graph, target: int) -> tuple[Graph, VertexSplitMap]:
    """Split every vertex of degree above ``target`` into full chunks of
    ``target`` edges plus one remainder chunk.

    Incident edges are chunked in edge-index order. Edge ``i`` of the result
    is the image of edge ``i`` of ``g``, so colorings transfer unchanged.
    """
    if target < 1:
        raise PreconditionError("target degree must be positive")
    new_id: dict[tuple[int, int], int] = {}
    origin: list[int] = []
    labels: list[str] = []
    endpoint: dict[tuple[int, int], int] = {}  # (edge, old vertex) -> new vertex
    for v in range(g.n):
        inc = g.incident(v)
        chunks = [inc[i : i + target] for i in range(0, len(inc), target)] or [()]
        for j, chunk in enumerate(chunks):
            nid = len(origin)
            new_id[(v, j)] = nid
            origin.append(v)
            labels.append(g.label(v) if len(chunks) == 1 else f"{g.label(v)}#{j + 1}")
            for e in chunk:
                endpoint[(e, v)] = nid
    edges = tuple((endpoint[(i, u)], endpoint[(i, v)]) for i, (u, v) in enumerate(g.edges))
    return Graph(len(origin), edges, tuple(labels)), tuple(origin)


def contract(h: Graph, split_map: VertexSplitMap, n: int) -> list[tuple[int, int]]:
    """Edges of ``h`` mapped back through the split map."""
    return [tuple(sorted((split_map[u], split_map[v]))) for u, v in h.edges]


# --- outerplanar embeddings --------------------------------------------------


def is_outerplanar(g: Graph) -> bool:
    """A graph is outerplanar iff adding a vertex joined to everything keeps it planar."""
    h = g.to_networkx()
    apex = g.n
    h.add_edges_from((apex, v) for v in range(g.n))
    planar, _ = nx.check_planarity(h)
    return planar


def chords_cross(order: Sequence[int], g: Graph) -> bool:
    """True if two edges of ``g`` cross when vertices sit on a circle in ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    spans = [tuple(sorted((pos[u], pos[v]))) for u, v in g.edges]
    for (a, b), (c, d) in combinations(spans, 2):
        if a < c < b < d or c < a < d < b:
            return True
    return False


def outer_cycle(g: Graph, vertices: Sequence[int]) -> list[int]:
    """Hamiltonian (outer) cycle of a 2-connected outerplanar block.

    Repeatedly removes a degree-2 vertex ``v`` with neighbours ``a, b``,
    adding the edge ``ab`` when missing, down to a triangle; the removed
    vertices are then re-inserted between their two neighbours.
    """
    vs = sorted(vertices)
    if len(vs) == 2:
        return vs
    vset = set(vs)
    adj = {v: {w for w in g.neighbors(v) if w in vset} for v in vs}
    removed: list[tuple[int, int, int]] = []
    alive = set(vs)
    while len(alive) > 3:
        v = next((x for x in sorted(alive) if len(adj[x]) == 2), None)
        if v is None:
            raise PreconditionError("block is not outerplanar (no degree-2 vertex)")
        a, b = sorted(adj[v])
        adj[a].discard(v)
        adj[b].discard(v)
        adj[a].add(b)
        adj[b].add(a)
        alive.discard(v)
        del adj[v]
        removed.append((v, a, b))
    cycle = sorted(alive)
    for v, a, b in reversed(removed):
        i, j = cycle.index(a), cycle.index(b)
        if (i + 1) % len(cycle) == j:
            cycle.insert(i + 1, v)
        elif (j + 1) % len(cycle) == i:
            cycle.insert(j + 1, v)
        else:
            raise PreconditionError("block is not outerplanar")
    for i, v in enumerate(cycle):
        if not g.has_edge(v, cycle[(i + 1) % len(cycle)]):
            raise PreconditionError("block is not outerplanar")
    return cycle


def outer_boundary(g: Graph) -> tuple[int, ...]:
    """A circular vertex order in which all edges are non-crossing chords.

    Uses ``g.boundary`` when present. Otherwise the outer cycle of each
    block is spliced into its parent block right after the shared cut
    vertex; components are concatenated.
    """
    if g.boundary is not None:
        if chords_cross(g.boundary, g):
            raise PreconditionError("supplied boundary order has crossing edges")
        return g.boundary
    if not is_outerplanar(g):
        raise PreconditionError("graph is not outerplanar")
    dec = blocks(g)
    bverts = [sorted(dec.block_vertices(g, i)) for i in range(len(dec.blocks))]
    at_vertex: dict[int, list[int]] = {}
    for i, vs in enumerate(bverts):
        for v in vs:
            at_vertex.setdefault(v, []).append(i)
    cycles = [outer_cycle(g, vs) for vs in bverts]
    done = [False] * len(bverts)
    seen = [False] * g.n
    order: list[int] = []

    def emit_children(x: int) -> None:
        for b in at_vertex.get(x, []):
            if not done[b]:
                visit(b, x)

    def visit(b: int, c: int) -> None:
        done[b] = True
        cyc = cycles[b]
        i = cyc.index(c)
        for x in cyc[i + 1 :] + cyc[:i]:
            order.append(x)
            seen[x] = True
            emit_children(x)

    for r in range(g.n):
        if seen[r]:
            continue
        order.append(r)
        seen[r] = True
        emit_children(r)
    result = tuple(order)
    assert not chords_cross(result, g)
    return result


def split_vertex_outerplanar(g: Graph, v: int, k: int, l: int) -> Graph:
    """Split ``v`` into ``v'`` (degree k, keeps id ``v``) and ``v''`` (degree l, id ``n``).

    Neighbours of ``v`` are read clockwise along the outer boundary; the
    first k go to ``v'`` and the rest to ``v''``, and ``v''`` is placed just
    before ``v'`` on the boundary, so no chords cross. Edge indices are kept.
    """
    if k < 1 or l < 1:
        raise PreconditionError("both parts of the split must have positive degree")
    if k + l != g.degree(v):
        raise PreconditionError(f"k + l = {k + l} but d({v}) = {g.degree(v)}")
    order = outer_boundary(g)
    pos = {x: i for i, x in enumerate(order)}
    n = g.n
    inc = sorted(g.incident(v), key=lambda e: (pos[g.other(e, v)] - pos[v]) % n)
    second = set(inc[k:])
    edges = []
    for i, (a, b) in enumerate(g.edges):
        if i in second:
            a, b = (n, b) if a == v else (a, n)
        edges.append((a, b))
    labels = None
    if g.labels is not None:
        labels = g.labels[:v] + (g.labels[v] + "'",) + g.labels[v + 1 :] + (g.labels[v] + "''",)
    new_order = []
    for x in order:
        if x == v:
            new_order.extend([n, v])
        else:
            new_order.append(x)
    return Graph(n + 1, tuple(edges), labels, tuple(new_order))


def split_outerplanar_to_degree(g: Graph, target: int) -> tuple[Graph, VertexSplitMap]:
    """Repeatedly peel ``target`` edges off high-degree vertices, keeping outerplanarity."""
    h = g.with_boundary(outer_boundary(g))
    origin = list(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in range(h.n):
            d = h.degree(v)
            if d > target:
                h = split_vertex_outerplanar(h, v, target, d - target)
                origin.append(origin[v])
                changed = True
                break
    return h, tuple(origin)
