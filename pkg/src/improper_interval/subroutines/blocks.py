"""Block-cut decomposition and block-wise assembly of interval colorings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from ..graph_core import EdgeColoring, Graph, InputError, normalize, verify


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]  # edge indices per block, sorted
    cut_vertices: tuple[int, ...]

    def block_vertices(self, g: Graph, i: int) -> set[int]:
        return {x for e in self.blocks[i] for x in g.edges[e]}


def blocks(g: Graph) -> BlockDecomposition:
    """2-connected blocks and bridges (as one-edge blocks), ordered by least edge index."""
    h = g.to_networkx()
    out = []
    for comp in nx.biconnected_component_edges(h):
        out.append(tuple(sorted(g.edge_index(u, v) for u, v in comp)))
    out.sort()
    cuts = tuple(sorted(nx.articulation_points(h)))
    return BlockDecomposition(tuple(out), cuts)


def assemble_block_colorings(
    g: Graph,
    block_edges: Sequence[Sequence[int]],
    colorings: Sequence[Sequence[int]],
    k: int,
) -> EdgeColoring:
    """Glue per-block k-improper interval colorings into one for ``g``.

    ``colorings[i][j]`` colors edge ``block_edges[i][j]``. Blocks are placed
    outward from the first block of each component; a new block is shifted
    so that its colors at the shared cut vertex start right above the colors
    already present there.
    """
    if len(block_edges) != len(colorings):
        raise InputError("one coloring per block is required")
    covered = sorted(e for b in block_edges for e in b)
    if covered != list(range(g.m)):
        raise InputError("blocks must partition the edge set")
    for i, (b, c) in enumerate(zip(block_edges, colorings)):
        if len(b) != len(c):
            raise InputError(f"block {i}: coloring length mismatch")
        sub = g.edge_subgraph(b)
        local = [0] * g.m
        for e, x in zip(b, c):
            local[e] = x
        if not verify(sub, [local[e] for e in sorted(b)], k):
            raise InputError(f"block {i}: coloring is not a {k}-improper interval coloring")
    color = [0] * g.m
    vertex_sets = [{x for e in b for x in g.edges[e]} for b in block_edges]
    placed = [False] * len(block_edges)
    lo: dict[int, int] = {}
    hi: dict[int, int] = {}
    while not all(placed):
        nxt, joint = None, None
        for i, verts in enumerate(vertex_sets):
            if placed[i]:
                continue
            shared = verts & hi.keys()
            if shared:
                nxt, joint = i, min(shared)
                break
        if nxt is None:
            nxt = placed.index(False)
        shift = 0
        if joint is not None:
            at_joint = [
                x for e, x in zip(block_edges[nxt], colorings[nxt]) if joint in g.edges[e]
            ]
            shift = hi[joint] + 1 - min(at_joint)
        for e, x in zip(block_edges[nxt], colorings[nxt]):
            y = x + shift
            color[e] = y
            for v in g.edges[e]:
                lo[v] = min(lo.get(v, y), y)
                hi[v] = max(hi.get(v, y), y)
        placed[nxt] = True
    return _normalize_components(g, color)


def _normalize_components(g: Graph, color: list[int]) -> EdgeColoring:
    out = list(color)
    for comp in g.components():
        cset = set(comp)
        edges = [i for i, (u, _) in enumerate(g.edges) if u in cset]
        if not edges:
            continue
        shifted = normalize([color[i] for i in edges])
        for i, x in zip(edges, shifted):
            out[i] = x
    return tuple(out)
