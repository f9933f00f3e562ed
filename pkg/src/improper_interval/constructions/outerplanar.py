"""Outerplanar graphs: 2-improper colorings for Δ <= 8 and ⌈Δ/4⌉+1 in general.

Both work block by block. The outer (Hamiltonian) cycle of a block gets
colors 2 and 3 alternately; the chords get a proper coloring whose colors
all land in 1..4, so every vertex's spectrum contains {2, 3} or is {2}.
"""

from __future__ import annotations

from math import ceil

from ..graph_core import Graph, PreconditionError
from ..subroutines.blocks import assemble_block_colorings, blocks
from ..subroutines.splitting import (
    is_outerplanar,
    outer_cycle,
    split_outerplanar_to_degree,
)
from ._common import ColoringResult, checked, proper_coloring_within


def _block_local(g: Graph, ids: list[int]) -> tuple[Graph, list[int], list[int]]:
    """Block as a graph whose vertex i is the i-th vertex of its outer cycle.

    Returns (local graph with boundary 0..L-1, cycle edge positions, chord positions);
    positions index into ``ids``. For an odd cycle the cycle starts at a
    vertex of degree 2 in the block.
    """
    verts = sorted({x for e in ids for x in g.edges[e]})
    cyc = outer_cycle(g, verts)
    deg = {v: 0 for v in verts}
    for e in ids:
        for x in g.edges[e]:
            deg[x] += 1
    if len(cyc) % 2:
        start = next(i for i, v in enumerate(cyc) if deg[v] == 2)
        cyc = cyc[start:] + cyc[:start]
    pos = {v: i for i, v in enumerate(cyc)}
    local_edges = tuple((pos[g.edges[e][0]], pos[g.edges[e][1]]) for e in ids)
    L = len(cyc)
    cycle_pos, chord_pos = [], []
    for j, (a, b) in enumerate(local_edges):
        (cycle_pos if (b - a) % L in (1, L - 1) else chord_pos).append(j)
    # order cycle edges along the cycle 0-1, 1-2, ..., (L-1)-0
    cycle_pos.sort(key=lambda j: _cycle_rank(local_edges[j], L))
    local = Graph(L, local_edges, None, tuple(range(L)))
    return local, cycle_pos, chord_pos


def _cycle_rank(edge: tuple[int, int], L: int) -> int:
    a, b = sorted(edge)
    return L - 1 if (a, b) == (0, L - 1) else a


def _color_blocks(g: Graph, chord_coloring, k: int) -> ColoringResult:
    dec = blocks(g)
    colorings = []
    for ids in dec.blocks:
        ids = list(ids)
        if len(ids) == 1:
            colorings.append([1])
            continue
        local, cycle_pos, chord_pos = _block_local(g, ids)
        c = [0] * len(ids)
        for i, j in enumerate(cycle_pos):
            c[j] = 2 if i % 2 == 0 else 3
        if chord_pos:
            chords = Graph(local.n, tuple(local.edges[j] for j in chord_pos), None, local.boundary)
            for j, x in zip(chord_pos, chord_coloring(chords)):
                c[j] = x
        colorings.append(c)
    color = assemble_block_colorings(g, dec.blocks, colorings, k)
    return checked(g, color, k, "outerplanar coloring")


def _check_outerplanar(g: Graph) -> None:
    if not is_outerplanar(g):
        raise PreconditionError("graph is not outerplanar")


def color_outerplanar8(g: Graph) -> ColoringResult:
    """2-improper interval coloring of an outerplanar graph with Δ <= 8."""
    _check_outerplanar(g)
    if g.max_degree > 8:
        raise PreconditionError(f"maximum degree {g.max_degree} exceeds 8")

    def chords(h: Graph) -> list[int]:
        # proper coloring with at most 6 colors, then 5 -> 1 and 6 -> 4
        base = proper_coloring_within(h, 6, "chord coloring")
        return [{5: 1, 6: 4}.get(x, x) for x in base]

    return _color_blocks(g, chords, 2)


def color_outerplanar_quarter(g: Graph) -> ColoringResult:
    """(⌈Δ/4⌉+1)-improper interval coloring of an outerplanar graph."""
    _check_outerplanar(g)
    if g.max_degree <= 8:
        return color_outerplanar8(g)
    k = ceil(g.max_degree / 4) + 1

    def chords(h: Graph) -> list[int]:
        split, _ = split_outerplanar_to_degree(h, 4)
        return list(proper_coloring_within(split, 4, "split chord coloring"))

    return _color_blocks(g, chords, k)
