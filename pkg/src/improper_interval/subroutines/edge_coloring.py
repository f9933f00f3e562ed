"""Proper edge colorings: König (bipartite), Misra-Gries (Vizing), exact Class-1 search,
and a bounded search for interval colorings of small bipartite graphs."""

from __future__ import annotations

import time
from typing import Sequence

from ..graph_core import EdgeColoring, Graph, ResourceLimitError, normalize
from .structure import bipartition


def _free(at: dict[int, int], limit: int) -> int:
    c = 1
    while c in at:
        c += 1
    if c > limit:
        raise AssertionError("no free color within the palette")
    return c


def konig_edge_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring of a bipartite graph with exactly Δ colors.

    Edges are colored in index order; a conflict is resolved by swapping
    the two colors along the alternating path leaving the second endpoint.
    Raises NotBipartiteError (with an odd cycle) otherwise.
    """
    bipartition(g)
    delta = g.max_degree
    color = [0] * g.m
    at: list[dict[int, int]] = [{} for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        a = _free(at[u], delta)
        b = _free(at[v], delta)
        if a not in at[v]:
            _assign(g, color, at, e, a)
            continue
        # walk v -a- . -b- . -a- ... and swap a <-> b on it
        path = []
        x, want = v, a
        while want in at[x]:
            f = at[x][want]
            path.append(f)
            x = g.other(f, x)
            want = b if want == a else a
        for f in path:
            p, q = g.edges[f]
            old = color[f]
            del at[p][old]
            del at[q][old]
        for f in path:
            new = b if color[f] == a else a
            color[f] = 0
            _assign(g, color, at, f, new)
        _assign(g, color, at, e, a)
    return tuple(color)


def _assign(g: Graph, color: list[int], at: list[dict[int, int]], e: int, c: int) -> None:
    u, v = g.edges[e]
    color[e] = c
    at[u][c] = e
    at[v][c] = e


def vizing_edge_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most Δ+1 colors (Misra-Gries fan recoloring)."""
    limit = g.max_degree + 1
    color = [0] * g.m
    at: list[dict[int, int]] = [{} for _ in range(g.n)]

    def free_on(v: int, c: int) -> bool:
        return c not in at[v]

    def fan(x: int, f: int) -> list[int]:
        out = [f]
        nbrs = [g.other(e, x) for e in g.incident(x) if color[e]]
        used = {f}
        grown = True
        while grown:
            grown = False
            last = out[-1]
            for w in nbrs:
                if w in used:
                    continue
                if free_on(last, color[g.edge_index(x, w)]):
                    out.append(w)
                    used.add(w)
                    grown = True
                    break
        return out

    def recolor(e: int, c: int) -> None:
        u, v = g.edges[e]
        old = color[e]
        if old:
            if at[u].get(old) == e:
                del at[u][old]
            if at[v].get(old) == e:
                del at[v][old]
        color[e] = c
        if c:
            at[u][c] = e
            at[v][c] = e

    for e0, (x, f) in enumerate(g.edges):
        F = fan(x, f)
        c = _free(at[x], limit)
        d = _free(at[F[-1]], limit)
        # invert the cd-path leaving x (it starts with a d-edge at x)
        path = []
        y, want = x, d
        while want in at[y]:
            e = at[y][want]
            path.append(e)
            y = g.other(e, y)
            want = c if want == d else d
        for e in path:
            recolor(e, 0)
        for i, e in enumerate(path):
            recolor(e, c if i % 2 == 0 else d)
        # shortest fan prefix ending at a vertex where d is free
        w = None
        for i, vtx in enumerate(F):
            if i > 0 and not free_on(F[i - 1], color[g.edge_index(x, vtx)]):
                break
            if free_on(vtx, d):
                w = i
                break
        assert w is not None, "Misra-Gries invariant violated"
        for i in range(w):
            nxt = color[g.edge_index(x, F[i + 1])]
            recolor(g.edge_index(x, F[i + 1]), 0)
            recolor(g.edge_index(x, F[i]), nxt)
        recolor(g.edge_index(x, F[w]), d)
        assert color[e0]
    return tuple(color)


def is_overfull(g: Graph, delta: int) -> bool:
    """Edge count exceeds what ``delta`` matchings can cover."""
    return g.m > delta * (g.n // 2)


def exact_class1_color(
    g: Graph, max_edges: int = 64, time_budget: float = 120.0
) -> EdgeColoring | None:
    """Proper Δ-edge-coloring of ``g``, or ``None`` when ``g`` is Class 2.

    Bipartite graphs go straight to König's construction, and an overfull
    component of maximum degree Δ certifies Class 2 without search. Otherwise
    a backtracking search picks the uncolored edge with the fewest available
    colors and only opens a fresh color in canonical order.
    """
    delta = g.max_degree
    if g.m == 0:
        return ()
    from .structure import is_bipartite

    if is_bipartite(g):
        return konig_edge_color(g)
    for comp in g.components():
        sub, _ = g.induced(comp)
        if sub.max_degree == delta and is_overfull(sub, delta):
            return None
    if g.m > max_edges:
        raise ResourceLimitError(
            f"exact Class-1 search limited to {max_edges} edges, graph has {g.m}"
        )
    full = (1 << (delta + 1)) - 2  # bits 1..delta
    mask = [0] * g.n
    color = [0] * g.m
    deadline = time.perf_counter() + time_budget
    degsum = [g.degree(u) + g.degree(v) for u, v in g.edges]
    nodes = 0

    def dfs(left: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if (nodes & 1023) == 0 and time.perf_counter() > deadline:
            raise ResourceLimitError("exact Class-1 search time budget exhausted")
        if left == 0:
            return True
        best, best_avail, best_key = -1, 0, None
        for e in range(g.m):
            if color[e]:
                continue
            u, v = g.edges[e]
            avail = full & ~(mask[u] | mask[v])
            k = avail.bit_count()
            if k == 0:
                return False
            key = (k, -degsum[e])
            if best_key is None or key < best_key:
                best, best_avail, best_key = e, avail, key
        u, v = g.edges[best]
        for c in range(1, min(used + 1, delta) + 1):
            bit = 1 << c
            if not best_avail & bit:
                continue
            color[best] = c
            mask[u] |= bit
            mask[v] |= bit
            if dfs(left - 1, max(used, c)):
                return True
            mask[u] &= ~bit
            mask[v] &= ~bit
            color[best] = 0
        return False

    if dfs(g.m, 0):
        return tuple(color)
    return None


def interval_coloring_search(
    g: Graph,
    extra_sets: Sequence[Sequence[int]] = (),
    extra_caps: Sequence[int] = (),
    max_edges: int = 64,
    time_budget: float = 120.0,
) -> EdgeColoring | None:
    """Interval (proper) coloring of ``g`` found by bounded search, fewest colors first.

    Tries ``t = Δ, Δ+1, ..., 2n-3`` colors per component. ``extra_sets`` adds
    edge groups that must also see an interval, each color at most
    ``extra_caps[i]`` times (used to keep split vertices consistent with
    their originals).
    """
    from ..solver import IntervalSearch

    if g.m == 0:
        return ()
    if g.m > max_edges:
        raise ResourceLimitError(f"interval search limited to {max_edges} edges")
    deadline = time.perf_counter() + time_budget
    sets = [g.incident(v) for v in range(g.n) if g.degree(v)]
    caps = [1] * len(sets)
    sets += [tuple(s) for s in extra_sets]
    caps += list(extra_caps)
    # components with respect to all constraint sets
    parent = list(range(g.m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in sets:
        for e in s[1:]:
            parent[find(e)] = find(s[0])
    groups: dict[int, list[int]] = {}
    for e in range(g.m):
        groups.setdefault(find(e), []).append(e)
    color = [0] * g.m
    for edges in groups.values():
        local = {e: i for i, e in enumerate(edges)}
        lsets, lcaps = [], []
        for s, cap in zip(sets, caps):
            if s and s[0] in local:
                lsets.append([local[e] for e in s])
                lcaps.append(cap)
        verts = {x for e in edges for x in g.edges[e]}
        delta = max(len(s) for s in lsets)
        found = None
        for t in range(delta, max(delta, 2 * len(verts) - 3) + 1):
            search = IntervalSearch(len(edges), lsets, lcaps, span=t, deadline=deadline)
            try:
                found = search.run()
            except ResourceLimitError:
                raise
            if found is not None:
                break
        if found is None:
            return None
        for e, x in zip(edges, normalize(found)):
            color[e] = x
    return tuple(color)
