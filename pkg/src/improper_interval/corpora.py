"""Deterministic graph collections used by the self-test and the test suite."""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement
from typing import Iterator

import networkx as nx

from .families import gen_circulant, gen_theta
from .graph_core import Graph


def from_networkx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes)
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), tuple(sorted((min(idx[a], idx[b]), max(idx[a], idx[b])) for a, b in h.edges)))


def _dedupe(graphs: list[Graph]) -> list[Graph]:
    """Drop isomorphic repeats, keeping the first representative."""
    kept: list[tuple[Graph, nx.Graph]] = []
    buckets: dict[tuple, list[nx.Graph]] = {}
    for g in graphs:
        key = (g.n, g.m, tuple(sorted(g.degrees)))
        h = g.to_networkx()
        if any(nx.is_isomorphic(h, other) for other in buckets.get(key, [])):
            continue
        buckets.setdefault(key, []).append(h)
        kept.append((g, h))
    return [g for g, _ in kept]


def connected_graphs(max_vertices: int, min_vertices: int = 2) -> list[Graph]:
    """All connected graphs on ``min_vertices..max_vertices`` vertices (up to isomorphism, n <= 7)."""
    out = []
    for h in nx.graph_atlas_g():
        if min_vertices <= h.number_of_nodes() <= max_vertices and nx.is_connected(h):
            out.append(from_networkx(h))
    return out


def theta_length_vectors(max_edges: int) -> list[tuple[int, ...]]:
    """Non-decreasing path-length vectors of simple generalized theta graphs with <= max_edges edges."""
    out = []

    def grow(prefix: list[int], total: int) -> None:
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        lo = max(prefix[-1], 2) if prefix else 1  # only one path may be a single edge
        for x in range(lo, max_edges - total + 1):
            grow(prefix + [x], total + x)

    grow([], 0)
    return out


def theta_graphs(max_edges: int) -> list:
    return [gen_theta(v) for v in theta_length_vectors(max_edges)]


def circulants(max_vertices: int) -> list[Graph]:
    """Every circulant C_n(J), 3 <= n <= max_vertices, J a non-empty subset of 1..n/2."""
    out = []
    for n in range(3, max_vertices + 1):
        jumps = range(1, n // 2 + 1)
        for r in range(1, len(jumps) + 1):
            for js in combinations(jumps, r):
                out.append(gen_circulant(n, js))
    return out


def _triangulations(n: int) -> Iterator[frozenset[tuple[int, int]]]:
    """Chord sets of all triangulations of the convex polygon 0..n-1."""

    def tri(i: int, j: int) -> list[frozenset]:
        if j - i < 2:
            return [frozenset()]
        res = []
        for k in range(i + 1, j):
            for left in tri(i, k):
                for right in tri(k, j):
                    chords = set(left | right)
                    if k - i > 1:
                        chords.add((i, k))
                    if j - k > 1:
                        chords.add((k, j))
                    res.append(frozenset(chords))
        return res

    yield from set(tri(0, n - 1))


def _polygon_graph(n: int, chords) -> Graph:
    edges = {(i, (i + 1) % n) for i in range(n)}
    edges |= set(chords)
    canon = sorted((min(a, b), max(a, b)) for a, b in edges)
    return Graph(n, tuple(canon), None, tuple(range(n)))


def maximal_outerplanar(max_vertices: int) -> list[Graph]:
    """Maximal outerplanar graphs on 3..max_vertices vertices, up to isomorphism."""
    out = []
    for n in range(3, max_vertices + 1):
        cands = [_polygon_graph(n, c) for c in sorted(_triangulations(n), key=sorted)]
        out += _dedupe(cands)
    return out


def _crossing(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (p, q), (r, s) = a, b
    return (p < r < q < s) or (r < p < s < q)


def biconnected_outerplanar(max_vertices: int) -> list[Graph]:
    """2-connected outerplanar graphs on 3..max_vertices vertices, up to isomorphism.

    Each is a polygon plus a set of pairwise non-crossing chords.
    """
    out = []
    for n in range(3, max_vertices + 1):
        chords = [(i, j) for i, j in combinations(range(n), 2) if j - i not in (1, n - 1)]
        sets: list[tuple] = []

        def grow(start: int, chosen: list) -> None:
            sets.append(tuple(chosen))
            for idx in range(start, len(chords)):
                c = chords[idx]
                if all(not _crossing(c, d) for d in chosen):
                    grow(idx + 1, chosen + [c])

        grow(0, [])
        out += _dedupe([_polygon_graph(n, s) for s in sets])
    return out


def multipartite_size_vectors(max_parts: int, max_size: int) -> list[tuple[int, ...]]:
    """Non-increasing size vectors with 2..max_parts parts, each part of size 1..max_size."""
    out = []
    for r in range(2, max_parts + 1):
        for combo in combinations_with_replacement(range(max_size, 0, -1), r):
            out.append(tuple(combo))
    return out


def multipartite_by_order(max_vertices: int) -> list[tuple[int, ...]]:
    """Every complete multipartite graph on at most ``max_vertices`` vertices (partitions, >= 2 parts)."""
    out = []

    def parts(rest: int, cap: int, prefix: list[int]) -> None:
        if rest == 0:
            if len(prefix) >= 2:
                out.append(tuple(prefix))
            return
        for x in range(min(rest, cap), 0, -1):
            parts(rest - x, x, prefix + [x])

    for n in range(2, max_vertices + 1):
        parts(n, n, [])
    return out


def random_maxdeg(count: int, max_degree: int, seed: int, n_range=(6, 14)) -> list[Graph]:
    """Random graphs with maximum degree exactly ``max_degree``, built by capped random edge insertion."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(*n_range)
        pairs = list(combinations(range(n), 2))
        rng.shuffle(pairs)
        deg = [0] * n
        edges = []
        density = rng.uniform(0.3, 1.0)
        for a, b in pairs:
            if deg[a] < max_degree and deg[b] < max_degree and rng.random() < density:
                edges.append((a, b))
                deg[a] += 1
                deg[b] += 1
        if edges and max(deg) == max_degree:
            out.append(Graph(n, tuple(sorted(edges))))
    return out


def random_low_degree(count: int, seed: int) -> list[Graph]:
    """Graphs with Δ <= 5, spread over Δ = 1..5."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        out += random_maxdeg(1, 1 + i % 5, rng.randrange(1 << 30))
    return out


def random_near_regular(count: int, seed: int) -> list[Graph]:
    """Graphs with Δ - δ <= 1 and Δ in 3..8: a random d-regular graph minus a random matching."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(3, 8)
        n = rng.randint(d + 2, 16)
        if n * d % 2:
            n += 1
        h = nx.random_regular_graph(d, n, seed=rng.randrange(1 << 30))
        edges = list(h.edges)
        rng.shuffle(edges)
        removed, touched = set(), set()
        for a, b in edges:
            if a not in touched and b not in touched and rng.random() < 0.5:
                removed.add((a, b))
                touched |= {a, b}
        h.remove_edges_from(removed)
        g = from_networkx(h)
        if g.m and g.max_degree - g.min_degree <= 1:
            out.append(g)
    return out


def random_large_degree(count: int, seed: int, lo: int = 6, hi: int = 9) -> list[Graph]:
    """Graphs with Δ in [lo, hi]."""
    rng = random.Random(seed)
    return [
        random_maxdeg(1, rng.randint(lo, hi), rng.randrange(1 << 30), n_range=(hi + 2, 18))[0]
        for _ in range(count)
    ]
