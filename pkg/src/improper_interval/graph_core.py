"""Graph and edge-coloring data model, and the k-improper interval verifier.

Vertices are the integers ``0..n-1``. Edges are identified by their position
in ``Graph.edges``; an edge coloring is a tuple holding one positive integer per
edge index.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

EdgeColoring = tuple[int, ...]


class InputError(ValueError):
    """Malformed or inconsistent input (bad vertex id, wrong coloring length, ...)."""


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


class ResourceLimitError(RuntimeError):
    """A search exceeded its size or time budget; no answer was produced."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with stable edge order and optional vertex labels.

    ``boundary`` optionally records a cyclic vertex order in which every edge
    is a non-crossing chord of a circle (an outerplanar embedding).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None
    boundary: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        canon = []
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InputError(f"parallel edge {key}")
            seen.add(key)
            canon.append(key)
        object.__setattr__(self, "edges", tuple(canon))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n:
                raise InputError("labels must name every vertex")
            object.__setattr__(self, "labels", labels)
        if self.boundary is not None:
            b = tuple(self.boundary)
            if sorted(b) != list(range(self.n)):
                raise InputError("boundary must list every vertex exactly once")
            object.__setattr__(self, "boundary", b)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        n: int | None = None,
        labels: Sequence[str] | None = None,
    ) -> Graph:
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, tuple(edges), None if labels is None else tuple(labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def _label_index(self) -> dict[str, int]:
        if self.labels is None:
            return {}
        return {name: v for v, name in enumerate(self.labels)}

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge indices incident to ``v``, in edge order."""
        return self._incidence[v]

    def neighbors(self, v: int) -> list[int]:
        return [self.other(i, v) for i in self._incidence[v]]

    def other(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        return b if a == v else a

    def degree(self, v: int) -> int:
        return len(self._incidence[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self._incidence)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise InputError(f"no edge {u}-{v}") from None

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex(self, label: str) -> int:
        """Vertex id carrying ``label``."""
        try:
            return self._label_index[label]
        except KeyError:
            raise InputError(f"no vertex labelled {label!r}") from None

    def edge_by_labels(self, a: str, b: str) -> int:
        return self.edge_index(self.vertex(a), self.vertex(b))

    def is_regular(self) -> bool:
        return self.n == 0 or self.max_degree == self.min_degree

    def components(self) -> list[list[int]]:
        """Vertex sets of connected components, each sorted, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.neighbors(x):
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
                        comp.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def edge_subgraph(self, edge_ids: Iterable[int]) -> Graph:
        """Spanning subgraph on the same vertex set keeping the given edges in order."""
        ids = sorted(set(edge_ids))
        return Graph(self.n, tuple(self.edges[i] for i in ids), self.labels, self.boundary)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled ``0..k-1``; also returns new-id -> old-id."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        edges = tuple(
            (new[u], new[v]) for u, v in self.edges if u in new and v in new
        )
        labels = None if self.labels is None else tuple(self.labels[v] for v in old)
        return Graph(len(old), edges, labels), old

    def compact(self, edge_ids: Sequence[int]) -> tuple[Graph, list[int]]:
        """Graph on the endpoints of the given edges, relabelled ``0..k-1`` in
        increasing old id; edge ``j`` is ``edge_ids[j]``. Also returns new-id -> old-id."""
        old = sorted({x for e in edge_ids for x in self.edges[e]})
        new = {v: i for i, v in enumerate(old)}
        edges = tuple((new[self.edges[e][0]], new[self.edges[e][1]]) for e in edge_ids)
        labels = None if self.labels is None else tuple(self.labels[v] for v in old)
        return Graph(len(old), edges, labels), old

    def component_edges(self) -> list[list[int]]:
        """Edge ids of each component that has edges, ordered by least vertex."""
        comp_of = [0] * self.n
        comps = self.components()
        for i, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = i
        out: list[list[int]] = [[] for _ in comps]
        for e, (u, _) in enumerate(self.edges):
            out[comp_of[u]].append(e)
        return [x for x in out if x]

    def with_labels(self, labels: Sequence[str]) -> Graph:
        return Graph(self.n, self.edges, tuple(labels), self.boundary)

    def with_boundary(self, boundary: Sequence[int] | None) -> Graph:
        return Graph(self.n, self.edges, self.labels, None if boundary is None else tuple(boundary))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Isomorphic copy where old vertex ``v`` becomes ``perm[v]``."""
        edges = tuple((perm[u], perm[v]) for u, v in self.edges)
        labels = None
        if self.labels is not None:
            lab = [""] * self.n
            for v, name in enumerate(self.labels):
                lab[perm[v]] = name
            labels = tuple(lab)
        return Graph(self.n, edges, labels)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph; loops allowed and count twice towards the degree."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {(u, v)} has an endpoint outside 0..{self.n - 1}")
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    @classmethod
    def from_graph(cls, g: Graph) -> MultiGraph:
        return cls(g.n, g.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        d = [0] * self.n
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return tuple(d)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            if v != u:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)


@dataclass(frozen=True)
class Spectrum:
    """Multiset of colors on the edges at one vertex."""

    vertex: int
    counts: Mapping[int, int]
    min: int
    max: int

    @property
    def colors(self) -> set[int]:
        return set(self.counts)

    def is_interval(self) -> bool:
        return len(self.counts) == self.max - self.min + 1


def _check_coloring(g: Graph, c: Sequence[int]) -> None:
    if len(c) != g.m:
        raise InputError(f"coloring has {len(c)} entries for {g.m} edges")


def spectrum(g: Graph, c: Sequence[int], v: int) -> Spectrum:
    """Colors at ``v`` with multiplicities. Isolated vertices are rejected."""
    _check_coloring(g, c)
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} not in graph on {g.n} vertices")
    counts = Counter(c[i] for i in g.incident(v))
    if not counts:
        raise InputError(f"vertex {v} has no incident edges")
    return Spectrum(v, dict(counts), min(counts), max(counts))


def impropriety_of(g: Graph, c: Sequence[int]) -> int:
    """Largest number of same-colored edges sharing an endpoint."""
    _check_coloring(g, c)
    if g.m == 0:
        raise InputError("impropriety is undefined for a graph without edges")
    worst = 0
    for v in range(g.n):
        counts = Counter(c[i] for i in g.incident(v))
        if counts:
            worst = max(worst, max(counts.values()))
    return worst


def first_gap(g: Graph, c: Sequence[int]) -> int | None:
    """First vertex whose colors do not form an integer interval, else ``None``."""
    _check_coloring(g, c)
    for v in range(g.n):
        colors = {c[i] for i in g.incident(v)}
        if colors and len(colors) != max(colors) - min(colors) + 1:
            return v
    return None


def is_interval(g: Graph, c: Sequence[int]) -> tuple[bool, int | None]:
    """``(True, None)`` if every vertex sees an interval, else ``(False, violator)``."""
    v = first_gap(g, c)
    return v is None, v


def verify(g: Graph, c: Sequence[int], k: int) -> bool:
    """True iff ``c`` is a k-improper interval edge coloring of ``g``."""
    _check_coloring(g, c)
    if k < 1:
        raise InputError("k must be positive")
    if any(x < 1 for x in c):
        return False
    if g.m == 0:
        return True
    return first_gap(g, c) is None and impropriety_of(g, c) <= k


def normalize(c: Sequence[int]) -> EdgeColoring:
    """Shift colors so the smallest one is 1."""
    if not c:
        return ()
    low = min(c)
    return tuple(x - low + 1 for x in c)


def num_colors(c: Sequence[int]) -> int:
    return len(set(c))
