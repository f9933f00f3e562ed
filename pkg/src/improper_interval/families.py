"""Generators for the graph families that carry explicit colorings or lower bounds.

Vertex labels follow the usual notation (``u0``, ``x3``, ``b_2``,
``c_1^(4)``, ``v_2^(l_5)``) so generated instances can be checked by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .graph_core import Graph, InputError, PreconditionError
from .subroutines.structure import is_tree


class _Builder:
    def __init__(self) -> None:
        self.labels: list[str] = []
        self.index: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []

    def vertex(self, name: str) -> int:
        if name not in self.index:
            self.index[name] = len(self.labels)
            self.labels.append(name)
        return self.index[name]

    def edge(self, a: str, b: str) -> None:
        self.edges.append((self.vertex(a), self.vertex(b)))

    def build(self) -> Graph:
        return Graph(len(self.labels), tuple(self.edges), tuple(self.labels))


def gen_S(a: int, b: int, c: int) -> Graph:
    """S_{a,b,c}: hexagon u1 v1 u2 v2 u3 v3, hub u0, and a/b/c two-paths u0-x-u1 etc."""
    if min(a, b, c) < 1:
        raise InputError("a, b, c must be positive")
    g = _Builder()
    for name in ("u0", "u1", "u2", "u3", "v1", "v2", "v3"):
        g.vertex(name)
    for p, q in [("u1", "v1"), ("v1", "u2"), ("u2", "v2"), ("v2", "u3"), ("u3", "v3"), ("v3", "u1")]:
        g.edge(p, q)
    for letter, count, u in (("x", a, "u1"), ("y", b, "u2"), ("z", c, "u3")):
        for i in range(1, count + 1):
            g.edge("u0", f"{letter}{i}")
            g.edge(u, f"{letter}{i}")
    return g.build()


def gen_M(a: int, b: int, c: int) -> Graph:
    """M_{a,b,c}: hub u0 and three groups each joined to u0 and two of u1, u2, u3."""
    if min(a, b, c) < 1:
        raise InputError("a, b, c must be positive")
    g = _Builder()
    for name in ("u0", "u1", "u2", "u3"):
        g.vertex(name)
    for letter, count, (p, q) in (
        ("x", a, ("u1", "u2")),
        ("y", b, ("u2", "u3")),
        ("z", c, ("u3", "u1")),
    ):
        for i in range(1, count + 1):
            w = f"{letter}{i}"
            g.edge("u0", w)
            g.edge(p, w)
            g.edge(q, w)
    return g.build()


def hertz_label(i: int, j: int) -> str:
    return f"c_{j}^({i})"


def gen_hertz(p: int, q: int, with_d: bool = True) -> Graph:
    """Hertz graph H_{p,q}: a - b_i - c_j^(i) - d. ``with_d=False`` gives the tree H_{p,q} - d.

    ``q = 1`` is accepted so that the whole family H_{p,k}, k >= 1, is available.
    """
    if p < 2 or q < 1:
        raise InputError("need p >= 2 and q >= 1")
    g = _Builder()
    g.vertex("a")
    for i in range(1, p + 1):
        g.vertex(f"b_{i}")
    if with_d:
        g.vertex("d")
    for i in range(1, p + 1):
        g.edge("a", f"b_{i}")
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            g.edge(f"b_{i}", hertz_label(i, j))
    if with_d:
        for i in range(1, p + 1):
            for j in range(1, q + 1):
                g.edge(hertz_label(i, j), "d")
    return g.build()


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def gen_path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def gen_complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def gen_star(s: int) -> Graph:
    return Graph(s + 1, tuple((0, i) for i in range(1, s + 1)))


def gen_circulant(n: int, jumps: Sequence[int]) -> Graph:
    """Circulant graph on Z_n with the given connection set (each jump j and -j)."""
    edges = set()
    for v in range(n):
        for j in jumps:
            w = (v + j) % n
            if w != v:
                edges.add((min(v, w), max(v, w)))
    return Graph(n, tuple(sorted(edges)))


def gen_wheel(n: int) -> Graph:
    """W_n: rim cycle on vertices 0..n-2 joined to hub n-1."""
    if n < 4:
        raise InputError("wheel needs at least 4 vertices")
    rim = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    spokes = [(i, n - 1) for i in range(n - 1)]
    labels = tuple(f"r{i}" for i in range(n - 1)) + ("hub",)
    return Graph(n, tuple(rim + spokes), labels)


@dataclass(frozen=True)
class ThetaGraph:
    graph: Graph
    path_of_edge: tuple[int, ...]  # 0-based path index per edge


def gen_theta(lengths: Sequence[int]) -> ThetaGraph:
    """Generalized theta graph: m internally disjoint u-v paths of the given lengths."""
    if len(lengths) < 2:
        raise InputError("a theta graph needs at least two paths")
    if min(lengths) < 1:
        raise InputError("path lengths must be positive")
    if sum(1 for x in lengths if x == 1) > 1:
        raise InputError("two paths of length 1 would be parallel edges")
    g = _Builder()
    g.vertex("u")
    g.vertex("v")
    membership = []
    for i, length in enumerate(lengths, start=1):
        names = ["u"] + [f"p{i}_{j}" for j in range(1, length)] + ["v"]
        for a, b in zip(names, names[1:]):
            g.edge(a, b)
            membership.append(i - 1)
    return ThetaGraph(g.build(), tuple(membership))


def theta_membership(g: Graph) -> tuple[int, ...]:
    """Recover the path index of every edge of a theta graph labelled ``u``, ``v``."""
    u, v = g.vertex("u"), g.vertex("v")
    path_of = [-1] * g.m
    count = 0
    for e0 in g.incident(u):
        if path_of[e0] >= 0:
            continue
        x, e = g.other(e0, u), e0
        path_of[e] = count
        while x != v:
            nxt = [f for f in g.incident(x) if f != e]
            if len(nxt) != 1:
                raise PreconditionError("not a theta graph")
            e = nxt[0]
            path_of[e] = count
            x = g.other(e, x)
        count += 1
    if min(path_of, default=0) < 0:
        raise PreconditionError("not a theta graph")
    return tuple(path_of)


def subdivide(g: Graph) -> Graph:
    """S(G): every edge v_i v_j replaced by a path through a new vertex w_ij."""
    b = _Builder()
    for v in range(g.n):
        b.vertex(g.label(v))
    for u, v in g.edges:
        w = f"w_{g.label(u)},{g.label(v)}"
        b.edge(g.label(u), w)
        b.edge(g.label(v), w)
    return b.build()


def hat(g: Graph) -> Graph:
    """Ĝ: S(G) plus an apex ``u*`` adjacent to every subdivision vertex."""
    s = subdivide(g)
    n = s.n
    extra = tuple((v, n) for v in range(g.n, n))
    return Graph(n + 1, s.edges + extra, s.labels + ("u*",))


@dataclass(frozen=True)
class TildeGraph:
    graph: Graph
    leaves: tuple[int, ...]
    max_degree: int
    stated_degree_holds: bool  # whether Δ equals the number of leaves


def tilde(t: Graph) -> TildeGraph:
    """T̃: the tree plus an apex ``u*`` joined to all of its leaves."""
    if not is_tree(t):
        raise PreconditionError("tilde needs a tree")
    leaves = tuple(v for v in range(t.n) if t.degree(v) == 1)
    if len(leaves) < 2:
        raise PreconditionError("tilde needs a tree with at least two leaves")
    labels = tuple(t.label(v) for v in range(t.n)) + ("u*",)
    edges = t.edges + tuple((v, t.n) for v in leaves)
    g = Graph(t.n + 1, edges, labels)
    return TildeGraph(g, leaves, g.max_degree, g.max_degree == len(leaves))


@dataclass(frozen=True)
class ProjectivePlane:
    order: int
    lines: tuple[frozenset[int], ...]  # points are 1..order^2+order+1
    coordinates: tuple[tuple[int, int, int], ...] = field(compare=False, default=())

    @property
    def num_points(self) -> int:
        return self.order**2 + self.order + 1


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def _normalized_triples(q: int) -> list[tuple[int, int, int]]:
    pts = [(1, y, z) for y in range(q) for z in range(q)]
    pts += [(0, 1, z) for z in range(q)]
    pts.append((0, 0, 1))
    return pts


def gen_projective_plane(n: int) -> ProjectivePlane:
    """PG(2, n) for prime n from homogeneous coordinates over Z_n."""
    if not _is_prime(n):
        raise InputError(f"only prime orders are supported, got {n}")
    pts = _normalized_triples(n)
    lines = []
    for a in pts:
        lines.append(
            frozenset(
                i + 1
                for i, p in enumerate(pts)
                if (a[0] * p[0] + a[1] * p[1] + a[2] * p[2]) % n == 0
            )
        )
    return ProjectivePlane(n, tuple(lines), tuple(pts))


def check_projective_plane(plane: ProjectivePlane) -> None:
    """Raise AssertionError unless the incidence axioms hold."""
    n, N = plane.order, plane.num_points
    assert len(plane.lines) == N
    assert all(len(line) == n + 1 for line in plane.lines)
    assert len(set(plane.lines)) == N
    for p, q in combinations(range(1, N + 1), 2):
        assert sum(1 for line in plane.lines if p in line and q in line) == 1
    for l1, l2 in combinations(plane.lines, 2):
        assert len(l1 & l2) == 1


def gen_erd(plane: ProjectivePlane, r: Sequence[int]) -> Graph:
    """Erd(r_1, ..., r_N): apex u, the points, and r_i copies v_j^(l_i) of each line."""
    N = plane.num_points
    if len(r) != N:
        raise InputError(f"need {N} multiplicities, got {len(r)}")
    if min(r) < 1 or any(r[i] < r[i + 1] for i in range(N - 1)):
        raise InputError("multiplicities must be positive and non-increasing")
    g = _Builder()
    g.vertex("u")
    for k in range(1, N + 1):
        g.vertex(str(k))
    for i, line in enumerate(plane.lines, start=1):
        for j in range(1, r[i - 1] + 1):
            w = f"v_{j}^(l_{i})"
            g.edge("u", w)
            for k in sorted(line):
                g.edge(w, str(k))
    return g.build()


def gen_complete_multipartite(sizes: Sequence[int]) -> Graph:
    """K_{n_1,...,n_r}; vertex ``V{i}.{j}`` is the j-th vertex of part i (1-based)."""
    if len(sizes) < 2 or min(sizes) < 1:
        raise InputError("need at least two non-empty parts")
    labels, part = [], []
    for i, s in enumerate(sizes, start=1):
        for j in range(1, s + 1):
            labels.append(f"V{i}.{j}")
            part.append(i)
    n = len(labels)
    edges = tuple((a, b) for a, b in combinations(range(n), 2) if part[a] != part[b])
    return Graph(n, edges, tuple(labels))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H on V(G) x V(H); vertex (u, v) has id ``u * |V(H)| + v``.

    Edges come in two blocks: first the copies of G (for each v, in G's edge
    order), then the copies of H (for each u, in H's edge order).
    """
    nh = h.n
    vid = lambda u, v: u * nh + v  # noqa: E731
    edges = [(vid(a, v), vid(b, v)) for v in range(nh) for a, b in g.edges]
    edges += [(vid(u, a), vid(u, b)) for u in range(g.n) for a, b in h.edges]
    labels = tuple(f"({g.label(u)},{h.label(v)})" for u, v in product(range(g.n), range(nh)))
    return Graph(g.n * nh, tuple(edges), labels)
