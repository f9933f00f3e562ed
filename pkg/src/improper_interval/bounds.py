"""Certified lower bounds on the impropriety and upper bounds on t̂.

A lower bound is issued as a :class:`BoundCertificate` only when the strict
counting inequality holds; otherwise the ``lb_*`` functions return ``None``
(inconclusive). The ``*_sides`` helpers expose both evaluated sides either way.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .families import ProjectivePlane, gen_erd, hat, subdivide, tilde
from .graph_core import (
    EdgeColoring,
    Graph,
    InputError,
    PreconditionError,
    is_interval,
    normalize,
    spectrum,
)
from .subroutines.structure import has_triangle, is_tree, tree_path


@dataclass(frozen=True)
class TreeStats:
    leaf_count: int
    path_max: int
    witness_path: tuple[int, ...]


@dataclass(frozen=True)
class BoundCertificate:
    """Proof that ``graph`` has no ``k``-improper interval coloring (lhs > rhs)."""

    theorem: str
    params: dict = field(hash=False)
    k: int
    lhs: int
    rhs: int
    graph: Graph | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.lhs > self.rhs:
            raise ValueError("a certificate needs lhs > rhs")


def _path_value(t: Graph, path: Sequence[int]) -> int:
    # edges on the path plus edges leaving it: sum of (d - 1) over its vertices, plus 1
    return sum(t.degree(v) - 1 for v in path) + 1


def tree_stats(t: Graph) -> TreeStats:
    """Leaf count and M(T), the best value of |E(P)| + #edges leaving P over all paths P.

    Extending a path by one more tree edge never lowers that value, so the
    maximum is attained between two leaves, and only leaf pairs are checked.
    """
    if not is_tree(t):
        raise PreconditionError("tree_stats needs a tree")
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    if t.n == 1:
        return TreeStats(0, 0, (0,))
    best, witness = -1, ()
    for i, a in enumerate(leaves):
        for b in leaves[i + 1 :]:
            p = tree_path(t, a, b)
            val = _path_value(t, p)
            if val > best:
                best, witness = val, tuple(p)
    return TreeStats(len(leaves), best, witness)


def tree_sides(t: Graph, k: int) -> tuple[int, int]:
    s = tree_stats(t)
    return s.leaf_count, k * (s.path_max + 2)


def lb_tree(t: Graph, k: int) -> BoundCertificate | None:
    """μ_int(T̃) > k whenever |F(T)| > k(M(T) + 2); T̃ is T plus a vertex joined to its leaves."""
    if k < 0:
        raise InputError("k must be non-negative")
    lhs, rhs = tree_sides(t, k)
    if lhs <= rhs:
        return None
    return BoundCertificate("tree", {"n": t.n, "m": t.m}, k, lhs, rhs, tilde(t).graph)


def subdivision_path_max(g: Graph) -> int:
    """Max over all shortest paths in S(G) between subdivision vertices of Σ (d_Ĝ(v) - 1).

    Every pair of subdivision vertices is considered, and for each pair the
    heaviest of its shortest paths. This is at least the quantity the
    counting argument needs, so the resulting certificate stays sound.
    """
    s = subdivide(g)
    n0 = g.n
    weight = [s.degree(v) - 1 for v in range(s.n)]
    for w in range(n0, s.n):
        weight[w] += 1  # the apex of Ĝ adds one edge to every subdivision vertex
    adj = [s.neighbors(v) for v in range(s.n)]
    best = 0
    for src in range(n0, s.n):
        dist = [-1] * s.n
        acc = [0] * s.n
        dist[src] = 0
        acc[src] = weight[src]
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    acc[y] = acc[x] + weight[y]
                    queue.append(y)
                elif dist[y] == dist[x] + 1:
                    acc[y] = max(acc[y], acc[x] + weight[y])
        for w in range(n0, s.n):
            if dist[w] >= 0:
                best = max(best, acc[w])
    return best


def subdivision_sides(g: Graph, k: int) -> tuple[int, int]:
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    return g.m, k * (1 + subdivision_path_max(g))


def lb_subdivision(g: Graph, k: int) -> BoundCertificate | None:
    """μ_int(Ĝ) > k whenever |E(G)| > k(1 + max shortest-path weight)."""
    if k < 0:
        raise InputError("k must be non-negative")
    lhs, rhs = subdivision_sides(g, k)
    if lhs <= rhs:
        return None
    return BoundCertificate("subdivision", {"n": g.n, "m": g.m}, k, lhs, rhs, hat(g))


def cor_Kn(n: int, k: int) -> BoundCertificate | None:
    """μ_int(K̂_n) > k whenever n² - n > 2k(2n + 3)."""
    lhs, rhs = n * n - n, 2 * k * (2 * n + 3)
    if lhs <= rhs:
        return None
    return BoundCertificate("cor_Kn", {"n": n}, k, lhs, rhs)


def cor_Kmn(m: int, n: int, k: int) -> BoundCertificate | None:
    """μ_int(K̂_{m,n}) > k whenever mn > k(m + n + 5)."""
    lhs, rhs = m * n, k * (m + n + 5)
    if lhs <= rhs:
        return None
    return BoundCertificate("cor_Kmn", {"m": m, "n": n}, k, lhs, rhs)


def erdos_sides(plane: ProjectivePlane, r: Sequence[int], k: int) -> tuple[int, int]:
    n = plane.order
    if len(r) != plane.num_points:
        raise InputError(f"need {plane.num_points} multiplicities")
    head = sum(r[: n + 1])
    tail = sum(r[n + 1 :])
    return tail - (k - 1) * head, 2 * k * (n + 1)


def lb_erdos(plane: ProjectivePlane, r: Sequence[int], k: int) -> BoundCertificate | None:
    """μ_int(Erd(r)) > k whenever Σ_{i>n+1} r_i - (k-1) Σ_{i<=n+1} r_i > 2k(n+1)."""
    lhs, rhs = erdos_sides(plane, r, k)
    if lhs <= rhs:
        return None
    params = {"order": plane.order, "r": list(r)}
    return BoundCertificate("erdos", params, k, lhs, rhs, gen_erd(plane, r))


def that_upper(g: Graph) -> int:
    """n - 1 for triangle-free graphs, 2n - 3 otherwise (connected, n >= 2)."""
    if g.n < 2:
        raise InputError("need at least two vertices")
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    return g.n - 1 if not has_triangle(g) else 2 * g.n - 3


def doubled_certificate(g: Graph, c: Sequence[int]) -> tuple[Graph, EdgeColoring]:
    """Bipartite double H of ``g`` with an improper interval coloring using t + 2 colors.

    Vertex ``i`` of H is u_{i+1} and ``n + i`` is w_{i+1}. An edge v_i v_j of
    color a yields u_i w_j and u_j w_i of color a + 1; the diagonal u_i w_i
    gets S_high(v_i) + 2; finally the diagonal of the first vertex whose
    lowest color is 1 is recolored to 1.
    """
    if len(c) != g.m or g.m == 0 or min(c) < 1 or not is_interval(g, c)[0]:
        raise InputError("coloring is not an improper interval coloring")
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    c = normalize(c)
    n = g.n
    edges, color = [], []
    for (i, j), a in zip(g.edges, c):
        edges += [(i, n + j), (j, n + i)]
        color += [a + 1, a + 1]
    lows = []
    for i in range(n):
        s = spectrum(g, c, i)
        edges.append((i, n + i))
        color.append(s.max + 2)
        lows.append(s.min)
    i0 = lows.index(1)
    color[2 * g.m + i0] = 1
    labels = tuple(f"u_{i + 1}" for i in range(n)) + tuple(f"w_{i + 1}" for i in range(n))
    return Graph(2 * n, tuple(edges), labels), tuple(color)
