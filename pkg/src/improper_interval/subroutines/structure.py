"""Small structural queries: bipartition, odd cycles, trees, triangles."""

from __future__ import annotations

from collections import deque

from ..graph_core import Graph, PreconditionError


class NotBipartiteError(PreconditionError):
    """Raised with an odd cycle (vertex list, closed implicitly) as witness."""

    def __init__(self, odd_cycle: list[int]) -> None:
        super().__init__(f"graph is not bipartite; odd cycle {odd_cycle}")
        self.odd_cycle = odd_cycle


def bipartition(g: Graph) -> list[int]:
    """Side (0/1) of every vertex; raises NotBipartiteError with an odd cycle."""
    side = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    raise NotBipartiteError(_odd_cycle(parent, x, y))
    return side


def _odd_cycle(parent: list[int], x: int, y: int) -> list[int]:
    px, py = [x], [y]
    while parent[px[-1]] >= 0:
        px.append(parent[px[-1]])
    while parent[py[-1]] >= 0:
        py.append(parent[py[-1]])
    common = set(px) & set(py)
    i = next(i for i, v in enumerate(px) if v in common)
    j = py.index(px[i])
    return px[: i + 1] + py[:j][::-1]


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
    except NotBipartiteError:
        return False
    return True


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and g.is_connected()


def has_triangle(g: Graph) -> bool:
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    return any(adj[u] & adj[v] for u, v in g.edges)


def tree_path(g: Graph, a: int, b: int) -> list[int]:
    """Vertex sequence of the unique a-b path in a tree (or any BFS path)."""
    parent = {a: -1}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in g.neighbors(x):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]
