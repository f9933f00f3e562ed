"""Maximum matchings: general graphs (blossom) and bipartite augmenting paths."""

from __future__ import annotations

from typing import Sequence

import networkx as nx

from ..graph_core import Graph


def max_matching(g: Graph) -> list[int]:
    """Edge indices of a maximum-cardinality matching, sorted."""
    h = g.to_networkx()
    mate = nx.max_weight_matching(h, maxcardinality=True)
    return sorted(g.edge_index(u, v) for u, v in mate)


def bipartite_matching(
    left: int, right: int, adj: Sequence[Sequence[int]], order: Sequence[int] | None = None
) -> list[int]:
    """Kuhn's augmenting-path matching; ``adj[x]`` lists right vertices of left ``x``.

    Returns ``match`` with ``match[x]`` the partner of left vertex ``x`` or -1.
    Left vertices are processed in ``order`` (default ascending) and their
    neighbours in list order, so the result is deterministic.
    """
    match_left = [-1] * left
    match_right = [-1] * right

    def augment(x: int, seen: list[bool]) -> bool:
        # iterative DFS over alternating paths; vias[j] is the right vertex
        # through which frame j was entered
        frames = [[x, 0]]
        vias: list[int] = [-1]
        while frames:
            frame = frames[-1]
            u, i = frame
            if i == len(adj[u]):
                frames.pop()
                vias.pop()
                continue
            frame[1] = i + 1
            y = adj[u][i]
            if seen[y]:
                continue
            seen[y] = True
            if match_right[y] < 0:
                new = y
                for j in range(len(frames) - 1, -1, -1):
                    a = frames[j][0]
                    match_left[a] = new
                    match_right[new] = a
                    new = vias[j]
                return True
            frames.append([match_right[y], 0])
            vias.append(y)
        return False

    for x in order if order is not None else range(left):
        if match_left[x] < 0:
            augment(x, [False] * right)
    return match_left
