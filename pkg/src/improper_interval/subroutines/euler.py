"""Euler circuits of multigraphs (loops allowed)."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph_core import MultiGraph, PreconditionError


@dataclass(frozen=True)
class Step:
    edge: int
    tail: int
    head: int


EulerCircuit = list[list[Step]]


def euler_circuit(g: MultiGraph, start: int | None = None) -> EulerCircuit:
    """One closed trail per component with edges, each edge traversed once.

    Hierholzer's algorithm, always leaving a vertex along its lowest-index
    unused edge. The component containing ``start`` (if given) begins at
    ``start``; every other component begins at its least vertex.
    """
    for v, d in enumerate(g.degrees):
        if d % 2:
            raise PreconditionError(f"vertex {v} has odd degree {d}")
    inc = g.incidence
    used = [False] * len(g.edges)
    ptr = [0] * g.n
    seen_vertex = [False] * g.n
    starts = [v for v in range(g.n) if g.degrees[v]]
    if start is not None and g.degrees[start]:
        starts.remove(start)
        starts.insert(0, start)
    circuits = []
    for s in starts:
        if seen_vertex[s]:
            continue
        circuit = _hierholzer(g, s, inc, used, ptr)
        for st in circuit:
            seen_vertex[st.tail] = seen_vertex[st.head] = True
        circuits.append(circuit)
    return circuits


def _hierholzer(g, s, inc, used, ptr) -> list[Step]:
    stack: list[tuple[int, Step | None]] = [(s, None)]
    out: list[Step] = []
    while stack:
        v, via = stack[-1]
        lst = inc[v]
        while ptr[v] < len(lst) and used[lst[ptr[v]]]:
            ptr[v] += 1
        if ptr[v] == len(lst):
            stack.pop()
            if via is not None:
                out.append(via)
            continue
        e = lst[ptr[v]]
        used[e] = True
        a, b = g.edges[e]
        w = b if a == v else a
        stack.append((w, Step(e, v, w)))
    out.reverse()
    return out
