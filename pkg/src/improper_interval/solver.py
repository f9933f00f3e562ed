"""Exact backtracking search for k-improper interval edge colorings.

The search assigns colors edge by edge. Every vertex keeps a running color
histogram; a partial assignment is abandoned as soon as some vertex has more
holes inside its current color range than uncolored edges left to fill them,
or some color exceeds the multiplicity cap. Translation symmetry is removed
by pinning the first edge's color, and reflection symmetry by forcing the
first deviation from that color upwards.

The same engine also drives the bounded interval-coloring search used for
bipartite graphs of maximum degree three, via *constraint sets*: arbitrary
groups of edges whose colors must form an interval with bounded
multiplicity.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .graph_core import (
    EdgeColoring,
    Graph,
    InputError,
    ResourceLimitError,
    normalize,
    verify,
)


@dataclass(frozen=True)
class SolveLimits:
    """Search budget. ``max_color_budget=None`` means ``2n-3`` per component."""

    max_edges: int = 32
    max_color_budget: int | None = None
    time_budget: float = 600.0

    def __post_init__(self) -> None:
        if self.max_edges < 1 or self.time_budget <= 0:
            raise InputError("limits must be positive")
        if self.max_color_budget is not None and self.max_color_budget < 1:
            raise InputError("limits must be positive")

    @classmethod
    def from_env(cls, **overrides) -> SolveLimits:
        """Defaults overridden by ``IMPINT_MAX_EDGES`` / ``IMPINT_TIME_BUDGET``."""
        kw: dict = {}
        if "IMPINT_MAX_EDGES" in os.environ:
            kw["max_edges"] = int(os.environ["IMPINT_MAX_EDGES"])
        if "IMPINT_TIME_BUDGET" in os.environ:
            kw["time_budget"] = float(os.environ["IMPINT_TIME_BUDGET"])
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kw)


class _Timeout(Exception):
    pass


class IntervalSearch:
    """Depth-first search over colorings of ``m`` edges.

    ``sets`` lists the constraint groups (for a plain graph: the edges at
    each vertex). Group ``i`` must see an integer interval of colors, each
    color at most ``caps[i]`` times. Colors of all edges lie in a window of
    width ``span``. If ``frame`` is given the window is fixed to
    ``[1, frame]`` and both ends must actually be used.
    """

    def __init__(
        self,
        m: int,
        sets: Sequence[Sequence[int]],
        caps: Sequence[int],
        span: int,
        order: Sequence[int] | None = None,
        frame: int | None = None,
        deadline: float | None = None,
        adjacency: Sequence[Sequence[int]] | None = None,
    ) -> None:
        self.m = m
        self.sets = [tuple(s) for s in sets]
        self.caps = list(caps)
        self.span = span
        self.frame = frame
        self.deadline = deadline
        self.edge_sets: list[list[int]] = [[] for _ in range(m)]
        for si, s in enumerate(self.sets):
            for e in s:
                self.edge_sets[e].append(si)
        self.order = list(order) if order is not None else _connected_order(m, self.edge_sets)
        self.size = [len(s) for s in self.sets]
        self.adjacency = adjacency
        self.nodes = 0

    def _reset(self) -> None:
        width = 2 * self.span + 2 if self.frame is None else self.frame + 2
        nsets = len(self.sets)
        self.count = [[0] * width for _ in range(nsets)]
        self.distinct = [0] * nsets
        self.lo = [0] * nsets
        self.hi = [-1] * nsets
        self.rem = list(self.size)
        self.color = [0] * self.m
        # global histogram of used colors to maintain the window
        self.gcount = [0] * width
        self.gmin = width
        self.gmax = -1

    def _place(self, e: int, x: int) -> None:
        self.color[e] = x
        for s in self.edge_sets[e]:
            cnt = self.count[s]
            if cnt[x] == 0:
                self.distinct[s] += 1
                if self.hi[s] < self.lo[s]:
                    self.lo[s] = self.hi[s] = x
                else:
                    if x < self.lo[s]:
                        self.lo[s] = x
                    if x > self.hi[s]:
                        self.hi[s] = x
            cnt[x] += 1
            self.rem[s] -= 1
        self.gcount[x] += 1

    def _unplace(self, e: int, saved: list) -> None:
        x = self.color[e]
        self.color[e] = 0
        for s, lo, hi in saved:
            cnt = self.count[s]
            cnt[x] -= 1
            if cnt[x] == 0:
                self.distinct[s] -= 1
            self.lo[s] = lo
            self.hi[s] = hi
            self.rem[s] += 1
        self.gcount[x] -= 1

    def _candidates(self, e: int) -> range:
        if self.frame is None:
            low = self.gmax - self.span + 1
            high = self.gmin + self.span - 1
        else:
            low, high = 1, self.frame
        for s in self.edge_sets[e]:
            if self.hi[s] >= self.lo[s]:
                width = self.distinct[s] + self.rem[s]
                low = max(low, self.hi[s] - width + 1)
                high = min(high, self.lo[s] + width - 1)
        return range(low, high + 1)

    def _ok(self, e: int, x: int) -> bool:
        for s in self.edge_sets[e]:
            cnt = self.count[s]
            c = cnt[x]
            if c >= self.caps[s]:
                return False
            if self.hi[s] < self.lo[s]:
                continue
            lo = self.lo[s] if self.lo[s] < x else x
            hi = self.hi[s] if self.hi[s] > x else x
            holes = (hi - lo + 1) - self.distinct[s] - (1 if c == 0 else 0)
            if holes > self.rem[s] - 1:
                return False
        return True

    def _reach_ok(self) -> bool:
        """In framed mode: can colors 1 and ``frame`` still both be reached?"""
        t = self.frame
        if self.gmin <= 1 and self.gmax >= t:
            return True
        # upper and lower reach per set, relaxed to a fixpoint
        nsets = len(self.sets)
        up = [t] * nsets
        down = [1] * nsets
        for s in range(nsets):
            if self.hi[s] >= self.lo[s]:
                w = self.distinct[s] + self.rem[s] - 1
                up[s] = min(t, self.lo[s] + w)
                down[s] = max(1, self.hi[s] - w)
        eub = [0] * self.m
        elb = [0] * self.m
        changed = True
        while changed:
            changed = False
            for e in range(self.m):
                if self.color[e]:
                    eub[e] = elb[e] = self.color[e]
                    continue
                ss = self.edge_sets[e]
                eub[e] = min(up[s] for s in ss)
                elb[e] = max(down[s] for s in ss)
            for s in range(nsets):
                if self.rem[s] == 0 or not self.sets[s]:
                    continue
                w = self.size[s] - 1
                if self.hi[s] >= self.lo[s]:
                    w = self.distinct[s] + self.rem[s] - 1
                nu = min(eub[e] for e in self.sets[s]) + w
                nd = max(elb[e] for e in self.sets[s]) - w
                if nu < up[s]:
                    up[s] = nu
                    changed = True
                if nd > down[s]:
                    down[s] = nd
                    changed = True
        return max(eub) >= t and min(elb) <= 1

    def run(self, first_colors: Sequence[int] | None = None) -> EdgeColoring | None:
        """Return the first coloring found in DFS order, or ``None``."""
        self._reset()
        if self.m == 0:
            return ()
        order = self.order
        e0 = order[0]
        if self.frame is None:
            starts = [self.span] if first_colors is None else list(first_colors)
        else:
            starts = (
                list(range(1, (self.frame + 1) // 2 + 1))
                if first_colors is None
                else list(first_colors)
            )
        try:
            for x in starts:
                if not self._ok(e0, x):
                    continue
                saved = [(s, self.lo[s], self.hi[s]) for s in self.edge_sets[e0]]
                self._place(e0, x)
                self.gmin = self.gmax = x
                if self._dfs(1, self.frame is None):
                    return tuple(self.color)
                self._unplace(e0, saved)
                self.gmin, self.gmax = len(self.gcount), -1
        except _Timeout:
            raise ResourceLimitError("solver time budget exhausted") from None
        return None

    def _dfs(self, depth: int, flat: bool) -> bool:
        self.nodes += 1
        if self.deadline is not None and (self.nodes & 1023) == 0:
            if time.perf_counter() > self.deadline:
                raise _Timeout
        if depth == self.m:
            if self.frame is not None:
                return self.gmin == 1 and self.gmax == self.frame
            return True
        if self.frame is not None and not self._reach_ok():
            return False
        e = self.order[depth]
        base = self.color[self.order[0]]
        for x in self._candidates(e):
            if flat and self.frame is None and x < base:
                continue
            if not self._ok(e, x):
                continue
            saved = [(s, self.lo[s], self.hi[s]) for s in self.edge_sets[e]]
            gmin, gmax = self.gmin, self.gmax
            self._place(e, x)
            if x < self.gmin:
                self.gmin = x
            if x > self.gmax:
                self.gmax = x
            if self._dfs(depth + 1, flat and x == base):
                return True
            self._unplace(e, saved)
            self.gmin, self.gmax = gmin, gmax
        return False


def _connected_order(m: int, edge_sets: Sequence[Sequence[int]]) -> list[int]:
    """Static edge order: repeatedly take the edge touching the most
    constraint sets that already contain chosen edges, ties broken by how
    full those sets are, then by index."""
    if m == 0:
        return []
    set_members: dict[int, list[int]] = {}
    for e, ss in enumerate(edge_sets):
        for s in ss:
            set_members.setdefault(s, []).append(e)
    size = {s: len(es) for s, es in set_members.items()}
    placed = {s: 0 for s in set_members}
    chosen = [False] * m
    order = []
    # start at the edge whose sets are largest (fail-first)
    first = max(range(m), key=lambda e: (sum(size[s] for s in edge_sets[e]), -e))
    current = first
    while True:
        order.append(current)
        chosen[current] = True
        for s in edge_sets[current]:
            placed[s] += 1
        if len(order) == m:
            break
        best, best_key = -1, None
        for e in range(m):
            if chosen[e]:
                continue
            touched = [s for s in edge_sets[e] if placed[s]]
            key = (
                len(touched),
                sum(placed[s] / size[s] for s in touched),
                -sum(size[s] - placed[s] for s in edge_sets[e]),
                -e,
            )
            if best_key is None or key > best_key:
                best, best_key = e, key
        current = best
    return order


def _vertex_sets(g: Graph) -> list[tuple[int, ...]]:
    return [g.incident(v) for v in range(g.n) if g.degree(v)]


def _component_graphs(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Components with at least one edge, each with its edge-index map back into ``g``."""
    out = []
    for comp in g.components():
        if len(comp) < 2:
            continue
        sub, old = g.induced(comp)
        emap = [g.edge_index(old[u], old[v]) for u, v in sub.edges]
        out.append((sub, emap))
    return out


def _budget(g: Graph, limits: SolveLimits) -> int:
    if limits.max_color_budget is not None:
        return limits.max_color_budget
    return max(1, 2 * g.n - 3)


def _check_size(g: Graph, limits: SolveLimits) -> None:
    if g.m > limits.max_edges:
        raise ResourceLimitError(
            f"graph has {g.m} edges, above the solver limit of {limits.max_edges}"
        )


def _solve_connected(
    g: Graph, k: int, limits: SolveLimits, deadline: float, parallel: int = 0
) -> EdgeColoring | None:
    sets = _vertex_sets(g)
    span = _budget(g, limits)
    search = IntervalSearch(g.m, sets, [k] * len(sets), span, deadline=deadline)
    if parallel > 1:
        return _run_parallel(search, parallel)
    found = search.run()
    return None if found is None else normalize(found)


def _branch_worker(args):
    search, second_color = args
    return _run_with_second(search, second_color)


def _run_with_second(search: IntervalSearch, x2: int) -> EdgeColoring | None:
    """Run ``search`` with the second edge in order pinned to ``x2``."""
    search._reset()
    e0, e1 = search.order[0], search.order[1]
    x0 = search.span
    search._place(e0, x0)
    search.gmin = search.gmax = x0
    if x2 < x0 or not search._ok(e1, x2):
        return None
    search._place(e1, x2)
    search.gmin, search.gmax = min(x0, x2), max(x0, x2)
    try:
        if search._dfs(2, x2 == x0):
            return normalize(tuple(search.color))
    except _Timeout:
        raise ResourceLimitError("solver time budget exhausted") from None
    return None


def _run_parallel(search: IntervalSearch, workers: int) -> EdgeColoring | None:
    """Split on the color of the second edge; keep the first branch (in DFS order)
    that succeeds, so the witness equals the single-threaded one."""
    if search.m < 2:
        found = search.run()
        return None if found is None else normalize(found)
    x0 = search.span
    branches = list(range(x0, x0 + search.span))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_branch_worker, [(search, x) for x in branches]))
    for r in results:
        if r is not None:
            return r
    return None


def exists_coloring(
    g: Graph, k: int, limits: SolveLimits | None = None, parallel: int = 0
) -> EdgeColoring | None:
    """A k-improper interval coloring of ``g``, or ``None`` if provably none exists.

    Each connected component is searched separately and normalized to start
    at color 1. Raises ResourceLimitError instead of guessing.
    """
    limits = limits or SolveLimits()
    if k < 1:
        raise InputError("k must be positive")
    _check_size(g, limits)
    deadline = time.perf_counter() + limits.time_budget
    colors = [0] * g.m
    for sub, emap in _component_graphs(g):
        found = _solve_connected(sub, k, limits, deadline, parallel)
        if found is None:
            return None
        for i, x in zip(emap, found):
            colors[i] = x
    result = tuple(colors)
    assert verify(g, result, k)
    return result


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: EdgeColoring


def mu_int(g: Graph, limits: SolveLimits | None = None, parallel: int = 0) -> SolveResult:
    """Smallest k admitting a k-improper interval coloring, with a witness."""
    limits = limits or SolveLimits()
    if g.m == 0:
        raise InputError("impropriety is undefined for a graph without edges")
    _check_size(g, limits)
    for k in range(1, g.max_degree + 1):
        found = exists_coloring(g, k, limits, parallel)
        if found is not None:
            return SolveResult(k, found)
    raise AssertionError("a monochromatic coloring always has impropriety at most Δ")


def t_hat(g: Graph, limits: SolveLimits | None = None, start: int | None = None) -> SolveResult:
    """Maximum number of colors in an improper interval coloring of connected ``g``.

    Colorings are normalized to ``1..t`` with every color used. The search
    walks ``t`` downward from ``start`` (default ``|E|``, a trivial bound
    independent of any theorem) and stops at the first feasible value.
    """
    limits = limits or SolveLimits()
    if g.n < 2 or not g.is_connected():
        raise InputError("t_hat needs a connected graph with at least two vertices")
    _check_size(g, limits)
    deadline = time.perf_counter() + limits.time_budget
    sets = _vertex_sets(g)
    caps = [len(s) for s in sets]
    top = g.m if start is None else start
    base = IntervalSearch(g.m, sets, caps, span=top, deadline=deadline)
    for t in range(top, 0, -1):
        search = IntervalSearch(
            g.m, sets, caps, span=t, order=base.order, frame=t, deadline=deadline
        )
        found = search.run()
        if found is not None:
            assert len(set(found)) == t and verify(g, found, g.max_degree)
            return SolveResult(t, tuple(found))
    raise AssertionError("one color always works on a connected graph")
