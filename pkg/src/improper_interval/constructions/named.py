"""Explicit coloring rules for the named families: S_{a,b,c}, M_{a,b,c}, Hertz
graphs, theta graphs, complete multipartite graphs and Cartesian products."""

from __future__ import annotations

from math import ceil
from typing import Sequence

from ..families import (
    cartesian_product,
    gen_complete_multipartite,
    gen_hertz,
    gen_M,
    gen_S,
    hertz_label,
    theta_membership,
)
from ..graph_core import EdgeColoring, Graph, InputError, impropriety_of, is_interval, spectrum
from ._common import ColoringResult, checked

_LETTERS = ("x", "y", "z")
# v-vertex of the hexagon between u_i and u_j in S_{a,b,c}
_HEXAGON_V = {frozenset((1, 2)): "v1", frozenset((2, 3)): "v2", frozenset((3, 1)): "v3"}


def _sorted_roles(sizes: Sequence[int]) -> list[int]:
    """roles[r] = original group (1-based) playing sorted role r+1."""
    return [i + 1 for i in sorted(range(3), key=lambda i: (sizes[i], i))]


def _rule_map(
    g: Graph, roles: list[int], upos: list[int], rules: dict[tuple[str, str], int]
) -> EdgeColoring:
    """Translate rules stated for sorted roles into colors of ``g``'s edges.

    ``roles[r-1]`` is the original group playing role r and ``upos[i-1]``
    the original index of the hub stated as u_i in the rules.
    """

    def actual(name: str) -> str:
        if name == "u0":
            return name
        if name[0] == "u":
            return f"u{upos[int(name[1]) - 1]}"
        if name[0] == "v":
            i, j = next(tuple(k) for k, v in _HEXAGON_V.items() if v == name)
            return _HEXAGON_V[frozenset((upos[i - 1], upos[j - 1]))]
        role = _LETTERS.index(name[0])
        return f"{_LETTERS[roles[role] - 1]}{name[1:]}"

    color = [0] * g.m
    for (a, b), c in rules.items():
        color[g.edge_by_labels(actual(a), actual(b))] = c
    assert all(color)
    return tuple(color)


def color_S(a: int, b: int, c: int) -> EdgeColoring:
    """2-improper interval coloring of ``gen_S(a, b, c)``.

    The rules assume a <= b <= c; other orders are handled by renaming the
    three symmetric branches (u_i with its x/y/z group) before applying them.
    """
    sizes = (a, b, c)
    roles = _sorted_roles(sizes)
    A, B, C = sorted(sizes)
    r: dict[tuple[str, str], int] = {}
    for i in range(1, A + 1):
        r[("u0", f"x{i}")] = r[("u1", f"x{i}")] = i
    for j in range(1, B + 1):
        r[("u0", f"y{j}")] = r[("u2", f"y{j}")] = j
    for k in range(1, C + 1):
        r[("u0", f"z{k}")] = r[("u3", f"z{k}")] = A + k
    r[("u1", "v1")] = r[("v1", "u2")] = 1
    r[("u2", "v2")] = B + 1
    r[("v2", "u3")] = B + 2
    r[("u3", "v3")] = A
    r[("v3", "u1")] = A + 1
    g = gen_S(a, b, c)
    # group i hangs on u_i, so hubs follow the groups
    return checked(g, _rule_map(g, roles, roles, r), 2, "S coloring").coloring


def color_M(a: int, b: int, c: int) -> EdgeColoring:
    """2-improper interval coloring of ``gen_M(a, b, c)`` (rules assume a <= b <= c)."""
    sizes = (a, b, c)
    roles = _sorted_roles(sizes)
    A, B, C = sorted(sizes)
    r: dict[tuple[str, str], int] = {}
    for i in range(1, A + 1):
        r[("u0", f"x{i}")] = i
        r[("u1", f"x{i}")] = r[("u2", f"x{i}")] = i + 1
    for j in range(1, B + 1):
        r[("u0", f"y{j}")] = j
        r[("u2", f"y{j}")] = r[("u3", f"y{j}")] = j + 1
    for k in range(1, C + 1):
        r[("u0", f"z{k}")] = A + k
        r[("u3", f"z{k}")] = r[("u1", f"z{k}")] = A + k + 1
    # groups sit on the sides of the triangle u1 u2 u3 and group g is
    # opposite hub opp[g]; permuting groups permutes the opposite hubs
    opp = {1: 3, 2: 1, 3: 2}
    inv = {v: k for k, v in opp.items()}
    upos = [opp[roles[inv[i] - 1]] for i in (1, 2, 3)]
    g = gen_M(a, b, c)
    return checked(g, _rule_map(g, roles, upos, r), 2, "M coloring").coloring


def color_hertz(p: int, k: int) -> EdgeColoring:
    """k-improper interval coloring of ``gen_hertz(p, k)`` with impropriety exactly k.

    For k >= 2: a-b_i gets i+1, both edges at c_j^(i) get i. For k = 1 that
    rule would put color i twice on c_1^(i), so the c-d edge is shifted
    down instead: a-b_i gets i, b_i-c_1^(i) gets i+1, c_1^(i)-d gets i.
    """
    g = gen_hertz(p, k)
    color = [0] * g.m
    for i in range(1, p + 1):
        b = f"b_{i}"
        color[g.edge_by_labels("a", b)] = i + 1 if k >= 2 else i
        for j in range(1, k + 1):
            c = hertz_label(i, j)
            color[g.edge_by_labels(b, c)] = i if k >= 2 else i + 1
            color[g.edge_by_labels(c, "d")] = i
    out = checked(g, color, k, "Hertz coloring").coloring
    assert impropriety_of(g, out) == k
    return out


def color_theta(g: Graph, path_of_edge: Sequence[int] | None = None) -> EdgeColoring:
    """Every edge of the i-th u-v path gets color i (paths numbered from 1)."""
    if path_of_edge is None:
        path_of_edge = theta_membership(g)
    if len(path_of_edge) != g.m:
        raise InputError("path membership must cover every edge")
    return checked(g, [p + 1 for p in path_of_edge], 2, "theta coloring").coloring


# --- complete multipartite -------------------------------------------------


class _Layout:
    """Vertex numbering x_1..x_S, y_1..y_T used by the multipartite coloring."""

    def __init__(self, sizes: Sequence[int]) -> None:
        r = len(sizes)
        self.r = r
        self.order = sorted(range(r), key=lambda i: (-sizes[i], i))  # sorted part -> original
        n = [sizes[i] for i in self.order]
        self.n = n
        self.R = ceil(r / 2)
        self.xs = n[: self.R]
        self.ys = n[self.R :]
        self.s = [0]
        for x in self.xs:
            self.s.append(self.s[-1] + x)
        self.t = [0]
        for y in self.ys:
            self.t.append(self.t[-1] + y)
        # (side, global 1-based index, group 1-based, k within group) per vertex label
        self.place: dict[str, tuple[str, int, int, int]] = {}
        for pos, orig in enumerate(self.order):
            side = "x" if pos < self.R else "y"
            group = pos + 1 if side == "x" else pos + 1 - self.R
            prefix = self.s if side == "x" else self.t
            for k in range(1, sizes[orig] + 1):
                self.place[f"V{orig + 1}.{k}"] = (side, prefix[group - 1] + k, group, k)

    def edge_color(self, a: str, b: str) -> int:
        sa, ia, ga, _ = self.place[a]
        sb, ib, gb, kb = self.place[b]
        if sa != sb:
            return ia + ib - 1  # x_i y_j -> i + j - 1
        if ga > gb:
            ia, ib, gb, kb = ib, ia, ga, self.place[a][3]
        return ia + kb - 1  # x_j x_{s_i + k} -> j + k - 1


def color_multipartite(sizes: Sequence[int]) -> ColoringResult:
    """ceil(r/2)-improper interval coloring of ``gen_complete_multipartite(sizes)``.

    Parts are reordered by non-increasing size internally; the coloring is
    returned for the graph in the caller's part order.
    """
    g = gen_complete_multipartite(sizes)
    lay = _Layout(sizes)
    color = [lay.edge_color(g.label(u), g.label(v)) for u, v in g.edges]
    return checked(g, color, lay.R, "multipartite coloring")


def multipartite_expected_spectra(sizes: Sequence[int]) -> dict[str, set[int]]:
    """Closed-form color sets at every vertex, derived case by case from the coloring rule.

    A vertex of X-group i (1-based, R groups) sees
    - within X: [k, k+n_2-1] for i = 1, [k, s_i+k-1] for 1 < i < R, [k, s_{R-1}+k-1] for i = R;
    - towards Y: [s_{i-1}+k, s_{i-1}+k+T-1] with T = |Y|;
    and symmetrically for Y. A side with a single group has no inner edges.
    """
    lay = _Layout(sizes)
    out: dict[str, set[int]] = {}
    for label, (side, _, grp, k) in lay.place.items():
        groups = lay.xs if side == "x" else lay.ys
        pre = lay.s if side == "x" else lay.t
        other_total = lay.t[-1] if side == "x" else lay.s[-1]
        count = len(groups)
        inner: set[int] = set()
        if count >= 2:
            if grp == 1:
                inner = set(range(k, k + groups[1]))
            elif grp < count:
                inner = set(range(k, pre[grp] + k))
            else:
                inner = set(range(k, pre[count - 1] + k))
        cross = set(range(pre[grp - 1] + k, pre[grp - 1] + k + other_total))
        out[label] = inner | cross
    return out


# --- Cartesian product -----------------------------------------------------


def _low_high(g: Graph, c: Sequence[int], v: int) -> tuple[int, int]:
    # an isolated vertex contributes nothing: low 1 keeps the G-copy colors
    # unshifted and high 0 keeps the H-copy colors unshifted
    if g.degree(v) == 0:
        return 1, 0
    s = spectrum(g, c, v)
    return s.min, s.max


def color_cartesian(
    g: Graph, h: Graph, cg: Sequence[int], ch: Sequence[int]
) -> ColoringResult:
    """Coloring of ``cartesian_product(g, h)`` from improper interval colorings of the factors.

    A G-edge in the copy at v is shifted by S_low(v) - 1, an H-edge in the
    copy at u by S_high(u). The product is max(k_g, k_h)-improper.
    """
    for graph, c, name in ((g, cg, "first"), (h, ch, "second")):
        if len(c) != graph.m or any(x < 1 for x in c) or not is_interval(graph, c)[0]:
            raise InputError(f"{name} factor coloring is not an improper interval coloring")
    k = max(impropriety_of(g, cg) if g.m else 1, impropriety_of(h, ch) if h.m else 1)
    prod = cartesian_product(g, h)
    color = []
    for v in range(h.n):
        low_v = _low_high(h, ch, v)[0]
        color += [x + low_v - 1 for x in cg]
    for u in range(g.n):
        high_u = _low_high(g, cg, u)[1]
        color += [x + high_u for x in ch]
    return checked(prod, color, k, "Cartesian product coloring")


def cartesian_expected_interval(
    g: Graph, h: Graph, cg: Sequence[int], ch: Sequence[int], u: int, v: int
) -> tuple[int, int]:
    """[S_low(u) + S_low(v) - 1, S_high(u) + S_high(v)] at product vertex (u, v)."""
    lu, hu = _low_high(g, cg, u)
    lv, hv = _low_high(h, ch, v)
    return lu + lv - 1, hu + hv
