"""Registry of coloring constructions and lower-bound evaluators by id.

Both the command line and the certificate checker go through here, so a
bound certificate is re-evaluated by exactly the code that issued it.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Callable, Mapping

from . import constructions as cons
from .bounds import (
    BoundCertificate,
    cor_Kmn,
    cor_Kn,
    erdos_sides,
    lb_erdos,
    lb_subdivision,
    lb_tree,
    subdivision_sides,
    tree_sides,
)
from .families import (
    cartesian_product,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_hertz,
    gen_M,
    gen_path,
    gen_projective_plane,
    gen_S,
    gen_star,
    gen_wheel,
)
from .formats import parse_graph
from .graph_core import EdgeColoring, Graph, InputError, PreconditionError
from .solver import SolveLimits, mu_int

# --- named graphs ------------------------------------------------------------

_NAMED = [
    (re.compile(r"K(\d+)x(\d+)"), lambda a, b: gen_complete_multipartite([a, b])),
    (re.compile(r"K(\d+)"), gen_complete),
    (re.compile(r"C(\d+)"), gen_cycle),
    (re.compile(r"P(\d+)"), gen_path),
    (re.compile(r"W(\d+)"), gen_wheel),
    (re.compile(r"Star(\d+)"), gen_star),
]


def named_graph(token: str) -> Graph:
    """``K5``, ``K3x4``, ``C7``, ``P4`` (4 vertices), ``W6`` (6 vertices), ``Star5``, or a graph file path."""
    for pattern, build in _NAMED:
        match = pattern.fullmatch(token)
        if match:
            return build(*map(int, match.groups()))
    path = Path(token)
    if path.is_file():
        return parse_graph(path.read_text())
    raise InputError(f"unknown graph {token!r}: not a named graph and not a file")


# --- coloring constructions -----------------------------------------------------


def _transfer(g: Graph, canon: Graph, colors: EdgeColoring) -> EdgeColoring:
    """Carry a coloring of ``canon`` over to ``g`` through matching vertex labels."""
    if g.labels is None:
        raise InputError("this construction needs the vertex labels of the generated graph")
    try:
        return tuple(colors[canon.edge_by_labels(g.label(u), g.label(v))] for u, v in g.edges)
    except (KeyError, ValueError, InputError):
        raise InputError("graph does not match the labelled family member") from None


def _count(g: Graph, pattern: str) -> int:
    rx = re.compile(pattern)
    return sum(1 for name in g.labels or () if rx.fullmatch(name))


def _rosette(g: Graph, gen, color) -> tuple[EdgeColoring, int]:
    a, b, c = (_count(g, rf"{x}\d+") for x in "xyz")
    if min(a, b, c) < 1:
        raise InputError("could not read a, b, c from the vertex labels")
    return _transfer(g, gen(a, b, c), color(a, b, c)), 2


def _hertz(g: Graph, _opts) -> tuple[EdgeColoring, int]:
    p = _count(g, r"b_\d+")
    q = _count(g, r"c_\d+\^\(\d+\)") // max(p, 1)
    if p < 2 or q < 1:
        raise InputError("could not read p, q from the vertex labels")
    return _transfer(g, gen_hertz(p, q), cons.color_hertz(p, q)), q


def multipartite_parts(g: Graph) -> list[list[int]]:
    """Parts of a complete multipartite graph (components of its complement)."""
    comp = g.to_networkx()
    import networkx as nx

    parts = [sorted(c) for c in nx.connected_components(nx.complement(comp))]
    parts.sort(key=lambda p: p[0])
    sizes = [len(p) for p in parts]
    expected = (sum(sizes) ** 2 - sum(s * s for s in sizes)) // 2
    if len(parts) < 2 or g.m != expected:
        raise PreconditionError("graph is not complete multipartite")
    return parts


def _multipartite(g: Graph, _opts) -> tuple[EdgeColoring, int]:
    parts = multipartite_parts(g)
    sizes = [len(p) for p in parts]
    canon = gen_complete_multipartite(sizes)
    res = cons.color_multipartite(sizes)
    names = [""] * g.n
    for i, part in enumerate(parts, start=1):
        for j, v in enumerate(part, start=1):
            names[v] = f"V{i}.{j}"
    return _transfer(g.with_labels(names), canon, res.coloring), res.k


def _product(g: Graph, opts: Mapping) -> tuple[EdgeColoring, int]:
    factors = opts.get("factors")
    if not factors or len(factors) != 2:
        raise InputError("the product construction needs --factors A B")
    a, b = (named_graph(t) for t in factors)
    prod = cartesian_product(a, b)
    if prod.n != g.n or prod.edges != g.edges:
        raise InputError("graph is not the Cartesian product of the given factors in canonical order")
    limits = opts.get("limits") or SolveLimits()
    ca = mu_int(a, limits).witness
    cb = mu_int(b, limits).witness
    res = cons.color_cartesian(a, b, ca, cb)
    return res.coloring, res.k


def _exact(g: Graph, opts: Mapping) -> tuple[EdgeColoring, int]:
    res = mu_int(g, opts.get("limits") or SolveLimits(), opts.get("parallel", 0))
    return res.witness, res.value


def _plain(fn: Callable[[Graph], cons.ColoringResult]):
    def run(g: Graph, _opts) -> tuple[EdgeColoring, int]:
        res = fn(g)
        return res.coloring, res.k

    return run


COLOR_THEOREMS: dict[str, Callable[[Graph, Mapping], tuple[EdgeColoring, int]]] = {
    "rosette-S": lambda g, _o: _rosette(g, gen_S, cons.color_S),
    "rosette-M": lambda g, _o: _rosette(g, gen_M, cons.color_M),
    "hertz": _hertz,
    "theta": lambda g, _o: (cons.color_theta(g), 2),
    "multipartite": _multipartite,
    "product": _product,
    "regular": _plain(cons.color_regular),
    "maxdeg5": _plain(cons.color_maxdeg5),
    "near-regular": _plain(cons.color_near_regular),
    "split-double": _plain(cons.color_split_double),
    "half-delta": _plain(cons.color_half_delta),
    "bipartite-split": _plain(cons.color_bipartite_split),
    "bipartite-split3": _plain(lambda g: cons.color_bipartite_split(g, target=3)),
    "bipartite-quarter": _plain(cons.color_bipartite_quarter),
    "outerplanar8": _plain(cons.color_outerplanar8),
    "outerplanar-quarter": _plain(cons.color_outerplanar_quarter),
    "exact": _exact,
}


def color_by_theorem(theorem: str, g: Graph, opts: Mapping | None = None) -> tuple[EdgeColoring, int]:
    if theorem not in COLOR_THEOREMS:
        raise InputError(f"unknown theorem {theorem!r}; choose from {', '.join(COLOR_THEOREMS)}")
    return COLOR_THEOREMS[theorem](g, opts or {})


# --- lower bounds ---------------------------------------------------------------


def _int(params: Mapping[str, str], key: str) -> int:
    try:
        return int(params[key])
    except KeyError:
        raise InputError(f"missing parameter {key!r}") from None
    except ValueError:
        raise InputError(f"parameter {key!r} must be an integer") from None


def _tree_graph(params: Mapping[str, str]) -> Graph:
    if "graph" in params:
        return named_graph(params["graph"])
    return gen_hertz(_int(params, "p"), _int(params, "q"), with_d=False)


def _erdos_r(params: Mapping[str, str]):
    plane = gen_projective_plane(_int(params, "order"))
    r = [int(x) for x in params.get("r", "1").split(",")]
    if len(r) == 1:
        r = r * plane.num_points
    return plane, r


def bound_sides(theorem: str, params: Mapping[str, str], k: int) -> tuple[int, int]:
    """Evaluate both sides of the inequality named ``theorem``."""
    if theorem == "tree":
        return tree_sides(_tree_graph(params), k)
    if theorem == "subdivision":
        return subdivision_sides(named_graph(params.get("graph", "")), k)
    if theorem == "cor_Kn":
        n = _int(params, "n")
        return n * n - n, 2 * k * (2 * n + 3)
    if theorem == "cor_Kmn":
        m, n = _int(params, "m"), _int(params, "n")
        return m * n, k * (m + n + 5)
    if theorem == "erdos":
        plane, r = _erdos_r(params)
        return erdos_sides(plane, r, k)
    raise InputError(f"unknown bound {theorem!r}; choose from tree, subdivision, cor_Kn, cor_Kmn, erdos")


def issue_bound(theorem: str, params: Mapping[str, str], k: int) -> BoundCertificate | None:
    """The certificate for (theorem, params, k), or ``None`` when inconclusive."""
    if k < 0:
        raise InputError("k must be non-negative")
    if theorem == "tree":
        return lb_tree(_tree_graph(params), k)
    if theorem == "subdivision":
        return lb_subdivision(named_graph(params.get("graph", "")), k)
    if theorem == "cor_Kn":
        return cor_Kn(_int(params, "n"), k)
    if theorem == "cor_Kmn":
        return cor_Kmn(_int(params, "m"), _int(params, "n"), k)
    if theorem == "erdos":
        plane, r = _erdos_r(params)
        return lb_erdos(plane, r, k)
    bound_sides(theorem, params, k)  # raises for unknown ids
    return None
