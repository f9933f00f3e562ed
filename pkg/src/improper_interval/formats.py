"""Plain-text graph and certificate files, plus DOT export.

Graph file::

    # comment
    n m
    u v            (m lines, 0-based)
    L v name       (optional vertex labels)
    B v1 ... vn    (optional outer-boundary order)

Certificate file (coloring)::

    kind: coloring
    theorem: <id>
    k: <claimed impropriety>
    graph: inline | <path>
    <graph file lines, when inline>
    end graph
    colors:
    <edgeIndex color>   (m lines)

Certificate file (bound)::

    kind: bound
    theorem: <id>
    params: key=value ...
    k: <threshold>
    lhs: <int>
    rhs: <int>
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .graph_core import EdgeColoring, Graph, InputError


def _content_lines(text: str) -> list[str]:
    return [s for s in (line.strip() for line in text.splitlines()) if s and not s.startswith("#")]


def _ints(line: str, what: str) -> list[int]:
    try:
        return [int(x) for x in line.split()]
    except ValueError:
        raise InputError(f"expected integers in {what}: {line!r}") from None


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty graph file")
    head = _ints(lines[0], "header")
    if len(head) != 2:
        raise InputError("header must be 'n m'")
    n, m = head
    if len(lines) < 1 + m:
        raise InputError(f"expected {m} edge lines")
    edges = []
    for line in lines[1 : 1 + m]:
        pair = _ints(line, "edge line")
        if len(pair) != 2:
            raise InputError(f"edge line must hold two vertices: {line!r}")
        edges.append((pair[0], pair[1]))
    labels: dict[int, str] = {}
    boundary = None
    for line in lines[1 + m :]:
        tag, _, rest = line.partition(" ")
        if tag == "L":
            v_text, _, name = rest.strip().partition(" ")
            (v,) = _ints(v_text, "label line")
            if not name.strip():
                raise InputError(f"label line without a name: {line!r}")
            labels[v] = name.strip()
        elif tag == "B":
            boundary = tuple(_ints(rest, "boundary line"))
        else:
            raise InputError(f"unexpected line: {line!r}")
    if labels and sorted(labels) != list(range(n)):
        raise InputError("labels must name every vertex")
    lab = tuple(labels[v] for v in range(n)) if labels else None
    return Graph(n, tuple(edges), lab, boundary)


def write_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges]
    if g.labels is not None:
        out += [f"L {v} {name}" for v, name in enumerate(g.labels)]
    if g.boundary is not None:
        out.append("B " + " ".join(map(str, g.boundary)))
    return "\n".join(out) + "\n"


def to_dot(g: Graph, coloring: Sequence[int] | None = None) -> str:
    """Graphviz ``graph`` description, with edge colors as edge labels."""
    out = ["graph G {"]
    for v in range(g.n):
        name = g.labels[v] if g.labels is not None else str(v)
        out.append(f'  {v} [label="{name}"];')
    for i, (u, v) in enumerate(g.edges):
        attr = f' [label="{coloring[i]}"]' if coloring is not None else ""
        out.append(f"  {u} -- {v}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


@dataclass
class ColoringCertificate:
    theorem: str
    k: int
    graph: Graph
    coloring: EdgeColoring
    graph_path: str | None = None  # written as a reference instead of inline


@dataclass
class BoundRecord:
    theorem: str
    params: dict[str, str] = field(default_factory=dict)
    k: int = 0
    lhs: int = 0
    rhs: int = 0


Certificate = ColoringCertificate | BoundRecord


def write_certificate(cert: Certificate) -> str:
    if isinstance(cert, BoundRecord):
        params = " ".join(f"{a}={b}" for a, b in cert.params.items())
        return (
            f"kind: bound\ntheorem: {cert.theorem}\nparams: {params}\n"
            f"k: {cert.k}\nlhs: {cert.lhs}\nrhs: {cert.rhs}\n"
        )
    out = ["kind: coloring", f"theorem: {cert.theorem}", f"k: {cert.k}"]
    if cert.graph_path is not None:
        out.append(f"graph: {cert.graph_path}")
    else:
        out.append("graph: inline")
        out.append(write_graph(cert.graph).rstrip("\n"))
        out.append("end graph")
    out.append("colors:")
    out += [f"{i} {c}" for i, c in enumerate(cert.coloring)]
    return "\n".join(out) + "\n"


def _field(lines: list[str], i: int, key: str) -> str:
    if i >= len(lines) or not lines[i].startswith(key + ":"):
        raise InputError(f"expected '{key}:' line")
    return lines[i][len(key) + 1 :].strip()


def parse_certificate(text: str, base: Path | None = None) -> Certificate:
    """Parse either kind; a graph given by path is resolved against ``base``."""
    lines = [line.rstrip() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    kind = _field(lines, 0, "kind")
    theorem = _field(lines, 1, "theorem")
    if kind == "bound":
        params = {}
        for tok in _field(lines, 2, "params").split():
            a, sep, b = tok.partition("=")
            if not sep:
                raise InputError(f"parameter without '=': {tok!r}")
            params[a] = b
        vals = [_ints(_field(lines, 3 + j, key), key)[0] for j, key in enumerate(("k", "lhs", "rhs"))]
        return BoundRecord(theorem, params, *vals)
    if kind != "coloring":
        raise InputError(f"unknown certificate kind {kind!r}")
    (k,) = _ints(_field(lines, 2, "k"), "k")
    ref = _field(lines, 3, "graph")
    i = 4
    path = None
    if ref == "inline":
        try:
            end = lines.index("end graph", i)
        except ValueError:
            raise InputError("inline graph without 'end graph'") from None
        graph = parse_graph("\n".join(lines[i:end]))
        i = end + 1
    else:
        path = ref
        p = Path(ref)
        if base is not None and not p.is_absolute():
            p = base / p
        try:
            graph = parse_graph(p.read_text())
        except OSError as exc:
            raise InputError(f"cannot read graph {ref}: {exc}") from None
    if i >= len(lines) or lines[i] != "colors:":
        raise InputError("expected 'colors:' line")
    colors: dict[int, int] = {}
    for line in lines[i + 1 :]:
        pair = _ints(line, "color line")
        if len(pair) != 2:
            raise InputError(f"color line must be 'edgeIndex color': {line!r}")
        colors[pair[0]] = pair[1]
    if sorted(colors) != list(range(graph.m)):
        raise InputError("colors must be given for every edge index exactly once")
    return ColoringCertificate(theorem, k, graph, tuple(colors[e] for e in range(graph.m)), path)
