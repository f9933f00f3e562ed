"""Command-line front end.

Exit codes: 0 success, 1 valid run with a negative answer, 2 usage or
input error, 3 resource limit reached.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import selftest
from .bounds import that_upper
from .constructions import ConstructionFailure
from .families import (
    cartesian_product,
    gen_circulant,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_erd,
    gen_hertz,
    gen_M,
    gen_path,
    gen_projective_plane,
    gen_S,
    gen_star,
    gen_theta,
    gen_wheel,
    hat,
    subdivide,
    tilde,
)
from .formats import (
    BoundRecord,
    ColoringCertificate,
    parse_certificate,
    parse_graph,
    to_dot,
    write_certificate,
    write_graph,
)
from .graph_core import Graph, InputError, PreconditionError, ResourceLimitError, verify
from .solver import SolveLimits, exists_coloring, mu_int, t_hat
from .theorems import COLOR_THEOREMS, bound_sides, color_by_theorem, issue_bound, named_graph

OK, NEGATIVE, USAGE, RESOURCE = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _read_text(source: str | None) -> str:
    if source in (None, "-"):
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from None


def _graph_arg(token: str) -> Graph:
    """A named graph, a graph file path, or ``-`` for standard input."""
    if token == "-":
        return parse_graph(sys.stdin.read())
    return named_graph(token)


def _limits(args) -> SolveLimits:
    return SolveLimits.from_env(max_edges=args.limits_edges, time_budget=args.limits_time)


def _emit_graph(g: Graph, args) -> None:
    sys.stdout.write(to_dot(g) if args.dot else write_graph(g))


# --- gen ----------------------------------------------------------------------------

_GEN_ARITY = {
    "S": (3, 3),
    "M": (3, 3),
    "hertz": (2, 2),
    "wheel": (1, 1),
    "cycle": (1, 1),
    "path": (1, 1),
    "complete": (1, 1),
    "star": (1, 1),
    "circulant": (2, None),
    "theta": (2, None),
    "multipartite": (2, None),
    "erd": (2, 2),
    "subdivide": (1, 1),
    "hat": (1, 1),
    "tilde": (1, 1),
    "product": (2, 2),
}


def _ints(params: Sequence[str]) -> list[int]:
    try:
        return [int(x) for x in params]
    except ValueError:
        raise _Usage(f"expected integer parameters, got {' '.join(params)}") from None


def _generate(family: str, params: Sequence[str], with_d: bool) -> Graph:
    if family not in _GEN_ARITY:
        raise _Usage(f"unknown family {family!r}; choose from {', '.join(_GEN_ARITY)}")
    lo, hi = _GEN_ARITY[family]
    if len(params) < lo or (hi is not None and len(params) > hi):
        want = str(lo) if lo == hi else f"at least {lo}"
        raise _Usage(f"family {family} takes {want} parameter(s), got {len(params)}")
    if family in ("subdivide", "hat", "tilde"):
        base = _graph_arg(params[0])
        return {"subdivide": subdivide, "hat": hat, "tilde": lambda t: tilde(t).graph}[family](base)
    if family == "product":
        return cartesian_product(_graph_arg(params[0]), _graph_arg(params[1]))
    if family == "erd":
        plane = gen_projective_plane(_ints(params[:1])[0])
        r = _ints(params[1].split(","))
        return gen_erd(plane, r * plane.num_points if len(r) == 1 else r)
    nums = _ints(params)
    if family == "S":
        return gen_S(*nums)
    if family == "M":
        return gen_M(*nums)
    if family == "hertz":
        return gen_hertz(*nums, with_d=with_d)
    if family == "theta":
        return gen_theta(nums).graph
    if family == "multipartite":
        return gen_complete_multipartite(nums)
    if family == "circulant":
        return gen_circulant(nums[0], nums[1:])
    simple = {"wheel": gen_wheel, "cycle": gen_cycle, "path": gen_path, "complete": gen_complete, "star": gen_star}
    return simple[family](nums[0])


def cmd_gen(args) -> int:
    _emit_graph(_generate(args.family, args.params, not args.no_d), args)
    return OK


# --- color / verify -----------------------------------------------------------------


def cmd_color(args) -> int:
    items = list(args.items)
    if args.theorem is None:
        if not items:
            raise _Usage("color needs a theorem id")
        args.theorem = items.pop(0)
    if len(items) > 1:
        raise _Usage("color takes at most one graph file")
    args.graph = items[0] if items else "-"
    text = _read_text(args.graph)
    g = parse_graph(text)
    opts = {"limits": _limits(args), "parallel": args.parallel, "factors": args.factors}
    colors, k = color_by_theorem(args.theorem, g, opts)
    if args.dot:
        sys.stdout.write(to_dot(g, colors))
        return OK
    ref = args.graph if args.reference and args.graph not in (None, "-") else None
    sys.stdout.write(write_certificate(ColoringCertificate(args.theorem, k, g, colors, ref)))
    return OK


def check_certificate(cert) -> tuple[bool, str]:
    """Re-check a parsed certificate; returns (valid, explanation)."""
    if isinstance(cert, ColoringCertificate):
        if verify(cert.graph, cert.coloring, cert.k):
            return True, f"valid {cert.k}-improper interval coloring"
        return False, f"not a {cert.k}-improper interval coloring"
    lhs, rhs = bound_sides(cert.theorem, cert.params, cert.k)
    if (lhs, rhs) != (cert.lhs, cert.rhs):
        return False, f"re-evaluation gives lhs={lhs}, rhs={rhs}"
    if lhs <= rhs:
        return False, f"inequality fails: {lhs} <= {rhs}"
    return True, f"valid bound: {lhs} > {rhs}, so mu_int > {cert.k}"


def cmd_verify(args) -> int:
    base = None if args.certificate in (None, "-") else Path(args.certificate).parent
    cert = parse_certificate(_read_text(args.certificate), base)
    valid, why = check_certificate(cert)
    print(("OK: " if valid else "INVALID: ") + why)
    return OK if valid else NEGATIVE


# --- solver front ends -------------------------------------------------------------------


def cmd_mu(args) -> int:
    g = parse_graph(_read_text(args.graph))
    res = mu_int(g, _limits(args), args.parallel)
    print(f"mu_int = {res.value}")
    if args.witness:
        sys.stdout.write(write_certificate(ColoringCertificate("exact", res.value, g, res.witness)))
    return OK


def cmd_that(args) -> int:
    g = parse_graph(_read_text(args.graph))
    res = t_hat(g, _limits(args))
    print(f"t_hat = {res.value}")
    print(f"upper bound = {that_upper(g)}")
    if args.witness:
        print("colors: " + " ".join(map(str, res.witness)))
    return OK


def cmd_exists(args) -> int:
    g = parse_graph(_read_text(args.graph))
    found = exists_coloring(g, args.k, _limits(args), args.parallel)
    if found is None:
        print(f"no {args.k}-improper interval coloring")
        return NEGATIVE
    print(f"{args.k}-improper interval coloring: " + " ".join(map(str, found)))
    return OK


# --- bound ------------------------------------------------------------------------------------


def _bound_params(args) -> tuple[dict[str, str], int]:
    """Parameters and threshold. ``tree --p P --k K`` means the Hertz tree, threshold K - 1."""
    t = args.theorem
    if t == "tree":
        if args.graph:
            return {"graph": args.graph}, args.k
        if args.p is None:
            raise _Usage("bound tree needs --p (Hertz tree) or --graph")
        return {"p": str(args.p), "q": str(args.k)}, args.k - 1
    if t == "subdivision":
        if not args.graph:
            raise _Usage("bound subdivision needs --graph")
        return {"graph": args.graph}, args.k
    if t == "cor_Kn":
        if args.n is None:
            raise _Usage("bound cor_Kn needs --n")
        return {"n": str(args.n)}, args.k
    if t == "cor_Kmn":
        if args.m is None or args.n is None:
            raise _Usage("bound cor_Kmn needs --m and --n")
        return {"m": str(args.m), "n": str(args.n)}, args.k
    if t == "erdos":
        if args.order is None:
            raise _Usage("bound erdos needs --order")
        return {"order": str(args.order), "r": args.r}, args.k
    raise _Usage(f"unknown bound {t!r}")


def cmd_bound(args) -> int:
    params, k = _bound_params(args)
    cert = issue_bound(args.theorem, params, k)
    if cert is None:
        lhs, rhs = bound_sides(args.theorem, params, k)
        print(f"inconclusive: lhs = {lhs} <= rhs = {rhs}")
        return NEGATIVE
    sys.stdout.write(write_certificate(BoundRecord(args.theorem, params, k, cert.lhs, cert.rhs)))
    return OK


# --- selftest --------------------------------------------------------------------------------


def cmd_selftest(args) -> int:
    results = selftest.run(args.scale, args.only, echo=print, seed_grid=args.seed_grid)
    bad = [r for r in results if not r.passed]
    print(f"{len(results) - len(bad)}/{len(results)} checks passed")
    return OK if not bad else NEGATIVE


# --- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limits-edges", type=int, default=None, help="solver edge limit (default 32)")
    common.add_argument("--limits-time", type=float, default=None, help="solver time budget in seconds")
    common.add_argument("--parallel", type=int, default=0, help="solver worker processes (default off)")
    common.add_argument("--seed-grid", default="default", help="name of the pseudo-random instance grid")
    common.add_argument("--dot", action="store_true", help="emit a Graphviz description instead")

    p = argparse.ArgumentParser(
        prog="improper-interval",
        description="Improper interval edge colorings: generators, constructions, exact solver, bounds.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a graph family member")
    g.add_argument("family", help=", ".join(_GEN_ARITY))
    g.add_argument("params", nargs="*")
    g.add_argument("--no-d", action="store_true", help="hertz: omit vertex d (the tree H - d)")
    g.set_defaults(run=cmd_gen)

    c = sub.add_parser("color", parents=[common], help="color a graph by a construction")
    c.add_argument("items", nargs="*", metavar="[THEOREM] [GRAPH]", help="theorem id, then graph file (default stdin)")
    c.add_argument("--theorem", help="theorem id: " + ", ".join(COLOR_THEOREMS))
    c.add_argument("--factors", nargs=2, metavar=("A", "B"), help="product: the two factor graphs")
    c.add_argument("--reference", action="store_true", help="refer to the graph file instead of inlining it")
    c.set_defaults(run=cmd_color)

    v = sub.add_parser("verify", parents=[common], help="check a certificate (exit 0 iff valid)")
    v.add_argument("certificate", nargs="?", default="-")
    v.set_defaults(run=cmd_verify)

    for name, fn, text in (("mu", cmd_mu, "exact impropriety"), ("that", cmd_that, "exact t_hat")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("graph", nargs="?", default="-")
        s.add_argument("--witness", action="store_true", help="also print a witness coloring")
        s.set_defaults(run=fn)

    e = sub.add_parser("exists", parents=[common], help="decide whether a k-improper interval coloring exists")
    e.add_argument("graph", nargs="?", default="-")
    e.add_argument("--k", type=int, required=True)
    e.set_defaults(run=cmd_exists)

    b = sub.add_parser("bound", parents=[common], help="issue a lower-bound certificate")
    b.add_argument("theorem", choices=["tree", "subdivision", "cor_Kn", "cor_Kmn", "erdos"])
    b.add_argument("--k", type=int, required=True, help="threshold (for tree --p: the Hertz parameter)")
    b.add_argument("--p", type=int)
    b.add_argument("--graph", help="named graph (K5, C7, K3x4, ...) or graph file")
    b.add_argument("--n", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--order", type=int)
    b.add_argument("--r", default="1", help="line multiplicities: one value or a comma list")
    b.set_defaults(run=cmd_bound)

    t = sub.add_parser("selftest", parents=[common], help="run the numbered reproduction checks")
    t.add_argument("--scale", choices=["small", "full"], default="small")
    t.add_argument("--only", type=int, nargs="+", choices=sorted(selftest.CHECKS))
    t.set_defaults(run=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return RESOURCE
    except (InputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ConstructionFailure as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
