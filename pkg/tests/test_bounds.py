import networkx as nx
import pytest
from oracles import all_paths, brute_that

from improper_interval import InputError, PreconditionError, verify
from improper_interval.bounds import (
    BoundCertificate,
    cor_Kmn,
    cor_Kn,
    doubled_certificate,
    erdos_sides,
    lb_erdos,
    lb_subdivision,
    lb_tree,
    subdivision_path_max,
    subdivision_sides,
    that_upper,
    tree_stats,
)
from improper_interval.corpora import connected_graphs, from_networkx
from improper_interval.families import (
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_hertz,
    gen_path,
    gen_projective_plane,
    gen_star,
    hat,
    subdivide,
    tilde,
)
from improper_interval.graph_core import Graph
from improper_interval.solver import SolveLimits, exists_coloring, mu_int


def brute_tree_stats(t: Graph) -> tuple[int, int]:
    leaves = sum(1 for v in range(t.n) if t.degree(v) == 1)
    best = 0
    for path in all_paths(t.n, t.edges):
        on = set(path)
        leaving = sum(1 for u, v in t.edges if (u in on) != (v in on))
        best = max(best, len(path) - 1 + leaving)
    return leaves, best


def oracle_subdivision_max(g: Graph) -> int:
    h = hat(g).to_networkx()
    s = subdivide(g).to_networkx()
    subs = range(g.n, g.n + g.m)
    best = 0
    for a in subs:
        for b in subs:
            for p in nx.all_shortest_paths(s, a, b):
                best = max(best, sum(h.degree(v) - 1 for v in p))
    return best


def small_trees():
    for n in range(2, 13):
        for t in nx.nonisomorphic_trees(n):
            yield from_networkx(t)


class TestTreeStats:
    def test_matches_brute_force_all_trees_up_to_12(self):
        count = 0
        for t in small_trees():
            s = tree_stats(t)
            assert (s.leaf_count, s.path_max) == brute_tree_stats(t)
            count += 1
        assert count == 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106 + 235 + 551

    def test_witness_attains_value(self):
        t = gen_hertz(5, 2, with_d=False)
        s = tree_stats(t)
        on = set(s.witness_path)
        assert len(s.witness_path) - 1 + sum(1 for u, v in t.edges if (u in on) != (v in on)) == s.path_max

    @pytest.mark.parametrize("p, k", [(2, 1), (7, 2), (17, 3), (4, 4)])
    def test_hertz_tree(self, p, k):
        s = tree_stats(gen_hertz(p, k, with_d=False))
        assert (s.leaf_count, s.path_max) == (p * k, p + 2 * k)

    def test_path(self):
        assert (tree_stats(gen_path(6)).leaf_count, tree_stats(gen_path(6)).path_max) == (2, 5)

    def test_star(self):
        s = tree_stats(gen_star(5))
        assert (s.leaf_count, s.path_max) == (5, 5)

    def test_not_a_tree(self):
        with pytest.raises(PreconditionError):
            tree_stats(gen_cycle(4))


class TestTreeBound:
    def test_hertz_worked_example(self):
        cert = lb_tree(gen_hertz(7, 2, with_d=False), 1)
        assert (cert.lhs, cert.rhs) == (14, 13)
        assert cert.graph.n == tilde(gen_hertz(7, 2, with_d=False)).graph.n

    def test_hertz_k3(self):
        cert = lb_tree(gen_hertz(17, 3, with_d=False), 2)
        assert (cert.lhs, cert.rhs) == (51, 50)

    def test_inconclusive(self):
        assert lb_tree(gen_hertz(6, 2, with_d=False), 1) is None

    def test_certified_graph_is_hertz_graph(self):
        cert = lb_tree(gen_hertz(7, 2, with_d=False), 1)
        assert nx.is_isomorphic(cert.graph.to_networkx(), gen_hertz(7, 2).to_networkx())

    def test_negative_k(self):
        with pytest.raises(InputError):
            lb_tree(gen_path(3), -1)


class TestSubdivisionBound:
    def test_path_max_matches_enumeration(self):
        for g in connected_graphs(5):
            assert subdivision_path_max(g) == oracle_subdivision_max(g)

    def test_k3_inconclusive(self):
        assert lb_subdivision(gen_complete(3), 1) is None
        assert subdivision_sides(gen_complete(3), 1)[0] == 3

    def test_k10(self):
        cert = lb_subdivision(gen_complete(10), 1)
        assert (cert.lhs, cert.rhs) == (45, 23)

    def test_kn_path_max_closed_form(self):
        # two disjoint edges give a length-4 shortest path through two branch vertices
        assert subdivision_path_max(gen_complete(3)) == 5
        for n in range(4, 9):
            assert subdivision_path_max(gen_complete(n)) == 2 * n + 2

    def test_disconnected(self):
        with pytest.raises(PreconditionError):
            subdivision_sides(Graph(4, ((0, 1), (2, 3))), 1)


class TestCorollaries:
    def test_kn_example(self):
        cert = cor_Kn(10, 1)
        assert (cert.lhs, cert.rhs) == (90, 46)

    def test_kn_inconclusive(self):
        assert cor_Kn(6, 1) is None

    def test_kmn_example(self):
        cert = cor_Kmn(10, 10, 1)
        assert (cert.lhs, cert.rhs) == (100, 25)

    def test_kmn_needs_subdivision_argument_too(self):
        g = gen_complete_multipartite((10, 10))
        assert lb_subdivision(g, 1) is not None

    def test_strict_inequality_required(self):
        with pytest.raises(ValueError):
            BoundCertificate("cor_Kn", {"n": 1}, 1, 5, 5)


class TestErdos:
    def test_fano_worked_example(self):
        plane = gen_projective_plane(3)
        cert = lb_erdos(plane, [1] * 13, 1)
        assert (cert.lhs, cert.rhs) == (9, 8)

    def test_fano_k2_inconclusive(self):
        plane = gen_projective_plane(3)
        assert erdos_sides(plane, [1] * 13, 2) == (5, 16)
        assert lb_erdos(plane, [1] * 13, 2) is None

    def test_order5(self):
        plane = gen_projective_plane(5)
        cert = lb_erdos(plane, [3] * 31, 2)
        assert (cert.lhs, cert.rhs) == (57, 24)

    def test_wrong_length(self):
        with pytest.raises(InputError):
            erdos_sides(gen_projective_plane(2), [1] * 6, 1)


class TestCertificatesSound:
    def test_small_tree_certificates_confirmed(self):
        for t in small_trees():
            if t.n < 3:
                continue
            for k in range(0, 3):
                cert = lb_tree(t, k)
                if cert is None:
                    break
                g = cert.graph
                if k >= 1 and g.m <= 20:
                    assert exists_coloring(g, k) is None

    def test_k0_certificates_trivial(self):
        cert = lb_tree(gen_path(4), 0)
        assert cert.lhs > cert.rhs == 0


class TestTHat:
    @pytest.mark.parametrize(
        "g, expected",
        [(gen_complete(2), 1), (gen_cycle(6), 5), (gen_complete(4), 5), (gen_path(5), 4)],
    )
    def test_upper(self, g, expected):
        assert that_upper(g) == expected

    def test_upper_dominates_brute_force(self):
        for g in connected_graphs(4):
            if g.m <= 5:
                assert brute_that(g.n, g.edges, g.m) <= that_upper(g)

    def test_single_vertex(self):
        with pytest.raises(InputError):
            that_upper(Graph(1, ()))

    def test_disconnected(self):
        with pytest.raises(PreconditionError):
            that_upper(Graph(4, ((0, 1), (2, 3))))


class TestDoubled:
    def test_k2(self):
        h, c = doubled_certificate(gen_complete(2), (1,))
        assert h.edges == ((0, 3), (1, 2), (0, 2), (1, 3))
        assert c == (2, 2, 1, 3)

    @pytest.mark.parametrize("g", [gen_cycle(5), gen_complete(4), gen_path(4), gen_star(3)])
    def test_properties(self, g):
        w = mu_int(g).witness
        h, c = doubled_certificate(g, w)
        assert h.n == 2 * g.n and nx.is_bipartite(h.to_networkx())
        assert verify(h, c, h.max_degree)
        assert len(set(c)) == len(set(w)) + 2 and max(c) <= 2 * g.n - 1

    def test_rejects_non_interval(self):
        with pytest.raises(InputError):
            doubled_certificate(gen_path(3), (1, 3))

    def test_solver_agrees_on_small_case(self):
        h, c = doubled_certificate(gen_complete(2), (1,))
        assert exists_coloring(h, 2, SolveLimits()) is not None
