import networkx as nx
import pytest

from improper_interval import InputError, PreconditionError
from improper_interval.families import (
    cartesian_product,
    check_projective_plane,
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
    theta_membership,
    tilde,
)
from improper_interval.subroutines import is_bipartite


def iso(a, b) -> bool:
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


class TestRosettes:
    @pytest.mark.parametrize("a,b,c", [(1, 1, 1), (7, 7, 7), (1, 3, 5), (4, 2, 6)])
    def test_S_counts(self, a, b, c):
        g = gen_S(a, b, c)
        assert (g.n, g.m) == (7 + a + b + c, 6 + 2 * (a + b + c))
        assert g.degree(g.vertex("u0")) == a + b + c
        assert is_bipartite(g) and g.is_connected()

    def test_S777_figure(self):
        g = gen_S(7, 7, 7)
        assert (g.n, g.m) == (28, 48)

    @pytest.mark.parametrize("a,b,c", [(1, 1, 1), (5, 5, 5), (2, 3, 4)])
    def test_M_counts(self, a, b, c):
        g = gen_M(a, b, c)
        assert (g.n, g.m) == (4 + a + b + c, 3 * (a + b + c))
        assert g.degree(g.vertex("u0")) == a + b + c
        assert is_bipartite(g) and g.is_connected()

    def test_M555_figure(self):
        assert (gen_M(5, 5, 5).n, gen_M(5, 5, 5).m) == (19, 45)

    def test_rejects_zero(self):
        with pytest.raises(InputError):
            gen_S(0, 1, 1)


class TestHertz:
    @pytest.mark.parametrize("p,q", [(2, 2), (7, 2), (3, 3), (17, 3)])
    def test_counts(self, p, q):
        g = gen_hertz(p, q)
        assert g.n == p * q + p + 2
        assert g.max_degree == p * q == g.degree(g.vertex("d"))
        assert is_bipartite(g)

    def test_labels(self):
        g = gen_hertz(3, 2)
        assert g.has_edge(g.vertex("b_2"), g.vertex("c_1^(2)"))

    def test_tree_without_d(self):
        t = gen_hertz(7, 2, with_d=False)
        assert t.m == t.n - 1 and t.is_connected()

    def test_rejects_small_p(self):
        with pytest.raises(InputError):
            gen_hertz(1, 2)


class TestSmallFamilies:
    def test_wheel4_is_k4(self):
        assert iso(gen_wheel(4), gen_complete(4))

    def test_wheel_counts(self):
        g = gen_wheel(7)
        assert (g.n, g.m, g.max_degree) == (7, 12, 6)

    def test_theta_c4(self):
        assert iso(gen_theta((2, 2)).graph, gen_cycle(4))

    def test_theta_k23(self):
        assert iso(gen_theta((2, 2, 2)).graph, gen_complete_multipartite((2, 3)))

    def test_theta_parallel_rejected(self):
        with pytest.raises(InputError):
            gen_theta((1, 1, 2))

    def test_theta_membership_recovered(self):
        th = gen_theta((1, 3, 4, 2))
        assert theta_membership(th.graph) == th.path_of_edge

    def test_circulant(self):
        assert iso(gen_circulant(6, (1, 2, 3)), gen_complete(6))
        assert gen_circulant(8, (1, 3)).is_regular()

    def test_star_and_path(self):
        assert gen_star(4).m == 4 and gen_path(4).m == 3


class TestDerived:
    def test_subdivide_k3(self):
        assert iso(subdivide(gen_complete(3)), gen_cycle(6))

    def test_hat_k3(self):
        g = hat(gen_complete(3))
        assert g.n == 7 and g.m == 9 and g.degree(g.vertex("u*")) == 3

    def test_hat_bipartite(self):
        assert is_bipartite(hat(gen_complete(5))) and is_bipartite(subdivide(gen_complete(5)))

    def test_tilde_path(self):
        assert iso(tilde(gen_path(3)).graph, gen_cycle(4))

    def test_tilde_degree_equals_leaf_count_on_all_small_trees(self):
        # a tree vertex of degree d forces at least d leaves, so the flag never drops
        from improper_interval.corpora import from_networkx

        for n in range(2, 10):
            for t in nx.nonisomorphic_trees(n):
                info = tilde(from_networkx(t))
                assert info.stated_degree_holds and info.max_degree == len(info.leaves)

    def test_tilde_rejects_non_tree(self):
        with pytest.raises(PreconditionError):
            tilde(gen_cycle(4))

    def test_hertz_tilde_is_hertz(self):
        assert iso(tilde(gen_hertz(4, 2, with_d=False)).graph, gen_hertz(4, 2))


class TestProjective:
    @pytest.mark.parametrize("n", [2, 3, 5, 7])
    def test_axioms(self, n):
        plane = gen_projective_plane(n)
        check_projective_plane(plane)
        assert plane.num_points == n * n + n + 1

    def test_fano(self):
        plane = gen_projective_plane(2)
        assert len(plane.lines) == 7 and all(len(line) == 3 for line in plane.lines)

    def test_non_prime_rejected(self):
        with pytest.raises(InputError):
            gen_projective_plane(4)

    def test_erdos_1991(self):
        g = gen_erd(gen_projective_plane(3), [1] * 13)
        assert g.n == 27 and g.max_degree == 13
        assert is_bipartite(g) and g.is_connected()
        line_vertices = [v for v in range(g.n) if g.label(v).startswith("v_")]
        assert all(g.degree(v) == 5 for v in line_vertices)

    def test_erd_counts(self):
        r = [3, 2, 2, 1, 1, 1, 1]
        g = gen_erd(gen_projective_plane(2), r)
        assert g.n == 1 + 7 + sum(r) and g.degree(g.vertex("u")) == sum(r)

    def test_erd_rejects_unsorted(self):
        with pytest.raises(InputError):
            gen_erd(gen_projective_plane(2), [1, 2, 1, 1, 1, 1, 1])

    def test_erd_rejects_wrong_length(self):
        with pytest.raises(InputError):
            gen_erd(gen_projective_plane(2), [1] * 6)


class TestMultipartiteAndProduct:
    def test_k3(self):
        assert iso(gen_complete_multipartite((1, 1, 1)), gen_complete(3))

    def test_octahedron(self):
        assert gen_complete_multipartite((2, 2, 2)).m == 12

    def test_k33(self):
        g = gen_complete_multipartite((3, 3))
        assert g.m == 9 and g.is_regular()

    def test_k2_square(self):
        assert iso(cartesian_product(gen_complete(2), gen_complete(2)), gen_cycle(4))

    def test_prism(self):
        assert cartesian_product(gen_cycle(3), gen_complete(2)).m == 9

    @pytest.mark.parametrize("a,b", [(gen_cycle(5), gen_path(3)), (gen_star(3), gen_complete(4))])
    def test_edge_identity(self, a, b):
        assert cartesian_product(a, b).m == a.n * b.m + b.n * a.m

    def test_product_matches_networkx(self):
        a, b = gen_cycle(4), gen_path(3)
        assert iso(cartesian_product(a, b), cartesian_product(b, a))
        ref = nx.cartesian_product(a.to_networkx(), b.to_networkx())
        assert nx.is_isomorphic(ref, cartesian_product(a, b).to_networkx())
