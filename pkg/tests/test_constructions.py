from math import ceil

import networkx as nx
import pytest

from improper_interval import Graph, InputError, PreconditionError, spectrum, verify
from improper_interval.constructions import (
    cartesian_expected_interval,
    color_bipartite_quarter,
    color_bipartite_split,
    color_cartesian,
    color_half_delta,
    color_hertz,
    color_M,
    color_maxdeg5,
    color_multipartite,
    color_near_regular,
    color_outerplanar8,
    color_outerplanar_quarter,
    color_regular,
    color_S,
    color_split_double,
    color_theta,
    multipartite_expected_spectra,
)
from improper_interval.corpora import from_networkx, random_large_degree, random_low_degree
from improper_interval.families import (
    cartesian_product,
    gen_circulant,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_hertz,
    gen_M,
    gen_path,
    gen_S,
    gen_star,
    gen_theta,
)
from improper_interval.graph_core import impropriety_of, num_colors
from improper_interval.solver import mu_int

PETERSEN = from_networkx(nx.petersen_graph())


def fan(k: int) -> Graph:
    edges = [(0, i) for i in range(1, k + 1)] + [(i, i + 1) for i in range(1, k)]
    return Graph(k + 1, tuple(edges))


def k7_minus_matching_on_six() -> Graph:
    g = gen_complete(7)
    drop = {(0, 1), (2, 3), (4, 5)}
    return Graph(7, tuple(e for e in g.edges if e not in drop))


class TestRegular:
    def test_even_cycle(self):
        assert color_regular(gen_cycle(6)).k == 1

    def test_odd_cycle(self):
        res = color_regular(gen_cycle(5))
        assert res.k == 2 and verify(gen_cycle(5), res.coloring, 2)

    def test_k5_two_factors(self):
        res = color_regular(gen_complete(5))
        assert res.k == 2 and set(res.coloring) == {1, 2}

    def test_class1_uses_delta_colors(self):
        g = gen_complete(6)
        res = color_regular(g)
        assert res.k == 1 and num_colors(res.coloring) == 5 and impropriety_of(g, res.coloring) == 1

    def test_petersen_odd_degree_doubling(self):
        res = color_regular(PETERSEN)
        assert res.k == 2 and verify(PETERSEN, res.coloring, 2)

    def test_not_regular(self):
        with pytest.raises(PreconditionError):
            color_regular(gen_path(4))


class TestRosettes:
    def test_S777_rules(self):
        g = gen_S(7, 7, 7)
        c = color_S(7, 7, 7)
        at = lambda a, b: c[g.edge_by_labels(a, b)]  # noqa: E731
        assert (at("u1", "v1"), at("v1", "u2")) == (1, 1)
        assert (at("u2", "v2"), at("v2", "u3"), at("u3", "v3"), at("v3", "u1")) == (8, 9, 7, 8)

    def test_M555_rules(self):
        g = gen_M(5, 5, 5)
        c = color_M(5, 5, 5)
        for i in range(1, 6):
            assert c[g.edge_by_labels("u0", f"x{i}")] == i
            assert c[g.edge_by_labels("u1", f"x{i}")] == c[g.edge_by_labels("u2", f"x{i}")] == i + 1

    @pytest.mark.parametrize("abc", [(1, 1, 1), (3, 1, 2), (2, 7, 1), (6, 4, 5)])
    def test_any_order_verifies(self, abc):
        assert verify(gen_S(*abc), color_S(*abc), 2)
        assert verify(gen_M(*abc), color_M(*abc), 2)


class TestHertz:
    def test_vertex_d_sees_each_color_k_times(self):
        g = gen_hertz(7, 2)
        s = spectrum(g, color_hertz(7, 2), g.vertex("d"))
        assert s.counts == {i: 2 for i in range(1, 8)}

    def test_small(self):
        assert verify(gen_hertz(2, 2), color_hertz(2, 2), 2)

    @pytest.mark.parametrize("p", [2, 3, 6])
    def test_k1_is_proper_interval(self, p):
        g = gen_hertz(p, 1)
        c = color_hertz(p, 1)
        assert verify(g, c, 1) and impropriety_of(g, c) == 1


class TestTheta:
    def test_c4(self):
        th = gen_theta((2, 2))
        assert color_theta(th.graph) == (1, 1, 2, 2)

    def test_edge_plus_path(self):
        th = gen_theta((1, 2))
        assert sorted(color_theta(th.graph)) == [1, 2, 2]

    def test_five_paths(self):
        th = gen_theta((1, 2, 3, 2, 4))
        c = color_theta(th.graph, th.path_of_edge)
        assert max(c) == 5 and verify(th.graph, c, 2)

    def test_membership_length_checked(self):
        with pytest.raises(InputError):
            color_theta(gen_theta((2, 2)).graph, (0, 1))


class TestBipartiteSplit:
    def test_k33_delta_split(self):
        g = gen_complete_multipartite((3, 3))
        res = color_bipartite_split(g)
        assert res.k == 1 and verify(g, res.coloring, 1)

    def test_star_target3(self):
        g = gen_star(7)
        res = color_bipartite_split(g, target=3)
        assert res.k == 3 and verify(g, res.coloring, 3)

    def test_hertz_target3(self):
        g = gen_hertz(2, 2)
        res = color_bipartite_split(g, target=3)
        assert res.k == 2 and verify(g, res.coloring, 2)

    def test_non_bipartite(self):
        with pytest.raises(PreconditionError):
            color_bipartite_split(gen_cycle(5))

    def test_other_target_rejected(self):
        with pytest.raises(PreconditionError):
            color_bipartite_split(gen_cycle(6), target=5)


class TestBipartiteQuarter:
    def test_c8(self):
        res = color_bipartite_quarter(gen_cycle(8))
        assert res.k == 1 and verify(gen_cycle(8), res.coloring, 1)

    def test_k44(self):
        g = gen_complete_multipartite((4, 4))
        assert color_bipartite_quarter(g).k == 1

    def test_eulerian_delta6(self):
        g = gen_complete_multipartite((6, 6))
        res = color_bipartite_quarter(g)
        assert res.k == 2 and verify(g, res.coloring, 2)

    def test_degree3_rejected(self):
        with pytest.raises(PreconditionError):
            color_bipartite_quarter(gen_complete_multipartite((3, 3)))


class TestMaxdeg5:
    def test_petersen(self):
        res = color_maxdeg5(PETERSEN)
        assert verify(PETERSEN, res.coloring, 2) and set(res.coloring) <= {1, 2, 3}

    def test_k4(self):
        assert verify(gen_complete(4), color_maxdeg5(gen_complete(4)).coloring, 2)

    def test_c5_all_one(self):
        assert color_maxdeg5(gen_cycle(5)).coloring == (1,) * 5

    def test_k6_degree5_at_most_four_colors(self):
        res = color_maxdeg5(gen_complete(6))
        assert verify(gen_complete(6), res.coloring, 2) and max(res.coloring) <= 4

    def test_random_degree5(self):
        for g in random_low_degree(15, seed=99):
            c = color_maxdeg5(g).coloring
            assert verify(g, c, 2) and max(c) <= 4

    def test_delta6_rejected(self):
        with pytest.raises(PreconditionError):
            color_maxdeg5(gen_star(6))


class TestNearRegular:
    @pytest.mark.parametrize("n, jumps", [(7, (1, 2, 3)), (9, (1, 2, 4)), (10, (1, 3, 4))])
    def test_six_regular_circulants(self, n, jumps):
        g = gen_circulant(n, jumps)
        assert g.max_degree == 6
        assert verify(g, color_near_regular(g).coloring, 2)

    def test_k7_minus_matching(self):
        g = k7_minus_matching_on_six()
        assert (g.min_degree, g.max_degree) == (5, 6)
        assert verify(g, color_near_regular(g).coloring, 2)

    def test_gap_two_rejected(self):
        with pytest.raises(PreconditionError):
            color_near_regular(gen_star(3))


class TestSplitDouble:
    def test_regular(self):
        res = color_split_double(gen_complete(5))
        assert res.k == 2 and verify(gen_complete(5), res.coloring, 2)

    def test_star(self):
        res = color_split_double(gen_star(4))
        assert res.k == 8 and verify(gen_star(4), res.coloring, 8)

    def test_bound_arithmetic(self):
        g = Graph(8, ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (1, 2), (3, 4), (5, 6), (7, 1)))
        assert (g.max_degree, g.min_degree) == (7, 2)
        res = color_split_double(g)
        assert res.k == 8 and verify(g, res.coloring, 8)

    def test_random(self):
        for g in random_low_degree(10, seed=5):
            if g.min_degree >= 1:
                res = color_split_double(g)
                assert res.k == 2 * ceil(g.max_degree / g.min_degree) and verify(g, res.coloring, res.k)


class TestHalfDelta:
    def test_six_regular_delegates(self):
        g = gen_circulant(8, (1, 2, 3))
        res = color_half_delta(g)
        assert verify(g, res.coloring, 3) and impropriety_of(g, res.coloring) <= 2

    def test_k7_minus_edge(self):
        g = gen_complete(7).edge_subgraph(range(1, 21))
        res = color_half_delta(g)
        assert res.k == 3 and verify(g, res.coloring, 3)

    def test_colors_one_and_two(self):
        for g in random_large_degree(12, seed=77):
            c = color_half_delta(g).coloring
            assert set(c) <= {1, 2} and verify(g, c, ceil(g.max_degree / 2))


class TestOuterplanar:
    def test_c5_alternates_up_to_translation(self):
        c = color_outerplanar8(gen_cycle(5)).coloring
        assert verify(gen_cycle(5), c, 2)
        assert sorted(x - min(c) for x in c) == [0, 0, 0, 1, 1]

    def test_fan(self):
        g = fan(5)
        assert verify(g, color_outerplanar8(g).coloring, 2)

    def test_tree_and_cut_vertices(self):
        g = Graph(7, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)))
        assert verify(g, color_outerplanar8(g).coloring, 2)

    def test_k4_rejected(self):
        with pytest.raises(PreconditionError):
            color_outerplanar8(gen_complete(4))

    def test_delta9_rejected_by_delta8_version(self):
        with pytest.raises(PreconditionError):
            color_outerplanar8(fan(9))

    def test_quarter_delta9(self):
        g = fan(9)
        res = color_outerplanar_quarter(g)
        assert res.k == 4 and verify(g, res.coloring, 4)

    def test_quarter_delegates(self):
        g = fan(4)
        assert color_outerplanar_quarter(g).k == 2

    def test_quarter_delta12(self):
        g = fan(12)
        res = color_outerplanar_quarter(g)
        assert res.k == 4 and verify(g, res.coloring, 4)


class TestMultipartite:
    def test_bipartite_is_proper(self):
        res = color_multipartite((3, 4))
        g = gen_complete_multipartite((3, 4))
        assert res.k == 1 and verify(g, res.coloring, 1)

    def test_octahedron(self):
        res = color_multipartite((2, 2, 2))
        assert res.k == 2 and verify(gen_complete_multipartite((2, 2, 2)), res.coloring, 2)

    def test_k5(self):
        res = color_multipartite((1, 1, 1, 1, 1))
        assert res.k == 3 and verify(gen_complete(5).with_labels([f"V{i}.1" for i in range(1, 6)]), res.coloring, 3)
        assert mu_int(gen_complete(5)).value == 2

    @pytest.mark.parametrize("sizes", [(3, 2, 2), (3, 3, 2, 1), (1, 2, 3, 2, 1), (2, 2, 2, 2, 2, 2)])
    def test_closed_form_spectra(self, sizes):
        g = gen_complete_multipartite(sizes)
        res = color_multipartite(sizes)
        expected = multipartite_expected_spectra(sizes)
        for v in range(g.n):
            assert spectrum(g, res.coloring, v).colors == expected[g.label(v)]


class TestCartesian:
    def test_k2_square(self):
        k2 = gen_complete(2)
        res = color_cartesian(k2, k2, (1,), (1,))
        assert sorted(res.coloring) == [1, 1, 2, 2]
        assert verify(cartesian_product(k2, k2), res.coloring, 1)

    def test_c5_square(self):
        c5 = gen_cycle(5)
        res = color_cartesian(c5, c5, (1,) * 5, (1,) * 5)
        assert res.k == 2 and verify(cartesian_product(c5, c5), res.coloring, 2)

    def test_color_count_and_vertex_intervals(self):
        a, b = gen_cycle(4), gen_path(3)
        ca, cb = (1, 2, 1, 2), (1, 2)
        res = color_cartesian(a, b, ca, cb)
        prod = cartesian_product(a, b)
        assert num_colors(res.coloring) == num_colors(ca) + num_colors(cb)
        for u in range(a.n):
            for v in range(b.n):
                s = spectrum(prod, res.coloring, u * b.n + v)
                assert (s.min, s.max) == cartesian_expected_interval(a, b, ca, cb, u, v)

    def test_invalid_factor(self):
        with pytest.raises(InputError):
            color_cartesian(gen_path(3), gen_complete(2), (1, 3), (1,))
