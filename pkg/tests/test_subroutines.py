from itertools import combinations

import networkx as nx
import pytest

from improper_interval import Graph, MultiGraph, PreconditionError, ResourceLimitError, verify
from improper_interval.families import gen_complete, gen_complete_multipartite, gen_cycle, gen_hertz, gen_path, gen_star
from improper_interval.graph_core import impropriety_of, num_colors
from improper_interval.subroutines import (
    NotBipartiteError,
    assemble_block_colorings,
    bipartite_matching,
    bipartition,
    blocks,
    euler_circuit,
    exact_class1_color,
    has_triangle,
    interval_coloring_search,
    is_outerplanar,
    is_tree,
    konig_edge_color,
    max_matching,
    outer_boundary,
    split_outerplanar_to_degree,
    split_vertex_outerplanar,
    split_vertices,
    two_factorize,
    vizing_edge_color,
)
from improper_interval.subroutines.splitting import chords_cross, contract

from oracles import all_paths

PETERSEN = Graph(10, tuple(sorted(tuple(sorted(e)) for e in nx.petersen_graph().edges)))
TWO_TRIANGLES = Graph(5, ((0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)))


def fan(k: int) -> Graph:
    """Path 1..k plus hub 0 joined to every path vertex."""
    edges = [(0, i) for i in range(1, k + 1)] + [(i, i + 1) for i in range(1, k)]
    return Graph(k + 1, tuple(edges))


def _check_circuit(g: MultiGraph, circuit):
    for a, b in zip(circuit, circuit[1:] + circuit[:1]):
        assert a.head == b.tail
    for st in circuit:
        assert set(g.edges[st.edge]) == {st.tail, st.head}


class TestEuler:
    def test_c4(self):
        g = MultiGraph.from_graph(gen_cycle(4))
        (c,) = euler_circuit(g)
        assert sorted(st.edge for st in c) == [0, 1, 2, 3]
        _check_circuit(g, c)

    def test_two_loops(self):
        g = MultiGraph(1, ((0, 0), (0, 0)))
        (c,) = euler_circuit(g)
        assert len(c) == 2

    def test_k5(self):
        g = MultiGraph.from_graph(gen_complete(5))
        (c,) = euler_circuit(g)
        assert len(c) == 10 and len({st.edge for st in c}) == 10
        _check_circuit(g, c)

    def test_odd_vertex_named(self):
        with pytest.raises(PreconditionError, match="vertex 0"):
            euler_circuit(MultiGraph.from_graph(gen_path(3)))

    def test_start_vertex(self):
        (c,) = euler_circuit(MultiGraph.from_graph(gen_cycle(5)), start=3)
        assert c[0].tail == 3


def _check_factors(g: MultiGraph, factors, r):
    assert len(factors) == r
    assert sorted(e for f in factors for e in f) == list(range(len(g.edges)))
    for f in factors:
        deg = [0] * g.n
        for e in f:
            u, v = g.edges[e]
            deg[u] += 1
            deg[v] += 1
        assert deg == [2] * g.n


class TestTwoFactorize:
    def test_c6(self):
        g = MultiGraph.from_graph(gen_cycle(6))
        assert two_factorize(g, 1) == [list(range(6))]

    def test_k5(self):
        g = MultiGraph.from_graph(gen_complete(5))
        _check_factors(g, two_factorize(g, 2), 2)

    def test_loops(self):
        g = MultiGraph(1, ((0, 0), (0, 0)))
        assert sorted(map(sorted, two_factorize(g, 2))) == [[0], [1]]

    def test_k9(self):
        g = MultiGraph.from_graph(gen_complete(9))
        _check_factors(g, two_factorize(g, 4), 4)

    def test_not_regular(self):
        with pytest.raises(PreconditionError):
            two_factorize(MultiGraph.from_graph(gen_path(4)), 1)


class TestProperColorings:
    def test_konig_k33(self):
        g = gen_complete_multipartite((3, 3))
        c = konig_edge_color(g)
        assert verify(g, c, 1) and num_colors(c) == 3

    def test_konig_star(self):
        assert sorted(konig_edge_color(gen_star(5))) == [1, 2, 3, 4, 5]

    def test_konig_random_bipartite(self):
        h = nx.bipartite.random_graph(8, 8, 0.5, seed=3)
        g = Graph(16, tuple(sorted(tuple(sorted(e)) for e in h.edges)))
        c = konig_edge_color(g)
        assert impropriety_of(g, c) == 1 and max(c) == g.max_degree

    def test_konig_rejects_odd_cycle(self):
        with pytest.raises(NotBipartiteError) as info:
            konig_edge_color(gen_cycle(5))
        assert len(info.value.odd_cycle) % 2 == 1

    def test_vizing_k4(self):
        c = vizing_edge_color(gen_complete(4))
        assert impropriety_of(gen_complete(4), c) == 1 and max(c) <= 4

    def test_vizing_c5(self):
        c = vizing_edge_color(gen_cycle(5))
        assert impropriety_of(gen_cycle(5), c) == 1 and num_colors(c) == 3

    def test_vizing_petersen(self):
        c = vizing_edge_color(PETERSEN)
        assert impropriety_of(PETERSEN, c) == 1 and max(c) <= 4

    def test_exact_class1(self):
        assert num_colors(exact_class1_color(gen_cycle(6))) == 2
        assert exact_class1_color(gen_cycle(5)) is None
        assert exact_class1_color(PETERSEN) is None
        c = exact_class1_color(gen_complete(4))
        assert impropriety_of(gen_complete(4), c) == 1 and max(c) == 3

    def test_exact_class1_size_limit(self):
        with pytest.raises(ResourceLimitError):
            exact_class1_color(gen_complete(12).edge_subgraph(range(60)), max_edges=10)

    def test_fournier_graphs_are_class1(self):
        # wheels with a single maximum-degree vertex satisfy Fournier's hypothesis
        for n in range(6, 10):
            g = Graph(n, tuple([(i, (i + 1) % (n - 1)) for i in range(n - 1)] + [(i, n - 1) for i in range(n - 1)]))
            c = exact_class1_color(g)
            assert c is not None and max(c) == g.max_degree

    def test_interval_search_bipartite_cubic(self):
        g = gen_complete_multipartite((3, 3))
        c = interval_coloring_search(g)
        assert verify(g, c, 1)


class TestMatching:
    @pytest.mark.parametrize("g, size", [(gen_cycle(5), 2), (gen_complete(4), 2), (PETERSEN, 5)])
    def test_sizes(self, g, size):
        m = max_matching(g)
        assert len(m) == size
        ends = [x for e in m for x in g.edges[e]]
        assert len(ends) == len(set(ends))

    def test_petersen_size_by_brute_force(self):
        best = 0
        for r in range(1, 6):
            for combo in combinations(PETERSEN.edges, r):
                ends = [x for e in combo for x in e]
                if len(ends) == len(set(ends)):
                    best = r
        assert best == 5

    def test_bipartite_matching(self):
        assert bipartite_matching(2, 2, [[0, 1], [0]]) == [1, 0]
        assert bipartite_matching(2, 1, [[0], [0]]) == [0, -1]


class TestSplitting:
    def test_star(self):
        h, origin = split_vertices(gen_star(6), 3)
        center = [v for v in range(h.n) if origin[v] == 0]
        assert sorted(h.degree(v) for v in center) == [3, 3]

    def test_identity_when_degree_small(self):
        g = gen_cycle(5)
        h, origin = split_vertices(g, 2)
        assert h.edges == g.edges and origin == tuple(range(5))

    def test_k33_target2(self):
        g = gen_complete_multipartite((3, 3))
        h, origin = split_vertices(g, 2)
        assert h.m == 9 and h.max_degree <= 2
        assert max(origin.count(v) for v in range(g.n)) <= 2
        assert sorted(contract(h, origin, g.n)) == sorted(g.edges)

    def test_bipartiteness_kept(self):
        h, _ = split_vertices(gen_hertz(3, 2), 3)
        bipartition(h)

    def test_outerplanar_degree2_split(self):
        g = gen_path(3).with_boundary((0, 1, 2))
        h = split_vertex_outerplanar(g, 1, 1, 1)
        assert h.n == 4 and h.max_degree == 1

    def test_fan_hub_split_stays_outerplanar(self):
        h = split_vertex_outerplanar(fan(4), 0, 2, 2)
        assert is_outerplanar(h) and not chords_cross(h.boundary, h)
        assert sorted(h.degrees)[-1] <= 3

    def test_outerplanar_split_needs_positive_parts(self):
        g = fan(4)
        with pytest.raises(PreconditionError):
            split_vertex_outerplanar(g, 0, 4, 0)
        with pytest.raises(PreconditionError):
            split_vertex_outerplanar(g, 0, 1, 2)

    def test_split_to_degree(self):
        g = fan(9)
        h, origin = split_outerplanar_to_degree(g, 4)
        assert h.max_degree <= 4 and is_outerplanar(h)
        assert sorted(contract(h, origin, g.n)) == sorted(g.edges)


class TestOuterplanar:
    def test_recognizer(self):
        assert is_outerplanar(fan(5))
        assert not is_outerplanar(gen_complete(4))
        assert not is_outerplanar(gen_complete_multipartite((2, 3)))

    def test_boundary_of_two_triangles(self):
        order = outer_boundary(TWO_TRIANGLES)
        assert sorted(order) == list(range(5)) and not chords_cross(order, TWO_TRIANGLES)


class TestBlocks:
    def test_tree(self):
        g = gen_path(5)
        assert blocks(g).blocks == ((0,), (1,), (2,), (3,))

    def test_cycle(self):
        assert len(blocks(gen_cycle(5)).blocks) == 1

    def test_two_triangles(self):
        dec = blocks(TWO_TRIANGLES)
        assert len(dec.blocks) == 2 and dec.cut_vertices == (2,)

    def test_assemble_two_triangles(self):
        dec = blocks(TWO_TRIANGLES)
        c = assemble_block_colorings(TWO_TRIANGLES, dec.blocks, [[1, 1, 2], [1, 1, 2]], 2)
        assert verify(TWO_TRIANGLES, c, 2)

    def test_assemble_single_block(self):
        g = gen_cycle(4)
        assert assemble_block_colorings(g, [(0, 1, 2, 3)], [[1, 2, 1, 2]], 1) == (1, 2, 1, 2)

    def test_assemble_path_of_bridges(self):
        g = gen_path(4)
        c = assemble_block_colorings(g, [(0,), (1,), (2,)], [[1], [1], [1]], 1)
        assert verify(g, c, 1) and sorted(c) == [1, 2, 3]

    def test_assemble_rejects_invalid_block(self):
        g = gen_path(3)
        with pytest.raises(Exception):
            assemble_block_colorings(g, [(0, 1)], [[1, 3]], 1)


class TestStructure:
    def test_tree_and_triangle(self):
        assert is_tree(gen_path(4)) and not is_tree(gen_cycle(4))
        assert has_triangle(gen_complete(3)) and not has_triangle(gen_cycle(4))

    def test_all_paths_oracle_sanity(self):
        assert len(all_paths(3, [(0, 1), (1, 2)])) == 6  # each of 3 paths in both directions
