import random
from itertools import combinations, permutations

import pytest

from spinweb.graphs import (BadOrder, Graph, PairType, Tournament, TripleType,
                            circulant_tournament, clebsch, complement,
                            complete, connected_components, cycle,
                            is_connected, pair_type, paley, petersen,
                            triple_type, union_complete)


def isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism check, fine for n <= 8."""
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return any(
        all(g.has_edge(a, b) == h.has_edge(perm[a], perm[b])
            for a in range(g.n) for b in range(a + 1, g.n))
        for perm in permutations(range(g.n)))


def random_graph(rng, n):
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)
                                if rng.random() < 0.5])


class TestGraphType:
    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            Graph(2, (2, 0))

    def test_rejects_loop(self):
        with pytest.raises(ValueError):
            Graph(1, (1,))

    def test_rejects_empty_vertex_set(self):
        with pytest.raises(ValueError):
            Graph(0, ())


class TestComplement:
    def test_involution_on_random_graphs(self):
        rng = random.Random(1)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 10))
            assert complement(complement(g)) == g

    def test_complement_k5_is_edgeless(self):
        assert complement(complete(5)).edge_count() == 0

    def test_c5_is_self_complementary(self):
        assert isomorphic(complement(cycle(5)), cycle(5))

    def test_complement_2k2_is_c4(self):
        got = complement(union_complete(2, 2))
        # 2K2 on vertices (0,1)(2,3); its complement is the 4-cycle 0-2-1-3
        assert sorted(got.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]
        assert isomorphic(got, cycle(4))


class TestTripleTypes:
    def test_k3_triangle(self):
        assert triple_type(complete(3), 0, 1, 2) is TripleType.TRIANGLE

    def test_c5_consecutive_is_lambda(self):
        assert triple_type(cycle(5), 0, 1, 2) is TripleType.LAMBDA

    def test_empty_graph_anti_triangle(self):
        g = Graph(4, (0, 0, 0, 0))
        assert triple_type(g, 0, 2, 3) is TripleType.ANTI_TRIANGLE

    def test_degenerate(self):
        assert triple_type(complete(3), 0, 0, 2) is TripleType.DEGENERATE

    def test_complement_swaps_types(self):
        rng = random.Random(2)
        swap = {TripleType.TRIANGLE: TripleType.ANTI_TRIANGLE,
                TripleType.ANTI_TRIANGLE: TripleType.TRIANGLE,
                TripleType.LAMBDA: TripleType.ANTI_LAMBDA,
                TripleType.ANTI_LAMBDA: TripleType.LAMBDA}
        for _ in range(50):
            g = random_graph(rng, 7)
            gc = complement(g)
            for a, b, c in combinations(range(7), 3):
                assert triple_type(gc, a, b, c) is swap[triple_type(g, a, b, c)]

    def test_pair_type(self):
        g = cycle(4)
        assert pair_type(g, 1, 1) is PairType.EQUAL
        assert pair_type(g, 0, 1) is PairType.ADJACENT
        assert pair_type(g, 0, 2) is PairType.NON_ADJACENT


class TestGenerators:
    def test_paley5_is_pentagon(self):
        assert paley(5) == cycle(5)

    def test_paley13(self):
        g = paley(13)
        assert g.n == 13 and all(d == 6 for d in g.degrees())

    def test_paley9_is_rook_graph(self):
        g = paley(9)
        assert g.n == 9 and all(d == 4 for d in g.degrees())

    def test_paley_rejects_bad_orders(self):
        for q in (2, 4, 7, 15, 21, 25):
            with pytest.raises(BadOrder):
                paley(q)

    def test_clebsch_order_and_degree(self):
        g = clebsch()
        assert g.n == 16 and all(d == 5 for d in g.degrees())

    def test_petersen_is_kneser52(self):
        g = petersen()
        assert g.n == 10 and all(d == 3 for d in g.degrees())
        # girth 5: no triangles by direct scan
        assert not any(
            g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
            for a, b, c in combinations(range(10), 3))

    def test_union_complete_blocks(self):
        g = union_complete(3, 3)
        assert g.n == 9
        assert [sorted(c) for c in connected_components(g)] == \
            [[0, 1, 2], [3, 4, 5], [6, 7, 8]]

    def test_cycle_rejects_small(self):
        with pytest.raises(BadOrder):
            cycle(2)

    def test_circulant_tournament_3cycle(self):
        t = circulant_tournament(3, {1})
        assert t.has_arc(0, 1) and t.has_arc(1, 2) and t.has_arc(2, 0)
        assert not t.has_arc(1, 0)

    def test_circulant_tournament_invariant(self):
        for n, outset in [(3, {1}), (5, {1, 2}), (7, {1, 2, 4}), (9, {1, 2, 3, 4})]:
            t = circulant_tournament(n, outset)
            for a in range(n):
                for b in range(a + 1, n):
                    assert t.has_arc(a, b) + t.has_arc(b, a) == 1

    def test_circulant_tournament_rejections(self):
        with pytest.raises(BadOrder):
            circulant_tournament(4, {1, 2})
        with pytest.raises(BadOrder):
            circulant_tournament(5, {1, 4})
        with pytest.raises(BadOrder):
            circulant_tournament(5, {1})


class TestTournamentType:
    def test_rejects_missing_arc(self):
        with pytest.raises(ValueError):
            Tournament(2, (0, 0))

    def test_rejects_double_arc(self):
        with pytest.raises(ValueError):
            Tournament(2, (2, 1))

    def test_degrees(self):
        t = circulant_tournament(5, {1, 2})
        assert all(t.out_degree(a) == 2 and t.in_degree(a) == 2 for a in range(5))


class TestConnectivity:
    def test_k4_connected(self):
        assert is_connected(complete(4))

    def test_2k3_disconnected(self):
        assert not is_connected(union_complete(2, 3))

    def test_c5_connected(self):
        assert is_connected(cycle(5))

    def test_single_vertex(self):
        assert is_connected(complete(1))
