import pytest

from spinweb.census import graph_from_index, tournament_from_index
from spinweb.classifier import (AppliedTo, FamilyKind, NotASpinModel,
                                VerdictCase, classify_symmetric,
                                classify_tournament, family_of,
                                is_regular_tournament)
from spinweb.graphs import (Graph, circulant_tournament, clebsch, complement,
                            complete, cycle, paley, petersen, union_complete)
from spinweb.statesum import spin_model_verdict
from tests.conftest import load_fixture


class TestClassifySymmetric:
    def test_pentagon(self):
        v = classify_symmetric(cycle(5))
        assert v.is_spin_model and v.case is VerdictCase.PENTAGON
        assert v.family.kind is FamilyKind.KAUFFMAN and v.family.dims == (13,)

    def test_k5(self):
        v = classify_symmetric(complete(5))
        assert v.case is VerdictCase.UNION_OF_COMPLETES
        assert v.family.kind is FamilyKind.TLJ and v.family.dims == (5,)

    def test_2k3(self):
        v = classify_symmetric(union_complete(2, 3))
        assert v.is_spin_model
        assert v.family.kind is FamilyKind.BISCH_JONES and v.family.dims == (11,)

    def test_paley9(self):
        v = classify_symmetric(paley(9))
        assert v.case is VerdictCase.Q_CONDITION_HOLDS and v.q_value == 3
        assert v.family.kind is FamilyKind.KAUFFMAN

    def test_petersen(self):
        v = classify_symmetric(petersen())
        assert not v.is_spin_model
        assert "not 3-point regular" in v.reason

    def test_schlafli_is_smith(self):
        g = load_fixture("schlafli")
        from spinweb.regularity import srg_params
        assert srg_params(g).as_tuple() == (27, 16, 10, 8)
        v = classify_symmetric(g)
        assert not v.is_spin_model and v.q_value == 0
        assert "Smith" in v.reason

    def test_clebsch_triangle_free_branch(self):
        v = classify_symmetric(clebsch())
        assert v.is_spin_model and v.case is VerdictCase.Q_CONDITION_HOLDS
        assert v.q_value == -1

    def test_clebsch_complement_matches_on_other_side(self):
        v = classify_symmetric(complement(clebsch()))
        assert v.is_spin_model and v.applied_to is AppliedTo.COMPLEMENT

    def test_k3_tie_resolves_to_union(self):
        assert classify_symmetric(complete(3)).case is VerdictCase.UNION_OF_COMPLETES

    def test_k1_accepted(self):
        v = classify_symmetric(complete(1))
        assert v.is_spin_model and v.family.kind is FamilyKind.TLJ

    def test_empty_graph_is_tlj(self):
        v = classify_symmetric(Graph(6, (0,) * 6))
        assert v.is_spin_model and v.family.kind is FamilyKind.TLJ

    def test_unequal_union_rejected(self):
        g = Graph.from_edges(3, [(0, 1)])  # K2 + K1
        assert not classify_symmetric(g).is_spin_model

    def test_complement_invariance_exhaustive_n6(self):
        for idx in range(1 << 15):
            g = graph_from_index(6, idx)
            assert classify_symmetric(g).is_spin_model == \
                classify_symmetric(complement(g)).is_spin_model

    def test_total_function_on_random_inputs(self):
        import random
        rng = random.Random(9)
        for _ in range(200):
            n = rng.randint(1, 9)
            g = graph_from_index(n, rng.getrandbits(n * (n - 1) // 2))
            classify_symmetric(g)  # must not raise

    def test_pentagon_only_triangle_free_k2_spin_model_up_to_10(self):
        # 2-regular graphs are cycle unions; scan one representative per
        # cycle-length partition, which covers every isomorphism type
        from spinweb.regularity import freeness

        def partitions(n, smallest=3):
            if n == 0:
                yield ()
                return
            for first in range(smallest, n + 1):
                for rest in partitions(n - first, first):
                    yield (first,) + rest

        pentagons = 0
        for n in range(3, 11):
            for part in partitions(n):
                offset, edges = 0, []
                for length in part:
                    edges += [(offset + i, offset + (i + 1) % length)
                              for i in range(length)]
                    offset += length
                g = Graph.from_edges(n, edges)
                v = classify_symmetric(g)
                if not v.is_spin_model:
                    continue
                # the square is a spin model as the complement of 2K2, so
                # union-of-completes verdicts never reach the classifier's
                # triangle-free branch; only the pentagon remains there
                if v.case is VerdictCase.UNION_OF_COMPLETES:
                    continue
                free = freeness(g)
                assert free.triangle_free and not free.lambda_free
                assert part == (5,) and v.case is VerdictCase.PENTAGON
                pentagons += 1
        assert pentagons == 1

    def test_triangle_free_3pt_regular_hits_have_positive_q0(self):
        from spinweb.census import CensusConfig, CensusMode, run_census
        from spinweb.regularity import freeness, three_point_params
        res = run_census(CensusConfig(max_n=6, mode=CensusMode.LIST_SPIN_MODELS))
        checked = 0
        for hit in res.hits:
            g = graph_from_index(hit.n, hit.index)
            p = three_point_params(g)
            if p is None or not freeness(g).triangle_free or p.srg.k < 3:
                continue
            assert p.q0 > 0
            checked += 1
        assert checked > 0  # K_{3,3} shows up at n = 6


class TestFamilyOf:
    def test_2k2(self):
        fam = family_of(union_complete(2, 2))
        assert fam.kind is FamilyKind.BISCH_JONES and fam.dims == (10,)

    def test_3k4(self):
        fam = family_of(union_complete(3, 4))
        assert fam.kind is FamilyKind.BISCH_JONES and fam.dims == (12,)

    def test_clebsch(self):
        fam = family_of(clebsch())
        assert fam.kind is FamilyKind.KAUFFMAN and fam.dims == (14, 15)

    def test_3k2_untabulated(self):
        fam = family_of(union_complete(3, 2))
        assert fam.kind is FamilyKind.BISCH_JONES
        assert fam.untabulated and fam.dims == ()

    def test_not_a_spin_model(self):
        with pytest.raises(NotASpinModel):
            family_of(petersen())


class TestTournaments:
    def test_3cycle(self):
        v = classify_tournament(circulant_tournament(3, {1}))
        assert v.is_spin_model and v.case is VerdictCase.THREE_CYCLE
        assert v.family.kind is FamilyKind.BISCH_JONES and v.family.dims == (9,)

    def test_qr7_not_spin_model(self):
        v = classify_tournament(circulant_tournament(7, {1, 2, 4}))
        assert not v.is_spin_model
        assert "inconsistent" in v.reason
        assert not spin_model_verdict(circulant_tournament(7, {1, 2, 4}))

    def test_all_4_vertex_tournaments_rejected(self):
        for idx in range(1 << 6):
            v = classify_tournament(tournament_from_index(4, idx))
            assert not v.is_spin_model
            assert v.reason == "not a regular tournament"

    def test_single_vertex(self):
        v = classify_tournament(tournament_from_index(1, 0))
        assert not v.is_spin_model

    def test_is_regular_tournament(self):
        assert is_regular_tournament(circulant_tournament(3, {1})) == 1
        assert is_regular_tournament(circulant_tournament(5, {1, 2})) == 2
        assert all(is_regular_tournament(tournament_from_index(4, idx)) is None
                   for idx in range(1 << 6))
