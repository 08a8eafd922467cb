import pytest
from django.test import SimpleTestCase, override_settings

from certification import certify, oracle
from certification.exceptions import InputHasTriangleError, OverBudgetError
from graph_test_utils.factories import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)
from graphs.families import build_cycle, build_G, build_H, maximal_completion, mycielskian, remark1_augment
from graphs.graph_core import rim_graph

ODD_FAMILY = [build_G(m) for m in (5, 7, 9, 11, 13)]
EVEN_FAMILY = [build_H(m) for m in (6, 8, 10, 12)]
AUGMENTED = [remark1_augment(build_H(m)).graph for m in (6, 8, 10, 12)]
COMPLETED = [maximal_completion(build_H(m))[0] for m in (8, 12)]


class TestChromaticOracle:
    @pytest.mark.parametrize('g', [
        build_G(5),
        build_H(6),
        build_G(7),
        build_cycle(5),
        build_cycle(6),
        complete_graph(4),
        mycielskian(complete_graph(2)),
    ], ids=['G5', 'H6', 'G7', 'C5', 'C6', 'K4', 'M(K2)'])
    def test_agrees_with_exact_search(self, g):
        """Test brute force against the exact search"""
        assert oracle.brute_force_chromatic(g) == certify.chromatic_number(g).k

    def test_small_values(self):
        """Test the empty graph, an edgeless graph and Petersen"""
        assert oracle.brute_force_chromatic(rim_graph(0, [])) == 0
        assert oracle.brute_force_chromatic(rim_graph(4, [])) == 1
        assert oracle.brute_force_chromatic(petersen_graph()) == 3

    def test_refuses_large_graphs(self):
        """Test refusing graphs above the coloring budget"""
        with pytest.raises(OverBudgetError) as exc_info:
            oracle.brute_force_chromatic(build_G(9))
        assert exc_info.value.vertex_count == 19
        assert exc_info.value.limit == 15


class TestTriangleOracle:
    @pytest.mark.parametrize('g', ODD_FAMILY + EVEN_FAMILY + COMPLETED)
    def test_agrees_on_triangle_free_graphs(self, g):
        """Test no triangles across both families"""
        assert oracle.enumerate_triangles(g) == []
        assert certify.is_triangle_free(g).triangle_free

    @pytest.mark.parametrize('g', AUGMENTED)
    def test_agrees_on_augmented_graphs(self, g):
        """Test triangle enumeration against the fast check"""
        triangles = oracle.enumerate_triangles(g)
        check = certify.is_triangle_free(g)
        assert check.triangle_free == (not triangles)
        if triangles:
            assert check.witness in triangles

    def test_h8_chords_close_triangle_through_p1_p5(self):
        """Test a triangle through p1 p5 after augmenting H_8"""
        g = remark1_augment(build_H(8)).graph
        names = [{str(label) for label in t.labels(g)} for t in oracle.enumerate_triangles(g)]
        assert {'p1', 'p5', 'q8'} in names
        assert {'p1', 'p5', 'q2'} in names

    def test_counts_each_triangle_once(self):
        """Test K_5 yields ten triangles"""
        triangles = oracle.enumerate_triangles(complete_graph(5))
        assert len(triangles) == 10
        assert all(t.validate(complete_graph(5)) for t in triangles)


class MaximalityOracleTest(SimpleTestCase):
    """Test suite for exhaustive_maximality against maximality_check"""

    def test_agreement_on_sweeps(self):
        """Test verdicts agree across the sweeps"""
        triangle_free = ODD_FAMILY + EVEN_FAMILY + COMPLETED + [
            g for g in AUGMENTED if certify.is_triangle_free(g).triangle_free
        ]
        for g in triangle_free:
            with self.subTest(graph=f"{g.family}_{g.m}"):
                fast = certify.maximality_check(g)
                slow = oracle.exhaustive_maximality(g)
                self.assertEqual(fast.maximal, slow.maximal)
                if not slow.maximal:
                    self.assertEqual(oracle.enumerate_triangles(g.with_edges([fast.witness])), [])

    def test_augmented_h6_and_h10_are_maximal(self):
        """Test chord augmentation of H_6 and H_10 is maximal"""
        for m in (6, 10):
            with self.subTest(m=m):
                self.assertTrue(oracle.exhaustive_maximality(remark1_augment(build_H(m)).graph).maximal)

    def test_triangle_input_rejected(self):
        """Test rejecting input with a triangle"""
        with self.assertRaises(InputHasTriangleError):
            oracle.exhaustive_maximality(complete_graph(3))

    def test_small_graphs(self):
        """Test K_{2,3} and P_4"""
        self.assertTrue(oracle.exhaustive_maximality(complete_bipartite(2, 3)).maximal)
        self.assertEqual(oracle.exhaustive_maximality(path_graph(4)).witness, (0, 3))


class GirthOracleTest(SimpleTestCase):
    """Test suite for fixed_girth_check against girth"""

    def test_families(self):
        """Test girth 4 across both families"""
        for g in ODD_FAMILY + EVEN_FAMILY:
            with self.subTest(graph=f"{g.family}_{g.m}"):
                verdict = oracle.fixed_girth_check(g)
                self.assertTrue(verdict.girth_is_four)
                self.assertEqual(verdict.value, certify.girth(g))

    def test_other_girths(self):
        """Test girths other than 4"""
        cases = [
            (complete_graph(4), 3),
            (cycle_graph(5), 5),
            (cycle_graph(8), 8),
            (petersen_graph(), 5),
            (path_graph(5), None),
        ]
        for g, expected in cases:
            with self.subTest(expected=expected):
                verdict = oracle.fixed_girth_check(g)
                self.assertFalse(verdict.girth_is_four)
                self.assertEqual(verdict.value, expected)
                self.assertEqual(verdict.value, certify.girth(g))

    def test_refuses_large_graphs(self):
        """Test refusing graphs above the structural budget"""
        with self.assertRaises(OverBudgetError):
            oracle.fixed_girth_check(build_H(22))


class OracleBudgetSettingsTest(SimpleTestCase):
    @override_settings(GGG_ORACLE_MAX_COLORING_VERTICES=11, GGG_ORACLE_MAX_VERTICES=20)
    def test_budget_from_settings(self):
        """Test reading budgets from settings"""
        budget = oracle.OracleBudget.from_settings()
        self.assertEqual(budget, oracle.OracleBudget(max_chromatic_vertices=11, max_structural_vertices=20))
        self.assertEqual(oracle.brute_force_chromatic(build_G(5), budget), 4)
        with self.assertRaises(OverBudgetError):
            oracle.brute_force_chromatic(build_H(6), budget)

    @override_settings(GGG_ORACLE_MAX_COLORING_VERTICES=11, GGG_ORACLE_MAX_VERTICES=12)
    def test_oracles_default_to_settings(self):
        """Oracles called without a budget honour the GGG_ORACLE_* settings."""
        self.assertEqual(oracle.brute_force_chromatic(build_G(5)), 4)
        with self.assertRaises(OverBudgetError):
            oracle.brute_force_chromatic(build_H(6))
        with self.assertRaises(OverBudgetError):
            oracle.enumerate_triangles(build_H(6))
        self.assertTrue(oracle.fixed_girth_check(build_G(5)).girth_is_four)
