import json

import pytest
from django.test import SimpleTestCase

from graph_test_utils.factories import complete_graph, grotzsch_reference, path_graph
from graphs.exceptions import GraphFormatError, IndexOutOfRangeError, LabelOrderError, SelfLoopError
from graphs.families import build_G, build_H
from graphs.graph_core import (
    VertexKind,
    VertexLabel,
    build_graph,
    degree_sequence,
    export_dot,
    export_json,
    family_labels,
    import_json,
    rim_graph,
    rim_labels,
)


class TestVertexLabel:
    def test_canonical_order_is_hub_rims_spokes(self):
        """Test that labels sort hub first, then rim, then spoke tips"""
        labels = family_labels(3)
        assert [str(label) for label in labels] == ['a', 'p1', 'p2', 'p3', 'q1', 'q2', 'q3']
        assert list(labels) == sorted(labels)

    def test_parse(self):
        """Test parsing the three label forms"""
        assert VertexLabel.parse('a') == VertexLabel.hub()
        assert VertexLabel.parse('p12') == VertexLabel(VertexKind.RIM, 12)
        assert VertexLabel.parse('q3') == VertexLabel.spoke(3)

    @pytest.mark.parametrize('text', ['', 'b', 'p0', 'q', 'p-1', 'a1', 'P2'])
    def test_parse_rejects_malformed(self, text):
        """Test rejecting malformed label strings"""
        with pytest.raises(GraphFormatError):
            VertexLabel.parse(text)


class BuildGraphTest(SimpleTestCase):
    """Test suite for build_graph validation"""

    def test_duplicate_edges_collapse(self):
        """Test that repeated pairs yield a single edge"""
        g = rim_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
        self.assertEqual(g.edge_count, 2)
        self.assertEqual(g.adjacency, ((1,), (0, 2), (1,)))

    def test_self_loop_rejected(self):
        """Test rejecting a pair (v, v)"""
        with self.assertRaises(SelfLoopError) as ctx:
            rim_graph(3, [(0, 1), (2, 2)])
        self.assertEqual(ctx.exception.vertex, 2)

    def test_index_out_of_range(self):
        """Test rejecting an endpoint past the last vertex"""
        with self.assertRaises(IndexOutOfRangeError) as ctx:
            rim_graph(3, [(0, 3)])
        self.assertEqual(ctx.exception.vertex, 3)
        self.assertEqual(ctx.exception.vertex_count, 3)

    def test_negative_index_rejected(self):
        """Test rejecting a negative endpoint"""
        with self.assertRaises(IndexOutOfRangeError):
            rim_graph(3, [(-1, 0)])

    def test_labels_out_of_order(self):
        """Test rejecting labels outside canonical order"""
        with self.assertRaises(LabelOrderError):
            build_graph([VertexLabel.rim(2), VertexLabel.rim(1)], [])

    def test_duplicate_labels(self):
        """Test rejecting a repeated label"""
        with self.assertRaises(LabelOrderError):
            build_graph([VertexLabel.rim(1), VertexLabel.rim(1)], [])

    def test_label_index_above_m(self):
        """Test rejecting a rim index larger than m"""
        with self.assertRaises(LabelOrderError):
            build_graph(rim_labels(4), [], m=3)

    def test_errors_are_value_errors(self):
        """Test that graph errors are ValueErrors"""
        with self.assertRaises(ValueError):
            rim_graph(2, [(0, 0)])

    def test_empty_graph(self):
        """Test the graph with no vertices"""
        g = rim_graph(0, [])
        self.assertEqual(g.n, 0)
        self.assertEqual(list(g.edges()), [])


class TestGraphQueries:
    def test_adjacency_is_symmetric_and_sorted(self):
        """Test adjacency symmetry and ascending neighbour order"""
        g = build_H(8)
        for v in g.vertices():
            assert list(g.neighbors(v)) == sorted(g.neighbors(v))
            for w in g.neighbors(v):
                assert g.has_edge(w, v)
                assert w != v

    def test_edges_are_lexicographic(self):
        """Test edge iteration order"""
        g = build_G(7)
        edges = list(g.edges())
        assert edges == sorted(edges)
        assert all(u < v for u, v in edges)
        assert len(edges) == g.edge_count

    def test_non_edges_complement_edges(self):
        """Test that edges and non-edges partition all pairs"""
        g = build_G(5)
        n = g.n
        assert len(list(g.non_edges())) == n * (n - 1) // 2 - g.edge_count
        assert not any(g.has_edge(u, v) for u, v in g.non_edges())

    def test_common_neighbors(self):
        """Test common neighbours in ascending order"""
        g = build_G(5)
        a = g.index_of(VertexLabel.hub())
        p2 = g.index_of(VertexLabel.rim(2))
        # the hub and p2 meet at the spoke tips q1 and q3
        assert [str(g.labels[v]) for v in g.common_neighbors(a, p2)] == ['q1', 'q3']
        assert g.common_neighbors(g.index_of(VertexLabel.rim(1)), g.index_of(VertexLabel.rim(2))) == []

    def test_with_edges_leaves_receiver_untouched(self):
        """Test that adding edges returns a new graph"""
        g = path_graph(4)
        closed = g.with_edges([(0, 3)])
        assert g.edge_count == 3
        assert closed.edge_count == 4
        assert closed.has_edge(0, 3)
        assert not g.has_edge(0, 3)

    def test_index_of_unknown_label(self):
        """Test looking up a label the graph lacks"""
        with pytest.raises(KeyError):
            build_G(5).index_of(VertexLabel.rim(9))

    def test_degree_sequence(self):
        """Test descending degree sequence"""
        assert degree_sequence(build_G(5)) == [5] + [4] * 5 + [3] * 5
        assert degree_sequence(complete_graph(4)) == [3, 3, 3, 3]


class ExportTest(SimpleTestCase):
    """Test suite for the DOT and adjacency-JSON exporters"""

    def test_dot_has_one_edge_statement_per_edge(self):
        """Test DOT output edge statements"""
        source = export_dot(build_G(7))
        self.assertTrue(source.startswith('graph G {'))
        self.assertEqual(sum(1 for line in source.splitlines() if ' -- ' in line), 35)
        self.assertIn('\tp1 -- p2', source)

    def test_dot_is_deterministic(self):
        """Test that DOT output repeats exactly"""
        self.assertEqual(export_dot(build_H(6)), export_dot(build_H(6)))

    def test_json_fields(self):
        """Test adjacency-JSON document fields"""
        document = json.loads(export_json(build_H(6)))
        self.assertEqual(document['n'], 13)
        self.assertEqual(document['family'], 'H')
        self.assertEqual(document['m'], 6)
        self.assertEqual(len(document['edges']), 30)
        self.assertEqual(document['vertices'][0], 'a')

    def test_json_import_restores_graph(self):
        """Test importing an exported graph"""
        g = build_G(5)
        self.assertEqual(import_json(export_json(g)), g)

    def test_reference_fixture(self):
        """Test the bundled Grötzsch fixture"""
        g = grotzsch_reference()
        self.assertEqual((g.n, g.edge_count), (11, 20))
        self.assertIsNone(g.family)


class TestImportErrors:
    @pytest.mark.parametrize('text', [
        'not json',
        '{}',
        '{"family": null, "m": 0, "vertices": ["p1"]}',
        '{"family": null, "m": 0, "vertices": ["p1", "p2"], "edges": [["p1", "p3"]]}',
        '{"family": null, "m": 0, "vertices": ["p1", "p1"], "edges": []}',
        '{"family": null, "m": 0, "n": 3, "vertices": ["p1", "p2"], "edges": []}',
        '{"family": null, "m": 0, "vertices": ["x1"], "edges": []}',
    ])
    def test_malformed_documents(self, text):
        """Test rejecting malformed adjacency-JSON"""
        with pytest.raises(GraphFormatError):
            import_json(text)
