import random
from unittest.mock import patch

import pytest

from hypertri.core.exceptions import OracleLimitError
from hypertri.core.hypergraph import Hypergraph
from hypertri.estimators.oracle import exact_count
from hypertri.schemas.estimates import ExactCounts


class TestExactCountExamples:
    """Test suite for exact_count on hand-enumerated instances."""

    def test_chain(self, chain_hypergraph):
        """Test the three-edge chain: two hybrid pairs and one TTT triple."""
        counts = exact_count(chain_hypergraph)

        assert counts == ExactCounts(inner=3, hybrid=4, outer=0, ttt=1)

    def test_single_edge(self):
        """Test that a lone edge only has inner triangles."""
        counts = exact_count(Hypergraph.from_vertex_sets([[1, 2, 3]]))

        assert counts == ExactCounts(inner=1)

    def test_nested(self, nested_hypergraph):
        """Test a subset pair: one hybrid configuration and a TTC triple."""
        counts = exact_count(nested_hypergraph)

        assert counts == ExactCounts(inner=1, hybrid=1, outer=0, ttc=1)

    def test_outer_triangle(self):
        """Test three edges with one exclusive vertex per pairwise region."""
        counts = exact_count(Hypergraph.from_vertex_sets([[1, 2], [2, 3], [1, 3]]))

        assert counts.outer == 1
        assert counts.ttt == 1

    def test_triple_with_zero_outer_still_classified(self):
        """Test that every pairwise region equal to the triple core gives outer 0 but one class count."""
        counts = exact_count(Hypergraph.from_vertex_sets([[1, 2], [1, 3], [1, 4]]))

        assert counts.outer == 0
        assert counts.ttt == 1

    def test_identical_edges_are_ccc(self):
        """Test that three copies of one edge form a CCC triple."""
        counts = exact_count(Hypergraph.from_vertex_sets([[1, 2, 3]] * 3))

        assert counts.ccc == 1
        assert counts.inner == 3
        assert counts.hybrid == 0

    def test_empty_hypergraph(self):
        """Test that no edges means all zeros."""
        assert exact_count(Hypergraph()) == ExactCounts()


class TestExactCountProperties:
    """Test suite for exact_count against an independent enumerator."""

    def test_matches_configuration_enumeration(self, random_hypergraphs, configuration_counter):
        """Test 100 random hypergraphs against explicit configuration listing."""
        for h in random_hypergraphs(100, seed=1, max_edges=12, max_vertices=8):
            assert exact_count(h) == configuration_counter(h)

    def test_classes_partition_intersecting_triples(self, random_hypergraphs):
        """Test that class counts add up to the pairwise-intersecting triples."""
        for h in random_hypergraphs(40, seed=2):
            edges = [e.vertex_set for e in h]
            expected = sum(
                1
                for i in range(len(edges))
                for j in range(i + 1, len(edges))
                for k in range(j + 1, len(edges))
                if edges[i] & edges[j] and edges[i] & edges[k] and edges[j] & edges[k]
            )
            assert exact_count(h).intersecting_triples == expected

    def test_permutation_invariant(self, random_hypergraphs):
        """Test that arrival order does not change the counts."""
        rng = random.Random(5)
        for h in random_hypergraphs(30, seed=3):
            order = list(range(len(h)))
            rng.shuffle(order)
            assert exact_count(h.reindexed(order)) == exact_count(h)


class TestExactCountCap:
    """Test suite for the edge-count guard."""

    def test_explicit_cap(self):
        """Test that inputs above the cap are refused."""
        h = Hypergraph.from_vertex_sets([[1], [2], [3]])

        with pytest.raises(OracleLimitError) as exc_info:
            exact_count(h, edge_cap=2)

        assert exc_info.value.edges == 3
        assert exc_info.value.cap == 2

    @patch('hypertri.estimators.oracle.settings')
    def test_cap_from_settings(self, mock_settings):
        """Test that the default cap comes from settings."""
        mock_settings.oracle_edge_cap = 1

        with pytest.raises(OracleLimitError):
            exact_count(Hypergraph.from_vertex_sets([[1], [2]]))

    @patch('hypertri.estimators.oracle.logger')
    def test_refusal_is_logged(self, mock_logger):
        """Test that a refusal is logged as an error."""
        with pytest.raises(OracleLimitError):
            exact_count(Hypergraph.from_vertex_sets([[1], [2]]), edge_cap=1)

        mock_logger.error.assert_called_once()
