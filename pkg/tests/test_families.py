from __future__ import annotations

import pytest

from helpers import connected_labeled_count
from pcopt.errors import BudgetError, ParameterError
from pcopt.families import (
    all_labeled_trees,
    clique_cycle_blowup,
    complete_multipartite,
    cycle_graph,
    enumerate_connected_graphs,
    generate,
    random_connected,
    random_tree,
)
from pcopt.graphs import compute_stats, is_connected, is_tree


class TestGenerate:
    def test_k23_edge_count(self):
        g = generate("complete_bipartite", [2, 3])
        assert g.m == 6

    def test_singleton_blowup_is_five_cycle(self):
        g = generate("clique_cycle_blowup", [1, 1, 1, 1, 1])
        assert g == cycle_graph(5)

    def test_star_degree(self):
        g = generate("star", [4])
        assert compute_stats(g).max_degree == 4

    def test_multipart_sizes(self):
        g = complete_multipartite([2, 2, 2])
        assert g.n == 6 and g.m == 12

    def test_blowup_structure(self):
        g = clique_cycle_blowup([2, 1, 1, 1, 1])
        # one internal clique edge plus the ring joins
        assert g.n == 6
        assert g.has_edge(0, 1)
        assert not g.has_edge(0, 3)

    def test_random_kinds_deterministic(self):
        assert random_tree(9, 42) == random_tree(9, 42)
        assert random_connected(8, 0.4, 7) == random_connected(8, 0.4, 7)
        assert generate("random_tree", [9], seed=42) == random_tree(9, 42)

    def test_random_connected_is_connected(self):
        for seed in range(5):
            assert is_connected(random_connected(9, 0.3, seed))

    def test_parameter_errors(self):
        with pytest.raises(ParameterError):
            generate("cycle", [2])
        with pytest.raises(ParameterError):
            generate("star", [0])
        with pytest.raises(ParameterError):
            generate("clique_cycle_blowup", [1, 1, 1])
        with pytest.raises(ParameterError):
            generate("random_connected", [5, 1.5])
        with pytest.raises(ParameterError):
            generate("mystery", [1])


class TestEnumeration:
    def test_two_vertices(self):
        assert sum(1 for _ in enumerate_connected_graphs(2)) == 1

    def test_three_vertices(self):
        graphs = list(enumerate_connected_graphs(3))
        assert len(graphs) == 4
        assert len(set(graphs)) == 4

    def test_four_vertices_frozen(self):
        # 38, independently confirmed by the component recurrence
        assert sum(1 for _ in enumerate_connected_graphs(4)) == 38
        assert connected_labeled_count(4) == 38

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_recurrence(self, n):
        got = sum(1 for _ in enumerate_connected_graphs(n))
        assert got == connected_labeled_count(n)

    def test_cap(self):
        with pytest.raises(BudgetError):
            next(enumerate_connected_graphs(8))

    def test_all_connected(self):
        assert all(is_connected(g) for g in enumerate_connected_graphs(4))


class TestTrees:
    @pytest.mark.parametrize("n,count", [(2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)])
    def test_labeled_tree_counts(self, n, count):
        trees = list(all_labeled_trees(n))
        assert len(trees) == count
        assert len(set(trees)) == count

    def test_all_are_trees(self):
        assert all(is_tree(t) for t in all_labeled_trees(5))

    def test_random_tree_is_tree(self):
        for seed in range(10):
            assert is_tree(random_tree(11, seed))
