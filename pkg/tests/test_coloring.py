from __future__ import annotations

import random

import pytest

from pcopt.coloring import (
    EdgeColoring,
    Recoloring,
    apply_recoloring,
    exists_pc_path,
    is_properly_colored,
    is_properly_connected,
    pc_walk_reachable,
)
from pcopt.errors import PreconditionError
from pcopt.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    enumerate_connected_graphs,
    path_graph,
    random_graph,
)
from pcopt.graphs import build_graph
from pcopt.sweeps import naive_pc_path_exists, random_coloring


class TestEdgeColoring:
    def test_monochromatic(self):
        c = EdgeColoring.monochromatic(complete_graph(3))
        assert c.colors == (0, 0, 0)

    def test_from_mapping_requires_total(self):
        g = path_graph(3)
        with pytest.raises(PreconditionError):
            EdgeColoring.from_mapping(g, {(0, 1): 1})
        with pytest.raises(PreconditionError):
            EdgeColoring.from_mapping(g, {(0, 1): 1, (1, 2): 0, (0, 2): 1})

    def test_from_partial_defaults(self):
        g = path_graph(3)
        c = EdgeColoring.from_partial(g, {(2, 1): 5})
        assert c.color_of(1, 2) == 5
        assert c.color_of(0, 1) == 0

    def test_negative_rejected(self):
        with pytest.raises(PreconditionError):
            EdgeColoring(path_graph(2), (-1,))


class TestRecoloring:
    def test_canonicalization(self):
        r = Recoloring((((2, 1), 4), ((0, 1), 1)))
        assert r.assignments == (((0, 1), 1), ((1, 2), 4))
        assert (r.p, r.q, r.total_cost) == (2, 2, 4)

    def test_duplicate_edge_rejected(self):
        with pytest.raises(PreconditionError):
            Recoloring((((0, 1), 1), ((1, 0), 2)))

    def test_base_color_rejected(self):
        with pytest.raises(PreconditionError):
            Recoloring((((0, 1), 0),))

    def test_empty(self):
        r = Recoloring(())
        assert (r.p, r.q, r.total_cost) == (0, 0, 0)

    def test_q_counts_distinct(self):
        r = Recoloring((((0, 1), 1), ((2, 3), 1), ((4, 5), 2)))
        assert (r.p, r.q) == (3, 2)


class TestApplyRecoloring:
    def test_empty_on_triangle(self):
        g = complete_graph(3)
        c = apply_recoloring(g, Recoloring(()))
        assert c.colors == (0, 0, 0)

    def test_path_single_edge(self):
        g = path_graph(3)
        c = apply_recoloring(g, Recoloring((((0, 1), 1),)))
        assert c.as_mapping() == {(0, 1): 1, (1, 2): 0}

    def test_c4_two_edges(self):
        g = cycle_graph(4)
        r = Recoloring((((0, 1), 1), ((2, 3), 1)))
        c = apply_recoloring(g, r)
        assert sorted(c.colors) == [0, 0, 1, 1]
        assert (r.p, r.q) == (2, 1)

    def test_unknown_edge(self):
        with pytest.raises(PreconditionError):
            apply_recoloring(path_graph(3), Recoloring((((0, 2), 1),)))


class TestPcPath:
    def test_adjacent_pair_single_edge(self):
        g = complete_graph(3)
        c = EdgeColoring.monochromatic(g)
        assert exists_pc_path(g, c, 0, 1) == (0, 1)

    def test_mono_path_endpoints_fail(self):
        g = path_graph(3)
        c = EdgeColoring.monochromatic(g)
        assert exists_pc_path(g, c, 0, 2) is None

    def test_recolored_path_endpoints(self):
        g = path_graph(3)
        c = apply_recoloring(g, Recoloring((((0, 1), 1),)))
        assert exists_pc_path(g, c, 0, 2) == (0, 1, 2)

    def test_same_endpoint_rejected(self):
        g = path_graph(3)
        with pytest.raises(PreconditionError):
            exists_pc_path(g, EdgeColoring.monochromatic(g), 1, 1)

    def test_agrees_with_unpruned_search(self):
        rng = random.Random(13)
        for n in range(2, 6):
            for g in enumerate_connected_graphs(n):
                colors = random_coloring(g, rng)
                c = EdgeColoring(g, tuple(colors))
                for u in range(n):
                    for v in range(u + 1, n):
                        fast = exists_pc_path(g, c, u, v)
                        slow = naive_pc_path_exists(g, colors, u, v)
                        assert (fast is not None) == slow

    def test_returned_path_is_properly_colored(self):
        rng = random.Random(17)
        for _ in range(50):
            g = random_graph(rng.randint(3, 8), rng.uniform(0.3, 0.8), rng)
            c = EdgeColoring(g, tuple(random_coloring(g, rng)))
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    path = exists_pc_path(g, c, u, v)
                    if path is None:
                        continue
                    assert path[0] == u and path[-1] == v
                    assert len(set(path)) == len(path)
                    cols = [
                        c.color_of(path[i], path[i + 1])
                        for i in range(len(path) - 1)
                    ]
                    assert all(a != b for a, b in zip(cols, cols[1:]))


class TestWalkReachable:
    def test_mono_complete(self):
        g = complete_graph(4)
        c = EdgeColoring.monochromatic(g)
        assert pc_walk_reachable(g, c, 0) == frozenset({1, 2, 3})

    def test_mono_path_endpoint(self):
        g = path_graph(3)
        c = EdgeColoring.monochromatic(g)
        assert pc_walk_reachable(g, c, 0) == frozenset({1})

    def test_walk_reachable_but_not_path_reachable(self):
        # A walk can leave vertex 1, circle the colored triangle 1-3-4, and
        # re-enter 1 with a fresh color before continuing to 2; no simple
        # path can do that, so vertex 2 is walk-reachable from 0 only.
        g = build_graph(5, [(0, 1), (1, 2), (1, 3), (1, 4), (3, 4)])
        c = EdgeColoring.from_mapping(
            g, {(0, 1): 1, (1, 2): 1, (1, 3): 2, (1, 4): 2, (3, 4): 1}
        )
        assert 2 in pc_walk_reachable(g, c, 0)
        assert exists_pc_path(g, c, 0, 2) is None
        assert not naive_pc_path_exists(g, c.colors, 0, 2)


class TestProperlyConnected:
    def test_mono_complete_true(self):
        g = complete_graph(5)
        report = is_properly_connected(g, EdgeColoring.monochromatic(g))
        assert report.properly_connected
        assert report.checked_pairs == 10

    def test_mono_path_false(self):
        g = path_graph(3)
        report = is_properly_connected(g, EdgeColoring.monochromatic(g))
        assert not report.properly_connected
        assert report.violating_pair == (0, 2)

    def test_k23_two_color_pattern(self):
        g = complete_bipartite(2, 3)
        c = EdgeColoring.from_partial(g, {(0, 2): 1, (1, 2): 2})
        assert is_properly_connected(g, c).properly_connected

    def test_disconnected_immediate(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        report = is_properly_connected(g, EdgeColoring.monochromatic(g))
        assert not report.properly_connected
        assert report.violating_pair == (0, 2)
        assert report.checked_pairs == 0

    def test_witness_paths_on_request(self):
        g = complete_graph(4)
        c = EdgeColoring.monochromatic(g)
        report = is_properly_connected(g, c, collect_witness_paths=True)
        assert report.witness_paths is not None
        assert len(report.witness_paths) == 6
        assert report.witness_paths[(0, 1)] == (0, 1)

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert is_properly_connected(g, EdgeColoring.monochromatic(g)).properly_connected


class TestProperlyColored:
    def test_proper(self):
        g = path_graph(3)
        c = EdgeColoring.from_mapping(g, {(0, 1): 1, (1, 2): 2})
        assert is_properly_colored(g, c) == (True, None)

    def test_clash_reported(self):
        g = path_graph(3)
        c = EdgeColoring.from_mapping(g, {(0, 1): 1, (1, 2): 1})
        ok, pair = is_properly_colored(g, c)
        assert not ok
        assert pair == ((0, 1), (1, 2))

    def test_monochromatic_matching_is_proper(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert is_properly_colored(g, EdgeColoring.monochromatic(g))[0]
