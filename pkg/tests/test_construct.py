from __future__ import annotations

import random

import pytest

from pcopt.coloring import apply_recoloring, is_properly_colored, is_properly_connected
from pcopt.construct import (
    bounds,
    construct_certificate,
    find_good_edge,
    recolor_alpha2,
    recolor_complete_bipartite,
    recolor_complete_bipartite_graph,
    recolor_good_edge,
    recolor_spanning_bipartite,
    recolor_tree,
    theorem_certificate,
)
from pcopt.errors import NotApplicableError, PreconditionError
from pcopt.families import (
    clique_cycle_blowup,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    path_graph,
    random_tree,
    star_graph,
)
from pcopt.graphs import build_graph
from pcopt.search import pc_opt_exact, verify_certificate
from pcopt.sweeps import relabel, tree_formula_value


def k5_minus_edge():
    return build_graph(
        5, [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 1)]
    )


class TestGoodEdge:
    def test_complete_has_trivial_witness(self):
        w = find_good_edge(complete_graph(4))
        assert w is not None
        assert w.edge == (0, 1) and w.part_a1 == () and w.part_a2 == ()

    def test_p3_other_leaf_alone(self):
        w = find_good_edge(path_graph(3))
        assert w is not None
        assert w.edge == (0, 1)
        assert (w.part_a1, w.part_a2) == ((), (2,))

    def test_k23_has_none(self):
        assert find_good_edge(complete_bipartite(2, 3)) is None

    def test_order_below_three_rejected(self):
        with pytest.raises(PreconditionError):
            find_good_edge(path_graph(2))

    def test_recolor_p3(self):
        r = recolor_good_edge(path_graph(3))
        assert r.total_cost == 2
        assert pc_opt_exact(path_graph(3)).value == 2

    def test_recolor_c4(self):
        r = recolor_good_edge(cycle_graph(4))
        assert r.total_cost == 2

    def test_not_applicable(self):
        with pytest.raises(NotApplicableError):
            recolor_good_edge(complete_bipartite(2, 3))


class TestSpanningBipartite:
    def test_four_parts(self):
        g = complete_multipartite([2, 2, 2, 2])
        r = recolor_spanning_bipartite(g)
        assert r.total_cost == 3 and (r.p, r.q) == (2, 1)

    def test_k33_not_applicable(self):
        with pytest.raises(NotApplicableError):
            recolor_spanning_bipartite(complete_bipartite(3, 3))

    def test_three_parts_fall_back_to_exact(self):
        g = complete_multipartite([3, 3, 3])
        with pytest.raises(NotApplicableError):
            recolor_spanning_bipartite(g)
        assert pc_opt_exact(g).value == 3

    def test_caller_supplied_parts(self):
        g = complete_graph(4)
        r = recolor_spanning_bipartite(g, parts=((0, 1), (2, 3)))
        assert r.total_cost == 3
        assert r.edges() == ((0, 1), (2, 3))

    def test_bad_parts_rejected(self):
        g = complete_bipartite(2, 2)
        with pytest.raises(NotApplicableError):
            # partition is fully joined but sides have no internal edges
            recolor_spanning_bipartite(g, parts=((0, 1), (2, 3)))
        with pytest.raises(PreconditionError):
            recolor_spanning_bipartite(g, parts=((0,), (1, 2)))


class TestAlpha2:
    def test_c5_cost_and_sharpness(self):
        r = recolor_alpha2(cycle_graph(5))
        assert r.total_cost == 3
        assert pc_opt_exact(cycle_graph(5)).value == 3

    def test_blowup(self):
        g = clique_cycle_blowup([2, 2, 2, 2, 2])
        r = recolor_alpha2(g)
        assert r.total_cost <= 3
        assert pc_opt_exact(g).value == 3

    def test_complete_empty(self):
        assert recolor_alpha2(complete_graph(5)).total_cost == 0

    def test_cograph_case(self):
        r = recolor_alpha2(k5_minus_edge())
        assert r.total_cost <= 3
        assert is_properly_connected(
            k5_minus_edge(), apply_recoloring(k5_minus_edge(), r)
        ).properly_connected

    def test_prime_edge_count(self):
        for g in (cycle_graph(5), clique_cycle_blowup([1, 2, 1, 2, 1])):
            assert recolor_alpha2(g, "prime").p <= 2

    def test_large_independent_set_rejected(self):
        with pytest.raises(PreconditionError):
            recolor_alpha2(star_graph(3))

    def test_bad_variant(self):
        with pytest.raises(PreconditionError):
            recolor_alpha2(cycle_graph(5), "fast")


class TestCompleteBipartite:
    def test_small_side_two(self):
        r = recolor_complete_bipartite(7, 2)
        assert r.total_cost == 4 and (r.p, r.q) == (2, 2)

    def test_small_side_four(self):
        r = recolor_complete_bipartite(5, 4)
        assert r.total_cost == 5 and (r.p, r.q) == (3, 2)

    def test_below_order_nine(self):
        with pytest.raises(NotApplicableError):
            recolor_complete_bipartite(4, 4)
        assert pc_opt_exact(complete_bipartite(4, 4)).value == 4

    def test_single_vertex_side(self):
        with pytest.raises(NotApplicableError):
            recolor_complete_bipartite(8, 1)

    def test_sides_out_of_order(self):
        with pytest.raises(PreconditionError):
            recolor_complete_bipartite(2, 7)

    def test_relabelled_graph(self):
        g = complete_bipartite(6, 3)
        perm = [4, 7, 0, 2, 8, 1, 5, 6, 3]
        h = relabel(g, perm)
        r = recolor_complete_bipartite_graph(h)
        assert r.total_cost == 4
        assert is_properly_connected(h, apply_recoloring(h, r)).properly_connected

    def test_not_bipartite(self):
        with pytest.raises(NotApplicableError):
            recolor_complete_bipartite_graph(cycle_graph(9))


class TestRecolorTree:
    def test_star(self):
        plan = recolor_tree(star_graph(4))
        assert (plan.cost_p, plan.cost_q, plan.total_cost) == (3, 3, 6)

    def test_p5(self):
        plan = recolor_tree(path_graph(5))
        assert (plan.cost_p, plan.cost_q, plan.total_cost) == (2, 1, 3)

    def test_two_vertices_empty_plan(self):
        plan = recolor_tree(path_graph(2))
        assert plan.total_cost == 0 and plan.forest_colors == ()

    def test_p6_prime(self):
        assert recolor_tree(path_graph(6), "prime").cost_p == 2

    def test_non_tree_rejected(self):
        with pytest.raises(PreconditionError):
            recolor_tree(cycle_graph(4))
        with pytest.raises(PreconditionError):
            recolor_tree(build_graph(1, []))

    def test_plan_invariants_on_random_trees(self):
        rng = random.Random(31)
        for _ in range(60):
            t = random_tree(rng.randint(2, 12), rng.randrange(1 << 30))
            plan = recolor_tree(t)
            assert plan.total_cost == tree_formula_value(t)
            # exchange guarantee: unmatched vertices avoid the maximum degree
            delta = max(t.degrees)
            unmatched = set(range(t.n)) - plan.matching.covered
            assert all(t.degree(v) < delta for v in unmatched)
            assert plan.cost_q <= max(delta - 1, 0)
            coloring = apply_recoloring(t, plan.to_recoloring())
            assert is_properly_colored(t, coloring)[0]
            assert is_properly_connected(t, coloring).properly_connected


class TestBounds:
    def test_c8(self):
        b = bounds(cycle_graph(8))
        assert (b.lower, b.upper) == (3, 4)
        assert 3 <= pc_opt_exact(cycle_graph(8)).value <= 4

    def test_star(self):
        b = bounds(star_graph(5))
        assert (b.lower, b.upper) == (2, 8)

    def test_p7_tight(self):
        b = bounds(path_graph(7))
        assert (b.lower, b.upper) == (4, 4)

    def test_complete_flag(self):
        b = bounds(complete_graph(5))
        assert (b.lower, b.upper, b.complete) == (0, 0, True)

    def test_truncated_budget(self):
        b = bounds(complete_bipartite(3, 3), tree_budget=5)
        assert not b.exhaustive
        assert b.lower <= b.upper


class TestCertificates:
    def test_auto_complete(self):
        cert = construct_certificate(complete_graph(4))
        assert cert.value == 0 and cert.evidence == "theorem:complete"

    def test_auto_tree(self):
        cert = construct_certificate(star_graph(4), cls="tree")
        assert cert.value == 6 and cert.evidence == "theorem:tree"
        assert verify_certificate(star_graph(4), cert) == (True, "ok")

    def test_auto_dispatch_prefers_cheap_exact_methods(self):
        assert construct_certificate(cycle_graph(4)).evidence == "theorem:good-edge"
        assert construct_certificate(cycle_graph(5)).evidence == "theorem:alpha2"
        assert construct_certificate(cycle_graph(6)).evidence == "exhaustive"

    def test_auto_values_match_exact(self):
        for g in (
            cycle_graph(5),
            cycle_graph(6),
            complete_bipartite(7, 2),
            complete_multipartite([2, 2, 2, 2]),
            k5_minus_edge(),
        ):
            cert = construct_certificate(g)
            assert cert.value == pc_opt_exact(g).value
            assert verify_certificate(g, cert) == (True, "ok")

    def test_auto_multipartite_uses_spanning(self):
        # Parts of size 3 rule out good edges and push the independence
        # number to 3, so only the spanning-bipartite branch applies.
        g = complete_multipartite([3, 3, 3, 3])
        cert = construct_certificate(g)
        assert cert.evidence == "theorem:spanning-bipartite"
        assert cert.lower_bound_proof == "formula"
        assert cert.value == 3 == pc_opt_exact(g).value

    def test_auto_small_multipartite_prefers_good_edge(self):
        # With parts of size 2 the neighborhood split is a pair of single
        # vertices, so one recolored edge already suffices.
        g = complete_multipartite([2, 2, 2, 2])
        cert = construct_certificate(g)
        assert cert.evidence == "theorem:good-edge"
        assert cert.value == 2 == pc_opt_exact(g).value

    def test_forced_class_can_be_upper_bound_only(self):
        # An induced 4-vertex path forces cost 3, but the graph has a good
        # edge, so optimality is not certified.
        cert = construct_certificate(path_graph(4), cls="alpha2")
        assert cert.value == 3
        assert cert.lower_bound_proof is None
        assert pc_opt_exact(path_graph(4)).value == 2

    def test_forced_bipartite_delegates_below_range(self):
        cert = construct_certificate(
            complete_bipartite(2, 2), cls="complete-bipartite"
        )
        assert cert.evidence == "exhaustive" and cert.value == 2

    def test_theorem_certificate_none_without_structure(self):
        assert theorem_certificate(cycle_graph(6)) is None

    def test_prime_certificates(self):
        cert = construct_certificate(path_graph(6), cls="tree", prime=True)
        assert cert.value == 2 and cert.metric == "prime"
        cert = construct_certificate(complete_bipartite(5, 4), prime=True)
        assert cert.value == 3 and cert.metric == "prime"

    def test_unknown_class(self):
        with pytest.raises(PreconditionError):
            construct_certificate(path_graph(3), cls="magic")

    def test_auto_exactness_on_random_mix(self):
        # Every auto certificate validates; whenever it carries a lower-bound
        # tag its value must equal the independent exhaustive optimum.
        from pcopt.families import complete_multipartite as multi
        from pcopt.families import random_graph
        from pcopt.graphs import is_connected
        from pcopt.search import pc_opt_prime_exact
        from pcopt.sweeps import random_alpha2_graph

        rng = random.Random(77)
        instances = [random_tree(rng.randint(2, 8), rng.randrange(1 << 30)) for _ in range(8)]
        instances += [
            complete_bipartite(rng.randint(2, 6), rng.randint(2, 4)) for _ in range(6)
        ]
        instances += [
            multi([rng.randint(1, 3) for _ in range(rng.randint(2, 4))])
            for _ in range(6)
        ]
        instances += [random_alpha2_graph(rng, n_hi=8) for _ in range(6)]
        while len(instances) < 34:
            g = random_graph(rng.randint(3, 7), rng.uniform(0.3, 0.9), rng)
            if is_connected(g):
                instances.append(g)
        for g in instances:
            if g.n > 9:
                continue
            for prime in (False, True):
                cert = construct_certificate(g, prime=prime)
                assert verify_certificate(g, cert) == (True, "ok")
                exact = (pc_opt_prime_exact if prime else pc_opt_exact)(g)
                assert cert.value >= exact.value
                if cert.lower_bound_proof is not None:
                    assert cert.value == exact.value
