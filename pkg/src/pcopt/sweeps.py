"""Named cross-validation sweeps.

Each sweep pits a constructive routine or a structural claim against an
independent route (exact search, naive enumeration, a closed-form count)
over exhaustive small cases plus seeded random instances, and reports how
many instances were checked and which failed. The registry backs both the
command line front end and the acceptance test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .coloring import (
    EdgeColoring,
    Recoloring,
    apply_recoloring,
    exists_pc_path,
    is_properly_colored,
    is_properly_connected,
    pc_walk_reachable,
)
from .construct import (
    _bipartite_assignments,
    bounds,
    find_good_edge,
    recolor_alpha2,
    recolor_complete_bipartite,
    recolor_good_edge,
    recolor_spanning_bipartite,
    recolor_tree,
)
from .families import (
    all_labeled_trees,
    clique_cycle_blowup,
    complete_bipartite,
    complete_multipartite,
    cycle_graph,
    enumerate_connected_graphs,
    path_graph,
    random_graph,
    random_tree,
    star_graph,
)
from .graphs import (
    Graph,
    alpha_at_most_2,
    canonical_edge,
    compute_stats,
    find_induced_p4,
    is_connected,
    maximum_matching,
    p4free_spanning_bipartition,
    spanning_trees,
)
from .search import feasible, pc_opt_exact, pc_opt_prime_exact


@dataclass
class SweepResult:
    name: str
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        return (
            f"{self.name}: {state} "
            f"({self.checked} checked, {len(self.failures)} failures)"
        )


# ---------------------------------------------------------------------------
# Expected closed-form values for the small-graph table.

SMALL_BIPARTITE_VALUES = {(2, 3): 3, (3, 3): 3, (3, 4): 4, (4, 4): 4}


def expected_path_value(n: int) -> int:
    return (n - 1) // 2 + 1


def expected_cycle_value(n: int) -> int:
    # The 3-cycle is complete, so it needs no recoloring at all; the general
    # formula applies from length 4 on.
    return 0 if n == 3 else (n - 1) // 2 + 1


def expected_star_value(m: int) -> int:
    return 2 * m - 2


def expected_big_bipartite_value(small: int) -> int:
    return 4 if small <= 3 else 5


def expected_big_bipartite_prime(small: int) -> int:
    return 2 if small <= 3 else 3


def tree_formula_value(t: Graph) -> int:
    return t.n - 2 - maximum_matching(t).size + max(t.degrees)


def tree_prime_value(t: Graph) -> int:
    return t.n - 1 - maximum_matching(t).size


# ---------------------------------------------------------------------------
# Random instance helpers.


def random_connected_noncomplete(
    rng: random.Random, n_lo: int, n_hi: int
) -> Graph:
    while True:
        n = rng.randint(n_lo, n_hi)
        g = random_graph(n, rng.uniform(0.3, 0.9), rng)
        if is_connected(g) and not g.is_complete():
            return g


def random_alpha2_graph(rng: random.Random, n_hi: int = 10) -> Graph:
    """A connected graph with independence number at most 2: either a dense
    rejection sample or a blown-up 5-cycle of cliques."""
    while True:
        if rng.random() < 0.5:
            sizes = [rng.randint(1, 2) for _ in range(5)]
            return clique_cycle_blowup(sizes)
        n = rng.randint(3, n_hi)
        g = random_graph(n, rng.uniform(0.7, 0.95), rng)
        if is_connected(g) and alpha_at_most_2(g):
            return g


def random_coloring(g: Graph, rng: random.Random, colors: int = 3) -> list[int]:
    return [rng.randrange(colors) for _ in range(g.m)]


def _random_cograph(n: int, rng: random.Random, join_root: bool = True) -> Graph:
    """Random cograph via a random operation tree; a join root keeps it
    connected."""
    if n == 1:
        return Graph(1, ())
    k = rng.randint(2, min(n, 3))
    cuts = sorted(rng.sample(range(1, n), k - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    parts = []
    offset = 0
    edges: list[tuple[int, int]] = []
    for s in sizes:
        sub = _random_cograph(s, rng, join_root=not join_root)
        for u, v in sub.edges:
            edges.append((u + offset, v + offset))
        parts.append(range(offset, offset + s))
        offset += s
    if join_root:
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                for a in parts[i]:
                    for b in parts[j]:
                        edges.append((a, b))
    return Graph(n, tuple(sorted(set(edges))))


def random_spanning_connected_subgraph(
    g: Graph, rng: random.Random
) -> Graph:
    """A random connected spanning subgraph: a random spanning tree plus a
    random subset of the remaining edges."""
    order = list(range(g.m))
    rng.shuffle(order)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    keep: set[int] = set()
    for i in order:
        u, v = g.edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            keep.add(i)
    for i in order:
        if i not in keep and rng.random() < 0.5:
            keep.add(i)
    return Graph(g.n, tuple(g.edges[i] for i in sorted(keep)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    return Graph(
        g.n, tuple(sorted(canonical_edge(perm[u], perm[v]) for u, v in g.edges))
    )


def matrix_tree_count(g: Graph) -> int:
    """Spanning tree count via the Laplacian minor determinant (exact
    rational elimination); independent of the enumerator."""
    n = g.n
    if n == 1:
        return 1
    size = n - 1
    a = [[Fraction(0)] * size for _ in range(size)]
    for v in range(1, n):
        a[v - 1][v - 1] = Fraction(g.degree(v))
    for u, v in g.edges:
        if u >= 1 and v >= 1:
            a[u - 1][v - 1] -= 1
            a[v - 1][u - 1] -= 1
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / inv
            if f:
                row, base = a[r], a[col]
                for c2 in range(col, size):
                    row[c2] -= f * base[c2]
    if det.denominator != 1:
        raise AssertionError("determinant of an integer matrix must be integral")
    return int(det)


def naive_pc_path_exists(g: Graph, colors: Sequence[int], u: int, v: int) -> bool:
    """Unpruned DFS over all simple paths; the reference for the filtered
    search."""
    adj = g.adjacency
    visited = [False] * g.n
    visited[u] = True

    def dfs(x: int, entry: int) -> bool:
        for y, ei in adj[x]:
            if visited[y]:
                continue
            c = colors[ei]
            if c == entry:
                continue
            if y == v:
                return True
            visited[y] = True
            if dfs(y, c):
                return True
            visited[y] = False
        return False

    return dfs(u, -1)


# ---------------------------------------------------------------------------
# The sweeps.


def sweep_reference_values(seed: int = 0) -> SweepResult:
    """Exact values for the named small families."""
    res = SweepResult("reference-values", 0)

    def check(label: str, g: Graph, expected: int) -> None:
        got = pc_opt_exact(g).value
        res.checked += 1
        if got != expected:
            res.failures.append(f"{label}: exact {got} != expected {expected}")

    for (m, n), value in SMALL_BIPARTITE_VALUES.items():
        check(f"K_{m},{n}", complete_bipartite(m, n), value)
    for m in range(2, 6):
        check(f"K_1,{m}", star_graph(m), expected_star_value(m))
    for n in range(3, 9):
        check(f"P_{n}", path_graph(n), expected_path_value(n))
        check(f"C_{n}", cycle_graph(n), expected_cycle_value(n))
    return res


def sweep_tree_formula(seed: int = 0) -> SweepResult:
    """Tree plans hit the closed-form total; the exact search agrees."""
    res = SweepResult("tree-formula", 0)

    def check(t: Graph, with_exact: bool) -> None:
        expected = tree_formula_value(t)
        plan = recolor_tree(t)
        res.checked += 1
        if plan.total_cost != expected:
            res.failures.append(
                f"plan {plan.total_cost} != formula {expected} on {t.edges}"
            )
            return
        if with_exact:
            value = pc_opt_exact(t).value
            if value != expected:
                res.failures.append(
                    f"exact {value} != formula {expected} on {t.edges}"
                )

    for n in range(2, 8):
        for t in all_labeled_trees(n):
            check(t, with_exact=True)
    rng = random.Random(seed)
    for _ in range(100):
        n = rng.randint(2, 9)
        t = random_tree(n, rng.randrange(1 << 30))
        check(t, with_exact=n <= 8)
    return res


def sweep_complete_bipartite(seed: int = 0) -> SweepResult:
    """Exact and prime values for the two-sided families of order 9, and
    agreement with the constructive recolorings."""
    res = SweepResult("complete-bipartite", 0)
    cases = ((7, 2), (6, 3), (5, 4))
    for m, n in cases:
        g = complete_bipartite(m, n)
        expected = expected_big_bipartite_value(n)
        got = pc_opt_exact(g).value
        res.checked += 1
        if got != expected:
            res.failures.append(f"K_{m},{n}: exact {got} != {expected}")
        r = recolor_complete_bipartite(m, n)
        res.checked += 1
        if r.total_cost != expected:
            res.failures.append(
                f"K_{m},{n}: construction {r.total_cost} != {expected}"
            )
        if not is_properly_connected(
            g, apply_recoloring(g, r)
        ).properly_connected:
            res.failures.append(f"K_{m},{n}: construction fails validation")
        prime_expected = expected_big_bipartite_prime(n)
        res.checked += 1
        if r.p != prime_expected:
            res.failures.append(
                f"K_{m},{n}: construction p {r.p} != {prime_expected}"
            )
    for m, n in ((7, 2), (5, 4)):
        got = pc_opt_prime_exact(complete_bipartite(m, n)).value
        res.checked += 1
        expected = expected_big_bipartite_prime(n)
        if got != expected:
            res.failures.append(f"K_{m},{n}: prime {got} != {expected}")
    return res


def sweep_good_edge_iff(seed: int = 0, max_n: int = 6) -> SweepResult:
    """A good edge exists iff one edge and one color suffice (all connected
    labeled graphs on 3..max_n vertices)."""
    res = SweepResult("good-edge-iff", 0)
    for n in range(3, max_n + 1):
        for g in enumerate_connected_graphs(n):
            has_good = find_good_edge(g) is not None
            one_one = feasible(g, 1, 1, "exact") is not None
            res.checked += 1
            if has_good != one_one:
                res.failures.append(
                    f"good-edge {has_good} vs (1,1)-feasible {one_one} "
                    f"on {g.edges}"
                )
    return res


def sweep_alpha2(seed: int = 0, max_n: int = 6, extra: int = 200) -> SweepResult:
    """Cost-3 recolorings for independence number at most 2, validated, plus
    the sharpness of the bound on the 5-cycle."""
    res = SweepResult("alpha2", 0)

    def check(g: Graph) -> None:
        r = recolor_alpha2(g)
        res.checked += 1
        if r.total_cost > 3:
            res.failures.append(f"total {r.total_cost} > 3 on {g.edges}")
            return
        if r.p > 2:
            res.failures.append(f"p {r.p} > 2 on {g.edges}")
            return
        if not is_properly_connected(
            g, apply_recoloring(g, r)
        ).properly_connected:
            res.failures.append(f"validation failed on {g.edges}")

    for n in range(1, max_n + 1):
        for g in enumerate_connected_graphs(n):
            if alpha_at_most_2(g):
                check(g)
    rng = random.Random(seed)
    for _ in range(extra):
        check(random_alpha2_graph(rng))
    sharp = pc_opt_exact(cycle_graph(5)).value
    res.checked += 1
    if sharp != 3:
        res.failures.append(f"C_5 exact {sharp} != 3")
    return res


def sweep_optimal_feasibility(seed: int = 0) -> SweepResult:
    """Witnesses at the optimal splits, and exhaustion below them."""
    res = SweepResult("optimal-feasibility", 0)
    k27 = complete_bipartite(7, 2)
    res.checked += 1
    if feasible(k27, 2, 2, "exact") is None:
        res.failures.append("K_7,2 has no (2,2) witness")
    k45 = complete_bipartite(5, 4)
    res.checked += 1
    if feasible(k45, 3, 2, "exact") is None:
        res.failures.append("K_5,4 has no (3,2) witness")
    for p in range(0, 5):
        for q in range(0, 5 - p):
            res.checked += 1
            w = feasible(k45, p, q, "exact")
            if w is not None:
                res.failures.append(f"K_5,4 unexpectedly ({p},{q})-feasible")
    return res


def sweep_bound_sandwich(seed: int = 0, count: int = 100) -> SweepResult:
    """Diameter lower bound <= exact value <= spanning-tree upper bound."""
    res = SweepResult("bound-sandwich", 0)
    rng = random.Random(seed)
    for _ in range(count):
        g = random_connected_noncomplete(rng, 4, 8)
        b = bounds(g)
        value = pc_opt_exact(g).value
        res.checked += 1
        if not b.lower <= value <= b.upper:
            res.failures.append(
                f"sandwich {b.lower} <= {value} <= {b.upper} fails on {g.edges}"
            )
    return res


def sweep_certificate_soundness(seed: int = 0, total: int = 1000) -> SweepResult:
    """Randomized constructive invocations all validate against the checker."""
    res = SweepResult("certificate-soundness", 0)
    rng = random.Random(seed)
    weights = (
        (3, "tree"),
        (2, "bipartite"),
        (2, "alpha2"),
        (1.5, "good-edge"),
        (1.5, "multipartite"),
    )
    denom = sum(w for w, _ in weights)
    quotas = {kind: int(total * w / denom) for w, kind in weights}
    quotas["tree"] += total - sum(quotas.values())

    def validate(g: Graph, r: Recoloring, label: str) -> None:
        res.checked += 1
        if not is_properly_connected(
            g, apply_recoloring(g, r)
        ).properly_connected:
            res.failures.append(f"{label} recoloring fails on {g.edges}")

    for _ in range(quotas["tree"]):
        t = random_tree(rng.randint(2, 12), rng.randrange(1 << 30))
        validate(t, recolor_tree(t).to_recoloring(), "tree")
    for _ in range(quotas["bipartite"]):
        n = rng.randint(2, 6)
        m = rng.randint(max(n, 9 - n), 8)
        validate(
            complete_bipartite(m, n),
            recolor_complete_bipartite(m, n),
            "complete-bipartite",
        )
    for _ in range(quotas["alpha2"]):
        g = random_alpha2_graph(rng)
        validate(g, recolor_alpha2(g), "alpha2")
    done = 0
    while done < quotas["good-edge"]:
        n = rng.randint(3, 9)
        g = random_graph(n, rng.uniform(0.5, 0.95), rng)
        if not is_connected(g) or find_good_edge(g) is None:
            continue
        validate(g, recolor_good_edge(g), "good-edge")
        done += 1
    for _ in range(quotas["multipartite"]):
        sizes = [rng.randint(1, 3) for _ in range(rng.randint(4, 6))]
        g = complete_multipartite(sizes)
        validate(g, recolor_spanning_bipartite(g), "spanning-bipartite")
    return res


def sweep_filter_soundness(seed: int = 0, count: int = 500) -> SweepResult:
    """Walk reachability is a superset of path reachability (never asserted
    the other way around)."""
    res = SweepResult("filter-soundness", 0)
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 8)
        g = random_graph(n, rng.uniform(0.2, 0.9), rng)
        coloring = EdgeColoring(g, tuple(random_coloring(g, rng)))
        walk_sets = [pc_walk_reachable(g, coloring, u) for u in range(n)]
        res.checked += 1
        for u in range(n):
            for v in range(u + 1, n):
                if exists_pc_path(g, coloring, u, v) is not None:
                    if v not in walk_sets[u] or u not in walk_sets[v]:
                        res.failures.append(
                            f"path without walk on {g.edges} pair ({u},{v})"
                        )
    return res


def sweep_monotonicity(seed: int = 0, count: int = 50) -> SweepResult:
    """A connected spanning subgraph never has a smaller optimal total."""
    res = SweepResult("monotonicity", 0)
    rng = random.Random(seed)
    for _ in range(count):
        g = random_connected_noncomplete(rng, 4, 7)
        h = random_spanning_connected_subgraph(g, rng)
        res.checked += 1
        if pc_opt_exact(g).value > pc_opt_exact(h).value:
            res.failures.append(f"monotonicity fails: {g.edges} vs {h.edges}")
    return res


def sweep_diameter_bound(seed: int = 0) -> SweepResult:
    """Exact value is at least diameter // 2 + 1 on non-complete graphs."""
    res = SweepResult("diameter-bound", 0)

    def check(g: Graph) -> None:
        stats = compute_stats(g)
        assert stats.diameter is not None
        value = pc_opt_exact(g).value
        res.checked += 1
        if value < stats.diameter // 2 + 1:
            res.failures.append(
                f"value {value} below diameter bound on {g.edges}"
            )

    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            if not g.is_complete():
                check(g)
    rng = random.Random(seed)
    for _ in range(40):
        check(random_connected_noncomplete(rng, 6, 7))
    return res


def sweep_relabel_invariance(seed: int = 0) -> SweepResult:
    """The exact value is invariant under vertex relabeling."""
    res = SweepResult("relabel-invariance", 0)
    rng = random.Random(seed)
    graphs = [random_connected_noncomplete(rng, 4, 7) for _ in range(20)]
    values = [pc_opt_exact(g).value for g in graphs]
    for i in range(50):
        g = graphs[i % len(graphs)]
        perm = list(range(g.n))
        rng.shuffle(perm)
        res.checked += 1
        if pc_opt_exact(relabel(g, perm)).value != values[i % len(graphs)]:
            res.failures.append(f"relabeling changed the value on {g.edges}")
    return res


def sweep_prime_vs_opt(seed: int = 0) -> SweepResult:
    """On non-complete graphs the edge-only optimum is below the total
    optimum (any optimal recoloring uses at least one color)."""
    res = SweepResult("prime-vs-opt", 0)

    def check(g: Graph) -> None:
        res.checked += 1
        if pc_opt_prime_exact(g).value + 1 > pc_opt_exact(g).value:
            res.failures.append(f"prime + 1 > opt on {g.edges}")

    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            if not g.is_complete():
                check(g)
    rng = random.Random(seed)
    for _ in range(30):
        check(random_connected_noncomplete(rng, 6, 7))
    return res


def sweep_mono_complete(seed: int = 0, max_n: int = 6) -> SweepResult:
    """A monochromatic graph is properly connected iff it is complete."""
    res = SweepResult("mono-complete", 0)
    for n in range(1, max_n + 1):
        for g in enumerate_connected_graphs(n):
            report = is_properly_connected(g, EdgeColoring.monochromatic(g))
            res.checked += 1
            if report.properly_connected != g.is_complete():
                res.failures.append(f"mismatch on {g.edges}")
    return res


def sweep_path_oracle(seed: int = 0) -> SweepResult:
    """The filtered path search agrees with unpruned enumeration."""
    res = SweepResult("path-oracle", 0)
    rng = random.Random(seed)

    def check(g: Graph) -> None:
        colors = random_coloring(g, rng)
        coloring = EdgeColoring(g, tuple(colors))
        res.checked += 1
        for u in range(g.n):
            for v in range(u + 1, g.n):
                fast = exists_pc_path(g, coloring, u, v) is not None
                slow = naive_pc_path_exists(g, colors, u, v)
                if fast != slow:
                    res.failures.append(
                        f"disagreement on {g.edges} colors {colors} "
                        f"pair ({u},{v})"
                    )

    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            check(g)
            check(g)
    for _ in range(60):
        n = rng.randint(6, 7)
        g = random_graph(n, rng.uniform(0.2, 0.8), rng)
        check(g)
    return res


def sweep_tree_equivalence(seed: int = 0) -> SweepResult:
    """On trees, properly connected and properly colored coincide."""
    res = SweepResult("tree-equivalence", 0)
    rng = random.Random(seed)

    def check(t: Graph) -> None:
        coloring = EdgeColoring(t, tuple(random_coloring(t, rng)))
        connected = is_properly_connected(t, coloring).properly_connected
        colored, _ = is_properly_colored(t, coloring)
        res.checked += 1
        if connected != colored:
            res.failures.append(
                f"equivalence fails on {t.edges} colors {coloring.colors}"
            )

    for n in range(2, 7):
        for t in all_labeled_trees(n):
            check(t)
            check(t)
    for _ in range(100):
        t = random_tree(rng.randint(7, 8), rng.randrange(1 << 30))
        check(t)
        check(t)
    return res


def sweep_p4free_bipartition(seed: int = 0) -> SweepResult:
    """Connected non-complete graphs without induced 4-vertex paths always
    certify a fully joined minimum cutset."""
    res = SweepResult("p4free-bipartition", 0)

    def check(g: Graph) -> None:
        cut = p4free_spanning_bipartition(g)
        res.checked += 1
        if not cut.complete_bipartite_certified or len(cut.sides) < 2:
            res.failures.append(f"no certified structure on {g.edges}")

    for n in range(2, 7):
        for g in enumerate_connected_graphs(n):
            if not g.is_complete() and find_induced_p4(g) is None:
                check(g)
    rng = random.Random(seed)
    done = 0
    while done < 20:
        g = _random_cograph(7, rng)
        if g.is_complete():
            continue
        check(g)
        done += 1
    return res


def sweep_spanning_count(seed: int = 0, count: int = 50) -> SweepResult:
    """Spanning tree enumeration matches the determinant count."""
    res = SweepResult("spanning-count", 0)
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 7)
        g = random_graph(n, rng.uniform(0.3, 0.9), rng)
        if not is_connected(g):
            continue
        enumerated = sum(1 for _ in spanning_trees(g))
        res.checked += 1
        if enumerated != matrix_tree_count(g):
            res.failures.append(
                f"count {enumerated} != determinant "
                f"{matrix_tree_count(g)} on {g.edges}"
            )
    return res


def sweep_cograph_two_connected(seed: int = 0, count: int = 50) -> SweepResult:
    """2-connected cographs of order >= 9: the cutset bipartition combined
    with the two-sided pattern yields a validated total of at most 5."""
    res = SweepResult("cograph-two-connected", 0)
    rng = random.Random(seed)
    done = 0
    while done < count:
        n = rng.randint(9, 10)
        g = _random_cograph(n, rng)
        if g.is_complete() or not is_connected(g):
            continue
        if compute_stats(g).vertex_connectivity < 2:
            continue
        cut = p4free_spanning_bipartition(g)
        rest = tuple(v for side in cut.sides for v in side)
        sides = sorted((cut.cutset, tuple(sorted(rest))), key=len, reverse=True)
        big, small = sides[0], sides[1]
        r = Recoloring(_bipartite_assignments(big, small))
        res.checked += 1
        done += 1
        if r.total_cost > 5:
            res.failures.append(f"cost {r.total_cost} > 5 on {g.edges}")
            continue
        if not is_properly_connected(
            g, apply_recoloring(g, r)
        ).properly_connected:
            res.failures.append(f"composed recoloring fails on {g.edges}")
    return res


SWEEPS: dict[str, Callable[..., SweepResult]] = {
    "reference-values": sweep_reference_values,
    "tree-formula": sweep_tree_formula,
    "complete-bipartite": sweep_complete_bipartite,
    "good-edge-iff": sweep_good_edge_iff,
    "alpha2": sweep_alpha2,
    "optimal-feasibility": sweep_optimal_feasibility,
    "bound-sandwich": sweep_bound_sandwich,
    "certificate-soundness": sweep_certificate_soundness,
    "filter-soundness": sweep_filter_soundness,
    "monotonicity": sweep_monotonicity,
    "diameter-bound": sweep_diameter_bound,
    "relabel-invariance": sweep_relabel_invariance,
    "prime-vs-opt": sweep_prime_vs_opt,
    "mono-complete": sweep_mono_complete,
    "path-oracle": sweep_path_oracle,
    "tree-equivalence": sweep_tree_equivalence,
    "p4free-bipartition": sweep_p4free_bipartition,
    "spanning-count": sweep_spanning_count,
    "cograph-two-connected": sweep_cograph_two_connected,
}


def run_sweep(name: str, seed: int = 0) -> SweepResult:
    if name not in SWEEPS:
        raise KeyError(name)
    return SWEEPS[name](seed=seed)
