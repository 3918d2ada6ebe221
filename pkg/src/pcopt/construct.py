"""Polynomial-time constructive recolorings with built-in validation.

Every routine here returns a recoloring that has already been re-checked
against the ground-truth checker; a construction whose output fails
validation, or whose cost disagrees with its guaranteed cost, raises
InternalConsistencyError instead of returning silently wrong data.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .coloring import (
    Recoloring,
    apply_recoloring,
    is_properly_colored,
    is_properly_connected,
)
from .errors import (
    BudgetError,
    InternalConsistencyError,
    NotApplicableError,
    PreconditionError,
)
from .families import complete_bipartite
from .graphs import (
    CutStructure,
    Edge,
    Graph,
    Matching,
    alpha_at_most_2,
    bfs_distances,
    canonical_edge,
    find_induced_p4,
    is_connected,
    is_tree,
    maximum_matching,
    min_vertex_cut,
    p4free_spanning_bipartition,
    spanning_trees,
)
from .search import Certificate, SearchBudget, pc_opt_exact, pc_opt_prime_exact

VARIANTS = ("opt", "prime")

EVIDENCE_COMPLETE = "theorem:complete"
EVIDENCE_TREE = "theorem:tree"
EVIDENCE_COMPLETE_BIPARTITE = "theorem:complete-bipartite"
EVIDENCE_GOOD_EDGE = "theorem:good-edge"
EVIDENCE_ALPHA2 = "theorem:alpha2"
EVIDENCE_SPANNING_BIPARTITE = "theorem:spanning-bipartite"


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise PreconditionError(f"variant must be one of {VARIANTS}")


def _validated(g: Graph, r: Recoloring, origin: str) -> Recoloring:
    report = is_properly_connected(g, apply_recoloring(g, r))
    if not report.properly_connected:
        raise InternalConsistencyError(
            f"{origin} produced a recoloring that fails at pair "
            f"{report.violating_pair}"
        )
    return r


def _passes(g: Graph, r: Recoloring) -> bool:
    return is_properly_connected(g, apply_recoloring(g, r)).properly_connected


@dataclass(frozen=True)
class GoodEdgeWitness:
    """An edge whose non-common outside vertices split into one clique inside
    each endpoint's neighborhood; recoloring it alone properly connects the
    graph."""

    edge: Edge
    part_a1: tuple[int, ...]
    part_a2: tuple[int, ...]


def _is_clique(g: Graph, vertices: list[int]) -> bool:
    ns = g.neighbor_sets
    return all(b in ns[a] for a, b in combinations(vertices, 2))


def find_good_edge(g: Graph) -> GoodEdgeWitness | None:
    """First good edge in canonical edge order, or None.

    For an edge (x1, x2), every vertex outside the common neighborhood and
    other than the endpoints is adjacent to exactly one endpoint or to
    neither; the split is therefore forced, and the edge is good iff nobody
    is stranded and both forced parts induce cliques.
    """
    if g.n < 3:
        raise PreconditionError("good edges are defined for order >= 3")
    if not is_connected(g):
        raise PreconditionError("good edges require a connected graph")
    ns = g.neighbor_sets
    for x1, x2 in g.edges:
        common = ns[x1] & ns[x2]
        part1: list[int] = []
        part2: list[int] = []
        stranded = False
        for r in range(g.n):
            if r == x1 or r == x2 or r in common:
                continue
            if r in ns[x1]:
                part1.append(r)
            elif r in ns[x2]:
                part2.append(r)
            else:
                stranded = True
                break
        if stranded:
            continue
        if _is_clique(g, part1) and _is_clique(g, part2):
            return GoodEdgeWitness((x1, x2), tuple(part1), tuple(part2))
    return None


def recolor_good_edge(g: Graph) -> Recoloring:
    """Give one good edge a new color: total cost 2, which is optimal for
    every non-complete graph that admits a good edge."""
    witness = find_good_edge(g)
    if witness is None:
        raise NotApplicableError("the graph has no good edge")
    return _validated(g, Recoloring(((witness.edge, 1),)), "good-edge recoloring")


def _complete_multipartite_parts(g: Graph) -> tuple[tuple[int, ...], ...] | None:
    """Detect a complete multipartite structure; parts ordered by least vertex.

    Vertices sharing a neighborhood are never adjacent, so grouping by
    neighborhood yields independent classes; the structure is complete
    multipartite iff the edge count matches all cross pairs being present.
    """
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.neighbor_sets[v], []).append(v)
    parts = sorted((tuple(sorted(vs)) for vs in groups.values()))
    cross = 0
    sizes = [len(p) for p in parts]
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            cross += sizes[i] * sizes[j]
    if g.m != cross:
        return None
    return tuple(parts)


def _least_internal_edge(g: Graph, side: tuple[int, ...]) -> Edge | None:
    members = set(side)
    for u, v in g.edges:
        if u in members and v in members:
            return (u, v)
    return None


def recolor_spanning_bipartite(
    g: Graph,
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None = None,
) -> Recoloring:
    """Recolor one internal edge on each side of a spanning complete
    bipartite subgraph with the same new color: total cost 3.

    The bipartition may be supplied by the caller; otherwise the routine
    groups the parts of a complete multipartite graph (first two parts
    against the rest, which needs at least four parts to leave an edge on
    both sides), and failing that tries a minimum cutset that is fully
    joined to the remainder. Raises NotApplicableError when no side pair
    with internal edges exists.
    """
    if not is_connected(g):
        raise PreconditionError("input must be connected")
    if parts is not None:
        side1 = tuple(sorted(set(parts[0])))
        side2 = tuple(sorted(set(parts[1])))
        if not side1 or not side2:
            raise PreconditionError("both sides must be non-empty")
        if set(side1) & set(side2) or len(side1) + len(side2) != g.n:
            raise PreconditionError("sides must partition the vertex set")
        if any(not 0 <= v < g.n for v in side1 + side2):
            raise PreconditionError("side vertex out of range")
        ns = g.neighbor_sets
        if not all(b in ns[a] for a in side1 for b in side2):
            raise NotApplicableError("supplied bipartition is not fully joined")
    else:
        multipartite = _complete_multipartite_parts(g)
        if multipartite is not None:
            if len(multipartite) <= 3:
                # With three or fewer parts, any grouping leaves one side a
                # single independent part, hence without an internal edge.
                raise NotApplicableError(
                    "too few parts to put an edge inside both sides"
                )
            side1 = tuple(sorted(multipartite[0] + multipartite[1]))
            side2 = tuple(
                sorted(v for part in multipartite[2:] for v in part)
            )
        else:
            if g.is_complete():
                raise NotApplicableError(
                    "complete graphs need no recoloring"
                )
            cut = min_vertex_cut(g)
            rest = tuple(v for v in range(g.n) if v not in set(cut))
            ns = g.neighbor_sets
            if not all(b in ns[a] for a in cut for b in rest):
                raise NotApplicableError(
                    "no spanning complete bipartite subgraph found"
                )
            side1, side2 = cut, rest
    e1 = _least_internal_edge(g, side1)
    e2 = _least_internal_edge(g, side2)
    if e1 is None or e2 is None:
        raise NotApplicableError("a partite side has no internal edge")
    r = _validated(
        g, Recoloring(((e1, 1), (e2, 1))), "spanning-bipartite recoloring"
    )
    if r.total_cost != 3:
        raise InternalConsistencyError("spanning-bipartite cost must be 3")
    return r


def _two_cross_edges(g: Graph, cut: CutStructure) -> Recoloring | None:
    """Two disjoint cutset-to-remainder edges sharing one new color."""
    if len(cut.cutset) < 2 or len(cut.sides) != 2:
        return None
    s1, s2 = cut.cutset[0], cut.cutset[1]
    c1 = cut.sides[0][0]
    c2 = cut.sides[1][0]
    if not (g.has_edge(s1, c1) and g.has_edge(s2, c2)):
        return None
    return Recoloring(
        ((canonical_edge(s1, c1), 1), (canonical_edge(s2, c2), 1))
    )


def recolor_alpha2(g: Graph, variant: str = "opt") -> Recoloring:
    """Recoloring of total cost at most 3 (at most 2 edges) for connected
    graphs with independence number at most 2.

    If the graph has an induced 4-vertex path, its two end edges get one
    shared new color. Otherwise the graph is a cograph and a fully joined
    minimum cutset exists; the fallback chain is: good edge, then internal
    edges on both sides of the cutset bipartition, then two disjoint
    cutset-to-remainder edges, then exact search. Every branch is validated,
    and a final cost above 3 raises InternalConsistencyError.
    """
    _check_variant(variant)
    if not is_connected(g):
        raise PreconditionError("input must be connected")
    if not alpha_at_most_2(g):
        raise PreconditionError("three pairwise non-adjacent vertices exist")
    if g.is_complete():
        return Recoloring(())
    witness = find_induced_p4(g)
    if witness is not None:
        p1, p2, p3, p4 = witness.vertices
        return _validated(
            g,
            Recoloring(
                ((canonical_edge(p1, p2), 1), (canonical_edge(p3, p4), 1))
            ),
            "induced-path recoloring",
        )
    try:
        return recolor_good_edge(g)
    except NotApplicableError:
        pass
    cut = p4free_spanning_bipartition(g)
    rest = tuple(v for side in cut.sides for v in side)
    try:
        return recolor_spanning_bipartite(g, parts=(cut.cutset, rest))
    except NotApplicableError:
        pass
    crossing = _two_cross_edges(g, cut)
    if crossing is not None and _passes(g, crossing):
        return crossing
    cert = pc_opt_exact(g)
    if cert.value > 3 or cert.witness is None:
        raise InternalConsistencyError(
            "a graph with independence number <= 2 exceeded total cost 3"
        )
    return cert.witness


def _complete_bipartite_sides(
    g: Graph,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """(larger, smaller) sides when g is complete bipartite, else None."""
    if g.n < 2 or not is_connected(g):
        return None
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    while queue:
        x = queue.pop()
        for y, _ in g.adjacency[x]:
            if color[y] < 0:
                color[y] = 1 - color[x]
                queue.append(y)
            elif color[y] == color[x]:
                return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    if not side1 or g.m != len(side0) * len(side1):
        return None
    if len(side0) >= len(side1):
        return side0, side1
    return side1, side0


def _bipartite_assignments(
    big: tuple[int, ...], small: tuple[int, ...]
) -> tuple[tuple[Edge, int], ...]:
    a, b = small[0], small[1]
    x, y = big[0], big[1]
    if len(small) <= 3:
        return ((canonical_edge(a, x), 1), (canonical_edge(b, x), 2))
    return (
        (canonical_edge(a, x), 1),
        (canonical_edge(b, y), 1),
        (canonical_edge(b, x), 2),
    )


def recolor_complete_bipartite_graph(
    g: Graph, variant: str = "opt"
) -> Recoloring:
    """Optimal recoloring of a complete bipartite graph of order >= 9.

    With a smaller side of 2 or 3 vertices, two edges from distinct
    small-side vertices to one large-side vertex get distinct new colors
    (total 4). With both sides >= 4, three edges spanning two small-side
    and two large-side vertices get two new colors (total 5). Participating
    vertices are the least-indexed of each side.
    """
    _check_variant(variant)
    sides = _complete_bipartite_sides(g)
    if sides is None:
        raise NotApplicableError("input is not a complete bipartite graph")
    big, small = sides
    if len(small) < 2:
        raise NotApplicableError(
            "one side is a single vertex: treat the graph as a star/tree"
        )
    if g.n < 9:
        raise NotApplicableError(
            f"order {g.n} is below 9: use the exact search instead"
        )
    r = _validated(
        g,
        Recoloring(_bipartite_assignments(big, small)),
        "complete-bipartite recoloring",
    )
    promised = 4 if len(small) <= 3 else 5
    if r.total_cost != promised:
        raise InternalConsistencyError(
            f"complete-bipartite cost {r.total_cost} != promised {promised}"
        )
    return r


def recolor_complete_bipartite(
    m: int, n: int, variant: str = "opt"
) -> Recoloring:
    """Same construction on the canonical graph with sides ``0..m-1`` and
    ``m..m+n-1``; requires m >= n >= 2 and m + n >= 9."""
    if n < 1 or m < n:
        raise PreconditionError("sides must satisfy m >= n >= 1")
    return recolor_complete_bipartite_graph(complete_bipartite(m, n), variant)


@dataclass(frozen=True)
class TreePlan:
    """An optimal tree recoloring: a maximum matching kept at the base color
    plus a proper edge coloring of the remaining forest with new colors.

    After the exchange step no unmatched vertex has maximum degree, so the
    forest's maximum degree is strictly below the tree's and the palette
    ``1..max_degree-1`` always suffices.
    """

    matching: Matching
    forest_colors: tuple[tuple[Edge, int], ...]
    cost_p: int
    cost_q: int

    @property
    def total_cost(self) -> int:
        return self.cost_p + self.cost_q

    def to_recoloring(self) -> Recoloring:
        return Recoloring(self.forest_colors)


def _shift_matching_from(g: Graph, mate: list[int], start: int) -> None:
    """Walk the maximal alternating path from an unmatched vertex and shift
    the matching one step along it, freeing a leaf endpoint instead.

    Steps alternate: a non-matching edge to the least new neighbor, then the
    forced matching edge. An even-length stop would be an augmenting path,
    impossible beside a maximum matching."""
    path = [start]
    prev, cur = -1, start
    while True:
        nxt = -1
        for y, _ in g.adjacency[cur]:
            if y != prev and mate[cur] != y:
                nxt = y
                break
        if nxt < 0:
            break
        path.append(nxt)
        prev, cur = cur, nxt
        partner = mate[cur]
        if partner < 0:
            break
        path.append(partner)
        prev, cur = cur, partner
    if len(path) % 2 == 0:
        raise InternalConsistencyError(
            "augmenting path found beside a maximum matching"
        )
    for v in path:
        mate[v] = -1
    for i in range(0, len(path) - 1, 2):
        mate[path[i]] = path[i + 1]
        mate[path[i + 1]] = path[i]


def _forest_coloring(
    g: Graph, skip: set[Edge], palette: int
) -> dict[Edge, int]:
    """Proper edge coloring of the non-skipped forest with colors
    ``1..palette``; components rooted at their least vertex, child edges
    colored with the least color unused at either endpoint so far."""
    colors: dict[Edge, int] = {}
    entry_color = [0] * g.n  # color of the edge toward the parent; 0 at roots
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            used = {entry_color[x]}
            for y, ei in g.adjacency[x]:
                if seen[y] or g.edges[ei] in skip:
                    continue
                choice = next(
                    (c for c in range(1, palette + 1) if c not in used), None
                )
                if choice is None:
                    raise InternalConsistencyError(
                        "forest needs more colors than the guaranteed palette"
                    )
                colors[g.edges[ei]] = choice
                used.add(choice)
                entry_color[y] = choice
                seen[y] = True
                queue.append(y)
    return colors


def recolor_tree(t: Graph, variant: str = "opt") -> TreePlan:
    """Optimal recoloring plan for a tree on at least 2 vertices.

    Builds a maximum matching, shifts it until no unmatched vertex has
    maximum degree, keeps matching edges at the base color and properly
    colors the remaining forest. Validated to be properly colored (for a
    tree that is equivalent to properly connected) and to hit the optimal
    total exactly.
    """
    _check_variant(variant)
    if t.n < 2 or not is_tree(t):
        raise PreconditionError("input must be a tree on at least 2 vertices")
    matching = maximum_matching(t)
    mate = [-1] * t.n
    for u, v in matching.pairs:
        mate[u], mate[v] = v, u
    delta = max(t.degrees)

    for _ in range(t.n + 1):
        bad = next(
            (
                v
                for v in range(t.n)
                if mate[v] < 0 and t.degree(v) == delta
            ),
            -1,
        )
        if bad < 0:
            break
        _shift_matching_from(t, mate, bad)
    else:
        raise InternalConsistencyError("matching exchange failed to settle")

    pairs = tuple(
        sorted(canonical_edge(v, mate[v]) for v in range(t.n) if mate[v] > v)
    )
    shifted = Matching(pairs)
    shifted.validate(t)
    if shifted.size != matching.size:
        raise InternalConsistencyError("exchange changed the matching size")

    forest_colors = _forest_coloring(t, set(pairs), max(delta - 1, 0))
    plan = TreePlan(
        matching=shifted,
        forest_colors=tuple(sorted(forest_colors.items())),
        cost_p=t.n - 1 - shifted.size,
        cost_q=len(set(forest_colors.values())),
    )
    ok, clash = is_properly_colored(t, apply_recoloring(t, plan.to_recoloring()))
    if not ok:
        raise InternalConsistencyError(f"tree plan has clashing edges {clash}")
    promised = t.n - 2 - shifted.size + delta
    if plan.total_cost != promised:
        raise InternalConsistencyError(
            f"tree plan cost {plan.total_cost} != promised {promised}"
        )
    return plan


@dataclass(frozen=True)
class BoundsResult:
    """Sandwich for the optimal total: ``lower`` from the diameter, ``upper``
    from the best enumerated spanning tree. ``exhaustive`` is False when the
    tree budget truncated the enumeration (the upper bound still holds)."""

    lower: int
    upper: int
    exhaustive: bool
    complete: bool = False


def bounds(g: Graph, tree_budget: int = 100_000) -> BoundsResult:
    """Diameter lower bound and spanning-tree upper bound on the optimal total.

    The upper bound minimizes ``n - 2 - matching + max_degree`` over
    enumerated spanning trees; enumeration stops early once the lower bound
    is met, since no tree can beat it.
    """
    if not is_connected(g):
        raise PreconditionError("bounds require a connected graph")
    if g.is_complete():
        return BoundsResult(0, 0, True, complete=True)
    diameter = 0
    for v in range(g.n):
        for d in bfs_distances(g, v):
            assert d is not None
            if d > diameter:
                diameter = d
    lower = diameter // 2 + 1
    best: int | None = None
    exhaustive = True
    try:
        for tree in spanning_trees(g, cap=tree_budget):
            cost = tree.n - 2 - maximum_matching(tree).size + max(tree.degrees)
            if best is None or cost < best:
                best = cost
                if best == lower:
                    break  # provably optimal: no tree can go below the bound
    except BudgetError:
        exhaustive = False
    if best is None:
        raise InternalConsistencyError("a connected graph has a spanning tree")
    if lower > best:
        raise InternalConsistencyError(
            f"bound sandwich inverted: {lower} > {best}"
        )
    return BoundsResult(lower, best, exhaustive)


def _exactness_tag(g: Graph, value: int, prime: bool) -> str | None:
    """Lower-bound tag when the achieved cost is provably optimal.

    Non-complete graphs need total >= 2 (one edge, one color) and a total of
    3 is optimal exactly when no good edge exists; the same reasoning gives
    edge counts 1 and 2 for the prime metric. Returns None when the value
    is only an upper bound.
    """
    if g.is_complete():
        return "formula" if value == 0 else None
    floor_value = 1 if prime else 2
    if value == floor_value:
        return "formula"
    if value == floor_value + 1:
        if g.n >= 3 and find_good_edge(g) is None:
            return "formula"
        return None
    return None


def _certificate(
    g: Graph, r: Recoloring, evidence: str, prime: bool, lbp: str | None
) -> Certificate:
    value = r.p if prime else r.total_cost
    metric = "prime" if prime else "opt"
    witness = r if r.p else None
    return Certificate(value, witness, evidence, lbp, metric)


def theorem_certificate(g: Graph, prime: bool = False) -> Certificate | None:
    """Certificate from the cheapest applicable structural construction,
    or None when only exact search would remain.

    Dispatch order: complete, tree, complete bipartite (order >= 9), good
    edge, independence-number-2, spanning bipartite. The order guarantees
    exactness: once the good-edge test has failed, a cost-3 construction is
    optimal.
    """
    metric = "prime" if prime else "opt"
    if g.is_complete():
        return Certificate(0, None, EVIDENCE_COMPLETE, "formula", metric)
    if is_tree(g):
        plan = recolor_tree(g, "prime" if prime else "opt")
        value = plan.cost_p if prime else plan.total_cost
        return Certificate(
            value, plan.to_recoloring(), EVIDENCE_TREE, "formula", metric
        )
    sides = _complete_bipartite_sides(g)
    if sides is not None and len(sides[1]) >= 2 and g.n >= 9:
        r = recolor_complete_bipartite_graph(g, "prime" if prime else "opt")
        return _certificate(g, r, EVIDENCE_COMPLETE_BIPARTITE, prime, "formula")
    good: GoodEdgeWitness | None = None
    if g.n >= 3:
        good = find_good_edge(g)
    if good is not None:
        r = _validated(g, Recoloring(((good.edge, 1),)), "good-edge recoloring")
        return _certificate(g, r, EVIDENCE_GOOD_EDGE, prime, "formula")
    # From here on no good edge exists, so any achieved cost of 3 (prime: 2)
    # is exact.
    if alpha_at_most_2(g):
        r = recolor_alpha2(g, "prime" if prime else "opt")
        value = r.p if prime else r.total_cost
        return _certificate(
            g, r, EVIDENCE_ALPHA2, prime, _exactness_tag(g, value, prime)
        )
    try:
        r = recolor_spanning_bipartite(g)
        return _certificate(
            g,
            r,
            EVIDENCE_SPANNING_BIPARTITE,
            prime,
            _exactness_tag(g, r.p if prime else r.total_cost, prime),
        )
    except NotApplicableError:
        return None


def construct_certificate(
    g: Graph,
    cls: str = "auto",
    prime: bool = False,
    budget: SearchBudget | None = None,
) -> Certificate:
    """Dispatch a construction class, or the full auto chain ending in exact
    search. Forced classes may certify only an upper bound, in which case
    ``lower_bound_proof`` is None.
    """
    exact = pc_opt_prime_exact if prime else pc_opt_exact
    if cls == "auto":
        cert = theorem_certificate(g, prime)
        return cert if cert is not None else exact(g, budget)
    if cls == "tree":
        plan = recolor_tree(g, "prime" if prime else "opt")
        value = plan.cost_p if prime else plan.total_cost
        return Certificate(
            value,
            plan.to_recoloring(),
            EVIDENCE_TREE,
            "formula",
            "prime" if prime else "opt",
        )
    if cls == "complete-bipartite":
        sides = _complete_bipartite_sides(g)
        if sides is None:
            raise NotApplicableError("input is not a complete bipartite graph")
        if g.n < 9 or len(sides[1]) < 2:
            return exact(g, budget)  # outside the theorem's range
        r = recolor_complete_bipartite_graph(g, "prime" if prime else "opt")
        return _certificate(g, r, EVIDENCE_COMPLETE_BIPARTITE, prime, "formula")
    if cls == "good-edge":
        r = recolor_good_edge(g)
        return _certificate(
            g, r, EVIDENCE_GOOD_EDGE, prime,
            _exactness_tag(g, r.p if prime else r.total_cost, prime),
        )
    if cls == "alpha2":
        r = recolor_alpha2(g, "prime" if prime else "opt")
        return _certificate(
            g, r, EVIDENCE_ALPHA2, prime,
            _exactness_tag(g, r.p if prime else r.total_cost, prime),
        )
    if cls == "bipartite-spanning":
        r = recolor_spanning_bipartite(g)
        return _certificate(
            g, r, EVIDENCE_SPANNING_BIPARTITE, prime,
            _exactness_tag(g, r.p if prime else r.total_cost, prime),
        )
    raise PreconditionError(f"unknown construction class {cls!r}")
