"""Graph core: representation, structural parameters, cuts, matchings, trees.

Vertices are dense integers ``0..n-1``. Edge sets are stored canonically
(each pair ordered, the tuple sorted), so equality, hashing and iteration
order are deterministic everywhere. All records are immutable after
construction and safe to share across workers. Tie-breaking is always
lexicographic on the canonical vertex/edge order.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    BudgetError,
    InternalConsistencyError,
    NoCutError,
    ParseError,
    PreconditionError,
)

Edge = tuple[int, int]

#: Largest vertex count for exact maximum matching on non-forest graphs.
GENERAL_MATCHING_CAP = 16

#: Default cap on the number of spanning trees enumerated per call.
SPANNING_TREE_CAP = 100_000


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a canonical, deterministic edge tuple."""

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the sorted tuple of ``(neighbor, edge index)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(sorted(row)) for row in adj)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(v for v, _ in row) for row in self.adjacency)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    @cached_property
    def nonadjacent_pairs(self) -> tuple[Edge, ...]:
        """All unordered non-adjacent vertex pairs, in lexicographic order."""
        present = set(self.edges)
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in present
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.neighbor_sets[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Construct a canonical :class:`Graph`, collapsing duplicate pairs.

    Raises :class:`ParseError` for out-of-range endpoints or self-loops.
    """
    if n < 1:
        raise ParseError("graph must have at least one vertex")
    seen: set[Edge] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise ParseError(f"self-loop at vertex {u}")
        seen.add(canonical_edge(u, v))
    return Graph(n, tuple(sorted(seen)))


def components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Connected components, each sorted, ordered by least contained vertex."""
    seen = [False] * g.n
    out: list[tuple[int, ...]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, _ in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(tuple(sorted(comp)))
    return tuple(out)


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        d = dist[x]
        assert d is not None
        for y, _ in g.adjacency[x]:
            if dist[y] is None:
                dist[y] = d + 1
                queue.append(y)
    return dist


@dataclass(frozen=True)
class GraphStats:
    """Container for the structural parameters consumed by the recoloring
    routines: maximum degree, diameter (``None`` when disconnected),
    connectivity flags and the vertex connectivity."""

    max_degree: int
    diameter: int | None
    is_connected: bool
    is_complete: bool
    vertex_connectivity: int
    component_count: int

    def __post_init__(self) -> None:
        if (self.diameter is not None) != self.is_connected:
            raise InternalConsistencyError("diameter must be finite iff connected")
        if self.is_complete and self.diameter is not None and self.diameter > 1:
            raise InternalConsistencyError("complete graph with diameter > 1")


def compute_stats(g: Graph) -> GraphStats:
    """Maximum degree, diameter, connectivity and vertex connectivity."""
    comps = components(g)
    connected = len(comps) == 1
    complete = g.is_complete()
    diameter: int | None = None
    if connected:
        diameter = 0
        for v in range(g.n):
            for d in bfs_distances(g, v):
                assert d is not None
                if d > diameter:
                    diameter = d
    if complete:
        kappa = g.n - 1
    elif not connected:
        kappa = 0
    else:
        kappa = len(min_vertex_cut(g))
    return GraphStats(
        max_degree=max(g.degrees),
        diameter=diameter,
        is_connected=connected,
        is_complete=complete,
        vertex_connectivity=kappa,
        component_count=len(comps),
    )


def alpha_at_most_2(g: Graph) -> bool:
    """True iff no three vertices are pairwise non-adjacent."""
    ns = g.neighbor_sets
    for u, v in g.nonadjacent_pairs:
        for w in range(v + 1, g.n):
            if w not in ns[u] and w not in ns[v]:
                return False
    return True


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of some host graph."""

    pairs: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    @cached_property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.pairs for v in e)

    def validate(self, host: Graph) -> None:
        used: set[int] = set()
        for u, v in self.pairs:
            if not host.has_edge(u, v):
                raise PreconditionError(f"matching pair ({u}, {v}) is not an edge")
            if u in used or v in used:
                raise PreconditionError(f"matching pairs overlap at ({u}, {v})")
            used.update((u, v))


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching.

    Forests of any size are handled by leaf-up greedy selection; other
    graphs by exact dynamic programming over vertex subsets, capped at
    ``GENERAL_MATCHING_CAP`` vertices.
    """
    if is_forest(g):
        return _forest_matching(g)
    if g.n > GENERAL_MATCHING_CAP:
        raise BudgetError(
            f"exact matching on non-forest graphs is capped at "
            f"{GENERAL_MATCHING_CAP} vertices (got {g.n})"
        )
    return _subset_matching(g)


def _forest_matching(g: Graph) -> Matching:
    # Children are processed before parents, so an unmatched vertex pairs
    # with its parent whenever the parent is still free: the classic greedy
    # that is maximum on forests.
    matched = [False] * g.n
    parent = [-1] * g.n
    seen = [False] * g.n
    pairs: list[Edge] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        order = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for y, _ in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    order.append(y)
                    stack.append(y)
        for x in reversed(order):
            p = parent[x]
            if p >= 0 and not matched[x] and not matched[p]:
                matched[x] = matched[p] = True
                pairs.append(canonical_edge(x, p))
    return Matching(tuple(sorted(pairs)))


def _subset_matching(g: Graph) -> Matching:
    adj_mask = [0] * g.n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u

    best: dict[int, int] = {0: 0}

    def solve(mask: int) -> int:
        cached = best.get(mask)
        if cached is not None:
            return cached
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        result = solve(rest)
        avail = adj_mask[v] & rest
        while avail:
            low = avail & -avail
            avail ^= low
            u = low.bit_length() - 1
            cand = 1 + solve(rest ^ (1 << u))
            if cand > result:
                result = cand
        best[mask] = result
        return result

    pairs: list[Edge] = []
    mask = (1 << g.n) - 1
    while mask:
        target = solve(mask)
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        chosen = -1
        avail = adj_mask[v] & rest
        while avail:
            low = avail & -avail
            avail ^= low
            u = low.bit_length() - 1
            if 1 + solve(rest ^ (1 << u)) == target:
                chosen = u
                break
        if chosen < 0:
            mask = rest
        else:
            pairs.append(canonical_edge(v, chosen))
            mask = rest ^ (1 << chosen)
    return Matching(tuple(sorted(pairs)))


@dataclass(frozen=True)
class InducedPathWitness:
    """An ordered 4-tuple inducing a path: three chained edges, no chords."""

    vertices: tuple[int, int, int, int]

    def validate(self, host: Graph) -> None:
        p1, p2, p3, p4 = self.vertices
        for a, b in ((p1, p2), (p2, p3), (p3, p4)):
            if not host.has_edge(a, b):
                raise PreconditionError(f"({a}, {b}) must be an edge")
        for a, b in ((p1, p3), (p1, p4), (p2, p4)):
            if host.has_edge(a, b):
                raise PreconditionError(f"({a}, {b}) must be a non-edge")


def find_induced_p4(g: Graph) -> InducedPathWitness | None:
    """The lexicographically least ordered 4-tuple inducing a path, or None.

    Tuples are scanned in lexicographic order over (p1, p2, p3, p4), so the
    result is deterministic; ``None`` certifies the graph has no induced
    4-vertex path (i.e. it is a cograph).
    """
    ns = g.neighbor_sets
    for p1 in range(g.n):
        n1 = ns[p1]
        for p2, _ in g.adjacency[p1]:
            for p3, _ in g.adjacency[p2]:
                if p3 == p1 or p3 in n1:
                    continue
                n3 = ns[p3]
                for p4, _ in g.adjacency[p3]:
                    if p4 == p2 or p4 in n1 or p4 in ns[p2]:
                        continue
                    witness = InducedPathWitness((p1, p2, p3, p4))
                    return witness
    return None


def _disconnects(g: Graph, removed: tuple[int, ...]) -> bool:
    gone = set(removed)
    start = -1
    remaining = 0
    for v in range(g.n):
        if v not in gone:
            remaining += 1
            if start < 0:
                start = v
    if remaining <= 1:
        return False
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y, _ in g.adjacency[x]:
            if y not in gone and y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) < remaining


def min_vertex_cut(g: Graph) -> tuple[int, ...]:
    """The least (by size, then lexicographic) vertex set whose removal
    disconnects the graph.

    Subset search in increasing size, stopping at the minimum-degree bound;
    exact and deterministic at the scales this library targets.
    """
    if not is_connected(g):
        raise PreconditionError("minimum vertex cut requires a connected graph")
    if g.is_complete():
        raise NoCutError("complete graphs have no vertex cutset")
    bound = min(g.degrees)
    for size in range(1, bound + 1):
        for subset in itertools.combinations(range(g.n), size):
            if _disconnects(g, subset):
                return subset
    raise InternalConsistencyError(
        "no cutset within the minimum-degree bound on a non-complete graph"
    )


@dataclass(frozen=True)
class CutStructure:
    """A minimum cutset together with the components it exposes.

    ``complete_bipartite_certified`` records that every cutset vertex is
    adjacent to every vertex outside the cutset, i.e. the cutset and the
    rest span a complete bipartite subgraph. For complete inputs the cutset
    is empty and ``complete_graph`` is set instead.
    """

    cutset: tuple[int, ...]
    sides: tuple[tuple[int, ...], ...]
    complete_bipartite_certified: bool
    complete_graph: bool = False


def p4free_spanning_bipartition(g: Graph) -> CutStructure:
    """Split a connected cograph into a minimum cutset fully joined to the rest.

    For every connected, non-complete graph with no induced 4-vertex path
    this returns a certified structure; a certification failure on such an
    input indicates a bug and raises :class:`InternalConsistencyError`.
    """
    if not is_connected(g):
        raise PreconditionError("input must be connected")
    if g.is_complete():
        return CutStructure((), (tuple(range(g.n)),), False, complete_graph=True)
    witness = find_induced_p4(g)
    if witness is not None:
        raise PreconditionError(
            f"input has an induced 4-vertex path {witness.vertices}"
        )
    cut = min_vertex_cut(g)
    gone = set(cut)
    seen = [False] * g.n
    sides: list[tuple[int, ...]] = []
    for start in range(g.n):
        if start in gone or seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, _ in g.adjacency[x]:
                if y not in gone and not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        sides.append(tuple(sorted(comp)))
    ns = g.neighbor_sets
    certified = all(
        v in ns[s] for s in cut for side in sides for v in side
    )
    if not certified:
        raise InternalConsistencyError(
            "minimum cutset of a cograph is not fully joined to the rest"
        )
    return CutStructure(cut, tuple(sides), True)


def spanning_trees(g: Graph, cap: int = SPANNING_TREE_CAP) -> Iterator[Graph]:
    """Yield every spanning tree exactly once, in a deterministic order.

    Edges are branched on in canonical order, inclusion before exclusion;
    an exclusion branch is entered only when the remaining edges can still
    connect the graph, so every branch produces at least one tree. Raises
    :class:`BudgetError` (carrying ``partial_count=cap``) once more than
    ``cap`` trees exist.
    """
    if not is_connected(g):
        raise PreconditionError("spanning trees require a connected graph")
    n, m, edges = g.n, g.m, g.edges
    if n == 1:
        yield Graph(1, ())
        return

    parent = list(range(n))
    size = [1] * n
    trail: list[int] = []

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        trail.append(rb)

    def rollback(mark: int) -> None:
        while len(trail) > mark:
            rb = trail.pop()
            ra = parent[rb]
            size[ra] -= size[rb]
            parent[rb] = rb

    def still_spannable(from_idx: int, comps: int) -> bool:
        link = {v: find(v) for v in range(n)}

        def root(x: int) -> int:
            while link[x] != x:
                x = link[x]
            return x

        for j in range(from_idx, m):
            a, b = edges[j]
            ra, rb = root(find(a)), root(find(b))
            if ra != rb:
                link[rb] = ra
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    count = 0
    chosen: list[int] = []

    def rec(i: int, comps: int) -> Iterator[Graph]:
        nonlocal count
        if comps == 1:
            count += 1
            if count > cap:
                raise BudgetError(
                    f"more than {cap} spanning trees", partial_count=cap
                )
            yield Graph(n, tuple(edges[j] for j in chosen))
            return
        if i == m or m - i < comps - 1:
            return
        u, v = edges[i]
        if find(u) == find(v):
            yield from rec(i + 1, comps)
            return
        mark = len(trail)
        union(u, v)
        chosen.append(i)
        yield from rec(i + 1, comps - 1)
        chosen.pop()
        rollback(mark)
        if still_spannable(i + 1, comps):
            yield from rec(i + 1, comps)

    yield from rec(0, n)
