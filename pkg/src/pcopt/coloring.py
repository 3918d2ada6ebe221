"""Edge colorings, recolorings, and the properly-connected decision procedure.

A path is properly colored when no two consecutive edges share a color; a
graph is properly connected when every vertex pair is joined by some
properly colored path. The decision procedure here is an exhaustive DFS
over simple paths, pruned by walk reachability: every properly colored path
is also a properly colored walk, so a state with no walk continuation can
be discarded. Walks may revisit vertices, so walk reachability is only ever
used as a negative filter, never as positive evidence of a path.

Internally a coloring is a flat list of color ids aligned with the host
graph's canonical edge order; color 0 is the base color of the initial
monochromatic graph and every id >= 1 is a new color.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .errors import PreconditionError
from .graphs import Edge, Graph, canonical_edge, components

#: Sentinel for "no previous edge"; never equal to a real color id (>= 0).
_NO_COLOR = -1


@dataclass(frozen=True)
class EdgeColoring:
    """A total assignment of color ids to the host graph's edges."""

    host: Graph
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.host.m:
            raise PreconditionError(
                "coloring must assign exactly the host's edges"
            )
        if any(c < 0 for c in self.colors):
            raise PreconditionError("color ids must be non-negative")

    @classmethod
    def monochromatic(cls, host: Graph) -> "EdgeColoring":
        return cls(host, (0,) * host.m)

    @classmethod
    def from_mapping(
        cls, host: Graph, mapping: Mapping[tuple[int, int], int]
    ) -> "EdgeColoring":
        """Build from an edge->color mapping covering every edge exactly once."""
        normalized = {canonical_edge(u, v): c for (u, v), c in mapping.items()}
        if len(normalized) != len(mapping):
            raise PreconditionError("duplicate edges in coloring mapping")
        extra = set(normalized) - set(host.edges)
        if extra:
            raise PreconditionError(f"colored edges not in host: {sorted(extra)}")
        missing = set(host.edges) - set(normalized)
        if missing:
            raise PreconditionError(f"uncolored host edges: {sorted(missing)}")
        return cls(host, tuple(normalized[e] for e in host.edges))

    @classmethod
    def from_partial(
        cls,
        host: Graph,
        mapping: Mapping[tuple[int, int], int],
        default: int = 0,
    ) -> "EdgeColoring":
        """Like :meth:`from_mapping` but unmentioned edges get ``default``."""
        full = {e: default for e in host.edges}
        for (u, v), c in mapping.items():
            e = canonical_edge(u, v)
            if e not in full:
                raise PreconditionError(f"colored edge {e} not in host")
            full[e] = c
        return cls.from_mapping(host, full)

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.host.edge_index[canonical_edge(u, v)]]

    def as_mapping(self) -> dict[Edge, int]:
        return dict(zip(self.host.edges, self.colors))


@dataclass(frozen=True)
class Recoloring:
    """A set of edges receiving new colors; cost is measured by ``p`` edges
    and ``q`` distinct new colors."""

    assignments: tuple[tuple[Edge, int], ...]

    def __post_init__(self) -> None:
        canon = tuple(
            sorted((canonical_edge(u, v), c) for (u, v), c in self.assignments)
        )
        seen_edges = {e for e, _ in canon}
        if len(seen_edges) != len(canon):
            raise PreconditionError("an edge is recolored more than once")
        if any(c < 1 for _, c in canon):
            raise PreconditionError("recolorings may only use new colors (>= 1)")
        object.__setattr__(self, "assignments", canon)

    @property
    def p(self) -> int:
        return len(self.assignments)

    @cached_property
    def q(self) -> int:
        return len({c for _, c in self.assignments})

    @property
    def total_cost(self) -> int:
        return self.p + self.q

    def edges(self) -> tuple[Edge, ...]:
        return tuple(e for e, _ in self.assignments)


@dataclass(frozen=True)
class ConnectivityReport:
    """Outcome of a properly-connected check.

    ``violating_pair`` is the lexicographically least vertex pair with no
    properly colored path when the check fails; ``checked_pairs`` counts the
    pairs confirmed before termination. ``witness_paths`` maps each pair to
    one properly colored path and is populated only on request.
    """

    properly_connected: bool
    violating_pair: Edge | None
    checked_pairs: int
    witness_paths: dict[Edge, tuple[int, ...]] | None = None


def apply_recoloring(g: Graph, r: Recoloring) -> EdgeColoring:
    """Color assigned edges with their new colors and everything else 0."""
    colors = [0] * g.m
    index = g.edge_index
    for e, c in r.assignments:
        i = index.get(e)
        if i is None:
            raise PreconditionError(f"recolored edge {e} is not in the graph")
        colors[i] = c
    return EdgeColoring(g, tuple(colors))


def _aligned_colors(g: Graph, c: EdgeColoring) -> Sequence[int]:
    if c.host != g:
        raise PreconditionError("coloring belongs to a different graph")
    return c.colors


def _continuation_filter(
    g: Graph, colors: Sequence[int], target: int
) -> list[set[int]]:
    """Per vertex, colors of first edges that start a properly colored walk
    to ``target``.

    A walk entering vertex ``x`` via color ``cin`` can continue to the
    target iff this set holds some color != cin, so two distinct entries
    already make ``x`` continuable for every entry color; sets are therefore
    capped at two elements, which keeps the fixpoint linear-time.
    """
    adj = g.adjacency
    out_good: list[set[int]] = [set() for _ in range(g.n)]
    events: deque[tuple[int, int, int]] = deque()

    def add(x: int, c: int) -> None:
        s = out_good[x]
        if len(s) >= 2 or c in s:
            return
        s.add(c)
        events.append((x, c, len(s)))

    for y, ei in adj[target]:
        add(y, colors[ei])
    while events:
        y, d, rank = events.popleft()
        if rank == 1:
            # First escape color at y: any entry color other than d works.
            for x, ei in adj[y]:
                if x == target:
                    continue
                c = colors[ei]
                if c != d:
                    add(x, c)
        else:
            # Second escape color: entry color equal to the first one, which
            # used to be blocked, is now continuable too.
            other = next(iter(out_good[y] - {d}))
            for x, ei in adj[y]:
                if x != target and colors[ei] == other:
                    add(x, other)
    return out_good


def _pc_path_filtered(
    g: Graph,
    colors: Sequence[int],
    u: int,
    v: int,
    out_good: list[set[int]],
) -> tuple[int, ...] | None:
    adj = g.adjacency
    visited = [False] * g.n
    visited[u] = True
    path = [u]

    def dfs(x: int, entry: int) -> bool:
        for y, ei in adj[x]:
            if visited[y]:
                continue
            c = colors[ei]
            if c == entry:
                continue
            if y == v:
                path.append(y)
                return True
            s = out_good[y]
            if not s or (len(s) == 1 and c in s):
                continue  # no properly colored walk onward, hence no path
            visited[y] = True
            path.append(y)
            if dfs(y, c):
                return True
            path.pop()
            visited[y] = False
        return False

    if dfs(u, _NO_COLOR):
        return tuple(path)
    return None


def _pc_path(
    g: Graph, colors: Sequence[int], u: int, v: int
) -> tuple[int, ...] | None:
    if v in g.neighbor_sets[u]:
        return (u, v)  # a single edge is always properly colored
    return _pc_path_filtered(g, colors, u, v, _continuation_filter(g, colors, v))


def _walk_reachable(g: Graph, colors: Sequence[int], u: int) -> set[int]:
    adj = g.adjacency
    seen_states: set[tuple[int, int]] = {(u, _NO_COLOR)}
    reached: set[int] = set()
    queue: deque[tuple[int, int]] = deque([(u, _NO_COLOR)])
    while queue:
        x, entry = queue.popleft()
        for y, ei in adj[x]:
            c = colors[ei]
            if c == entry:
                continue
            reached.add(y)
            state = (y, c)
            if state not in seen_states:
                seen_states.add(state)
                queue.append(state)
    reached.discard(u)
    return reached


def _properly_connected_fast(g: Graph, colors: Sequence[int]) -> bool:
    """Boolean-only check used by the exact search inner loop.

    Adjacent pairs always pass (a single edge is a properly colored path)
    and a walk-reachability sweep from vertex 0 rejects most candidates
    before any per-pair search.
    """
    n = g.n
    if n <= 1:
        return True
    if len(_walk_reachable(g, colors, 0)) < n - 1:
        return False
    filters: dict[int, list[set[int]]] = {}
    for u, v in g.nonadjacent_pairs:
        out_good = filters.get(v)
        if out_good is None:
            out_good = filters[v] = _continuation_filter(g, colors, v)
        if _pc_path_filtered(g, colors, u, v, out_good) is None:
            return False
    return True


def exists_pc_path(
    g: Graph, c: EdgeColoring, u: int, v: int
) -> tuple[int, ...] | None:
    """A properly colored simple path from u to v, or None.

    The search is exhaustive over simple paths (walk-pruned), neighbors are
    scanned in ascending order, and the first path found is returned, so
    results are deterministic. Absence is a definite answer, not a timeout.
    """
    if u == v:
        raise PreconditionError("endpoints must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise PreconditionError("endpoint out of range")
    return _pc_path(g, _aligned_colors(g, c), u, v)


def pc_walk_reachable(g: Graph, c: EdgeColoring, u: int) -> frozenset[int]:
    """Vertices reachable from u by a properly colored walk (u excluded).

    This is a superset of path reachability and is safe only as a negative
    filter: a walk may revisit vertices, so membership here never proves a
    properly colored path exists.
    """
    if not 0 <= u < g.n:
        raise PreconditionError("vertex out of range")
    return frozenset(_walk_reachable(g, _aligned_colors(g, c), u))


def is_properly_connected(
    g: Graph, c: EdgeColoring, collect_witness_paths: bool = False
) -> ConnectivityReport:
    """Check every unordered vertex pair, in lexicographic order.

    Short-circuits on the first failing pair, so a failure reports the
    lexicographically least violating pair. Disconnected inputs fail
    immediately with the least cross-component pair.
    """
    colors = _aligned_colors(g, c)
    comps = components(g)
    if len(comps) > 1:
        first = set(comps[0])
        other = min(v for v in range(g.n) if v not in first)
        return ConnectivityReport(False, (0, other), 0)
    witness: dict[Edge, tuple[int, ...]] | None = (
        {} if collect_witness_paths else None
    )
    neighbor_sets = g.neighbor_sets
    filters: dict[int, list[set[int]]] = {}
    checked = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v in neighbor_sets[u]:
                path: tuple[int, ...] | None = (u, v)
            else:
                out_good = filters.get(v)
                if out_good is None:
                    out_good = filters[v] = _continuation_filter(g, colors, v)
                path = _pc_path_filtered(g, colors, u, v, out_good)
            if path is None:
                return ConnectivityReport(False, (u, v), checked, witness)
            checked += 1
            if witness is not None:
                witness[(u, v)] = path
    return ConnectivityReport(True, None, checked, witness)


def is_properly_colored(
    g: Graph, c: EdgeColoring
) -> tuple[bool, tuple[Edge, Edge] | None]:
    """True iff no two edges sharing a vertex have equal colors.

    On failure also returns the first clashing edge pair found, scanning
    vertices and their incident edges in ascending order.
    """
    colors = _aligned_colors(g, c)
    for x in range(g.n):
        seen: dict[int, int] = {}
        for _, ei in g.adjacency[x]:
            col = colors[ei]
            if col in seen:
                return False, (g.edges[seen[col]], g.edges[ei])
            seen[col] = ei
    return True, None
