"""Named graph families, seeded random generators, and exhaustive enumeration.

Random generators use ``random.Random(seed)`` (the stdlib Mersenne Twister)
and draw in a documented canonical order, so a given seed always produces
the same graph.
"""

from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterator, Sequence

from .errors import BudgetError, ParameterError
from .graphs import Graph, build_graph, is_connected

#: Hard cap for labeled enumeration of connected graphs.
ENUMERATION_CAP = 7

#: Attempt cap for rejection sampling in random_connected.
_REJECTION_CAP = 100_000

GENERATOR_KINDS = (
    "path",
    "cycle",
    "star",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "random_tree",
    "random_connected",
    "clique_cycle_blowup",
)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ParameterError("path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(m: int) -> Graph:
    """Center 0 joined to leaves 1..m."""
    if m < 1:
        raise ParameterError("star needs at least 1 leaf")
    return build_graph(m + 1, [(0, i) for i in range(1, m + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ParameterError("complete graph needs at least 1 vertex")
    return build_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """Sides ``0..m-1`` and ``m..m+n-1`` with every cross pair adjacent."""
    if m < 1 or n < 1:
        raise ParameterError("both sides need at least 1 vertex")
    return build_graph(
        m + n, [(a, b) for a in range(m) for b in range(m, m + n)]
    )


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Consecutively labeled parts of the given sizes, fully joined pairwise."""
    if not sizes or any(s < 1 for s in sizes):
        raise ParameterError("part sizes must be positive")
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for a in range(bounds[i], bounds[i + 1]):
                for b in range(bounds[j], bounds[j + 1]):
                    edges.append((a, b))
    return build_graph(n, edges)


def clique_cycle_blowup(sizes: Sequence[int]) -> Graph:
    """Five disjoint cliques arranged in a ring, consecutive cliques joined.

    Block ``i`` is a clique on ``sizes[i]`` consecutive labels; every vertex
    of block ``i`` is adjacent to every vertex of block ``i+1 (mod 5)``.
    """
    if len(sizes) != 5 or any(s < 1 for s in sizes):
        raise ParameterError("clique_cycle_blowup takes exactly 5 positive sizes")
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    blocks = [range(bounds[i], bounds[i + 1]) for i in range(5)]
    edges = []
    for block in blocks:
        edges.extend(itertools.combinations(block, 2))
    for i in range(5):
        for a in blocks[i]:
            for b in blocks[(i + 1) % 5]:
                edges.append((a, b))
    return build_graph(bounds[-1], edges)


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Tree on ``n`` vertices from a length ``n-2`` sequence over ``0..n-1``."""
    if n < 2:
        raise ParameterError("sequence decoding needs at least 2 vertices")
    if len(seq) != n - 2:
        raise ParameterError(f"sequence must have length {n - 2}")
    if any(not 0 <= x < n for x in seq):
        raise ParameterError("sequence entries out of range")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(n, edges)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices, once each, deterministically."""
    if n < 1:
        raise ParameterError("need at least 1 vertex")
    if n == 1:
        yield Graph(1, ())
        return
    if n == 2:
        yield build_graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a random sequence decode."""
    if n < 1:
        raise ParameterError("need at least 1 vertex")
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """One binomial random graph draw; pairs sampled in canonical order."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return build_graph(n, edges)


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Rejection-sample binomial random graphs until one is connected."""
    if n < 1:
        raise ParameterError("need at least 1 vertex")
    if not 0.0 < p <= 1.0:
        raise ParameterError("edge probability must be in (0, 1]")
    rng = random.Random(seed)
    for _ in range(_REJECTION_CAP):
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g
    raise BudgetError(
        f"no connected draw within {_REJECTION_CAP} attempts (n={n}, p={p})",
        partial_count=_REJECTION_CAP,
    )


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected simple graph on ``n`` vertices, exactly once.

    Edge subsets are visited in increasing bitmask order over the canonical
    pair list, so the stream order is deterministic. Hard-capped at
    ``ENUMERATION_CAP`` vertices.
    """
    if n < 1:
        raise ParameterError("need at least 1 vertex")
    if n > ENUMERATION_CAP:
        raise BudgetError(
            f"labeled enumeration is capped at {ENUMERATION_CAP} vertices"
        )
    if n == 1:
        yield Graph(1, ())
        return
    pairs = list(itertools.combinations(range(n), 2))
    total = len(pairs)
    minimum = n - 1
    for mask in range(1 << total):
        if bin(mask).count("1") < minimum:
            continue
        g = Graph(n, tuple(pairs[i] for i in range(total) if mask >> i & 1))
        if is_connected(g):
            yield g


def generate(
    kind: str, params: Sequence[float], seed: int | None = None
) -> Graph:
    """Build a named family graph; random kinds are deterministic per seed."""
    ints = [int(x) for x in params]
    if kind == "path":
        _expect(kind, params, 1)
        return path_graph(ints[0])
    if kind == "cycle":
        _expect(kind, params, 1)
        return cycle_graph(ints[0])
    if kind == "star":
        _expect(kind, params, 1)
        return star_graph(ints[0])
    if kind == "complete":
        _expect(kind, params, 1)
        return complete_graph(ints[0])
    if kind == "complete_bipartite":
        _expect(kind, params, 2)
        return complete_bipartite(ints[0], ints[1])
    if kind == "complete_multipartite":
        if not params:
            raise ParameterError("complete_multipartite needs part sizes")
        return complete_multipartite(ints)
    if kind == "random_tree":
        _expect(kind, params, 1)
        return random_tree(ints[0], seed if seed is not None else 0)
    if kind == "random_connected":
        _expect(kind, params, 2)
        return random_connected(
            ints[0], float(params[1]), seed if seed is not None else 0
        )
    if kind == "clique_cycle_blowup":
        _expect(kind, params, 5)
        return clique_cycle_blowup(ints)
    raise ParameterError(f"unknown family kind: {kind!r}")


def _expect(kind: str, params: Sequence[float], count: int) -> None:
    if len(params) != count:
        raise ParameterError(
            f"{kind} takes {count} parameter(s), got {len(params)}"
        )
