"""Independent oracles used by the tests.

These deliberately avoid the library's own code paths: counts come from
recurrences or exhaustive enumeration, matchings from brute-force recursion,
and recoloring class counts from explicit labeled enumeration quotiented by
color permutation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from math import comb

from pcopt.graphs import Graph


@lru_cache(maxsize=None)
def connected_labeled_count(n: int) -> int:
    """Number of labeled connected simple graphs, by the standard recurrence
    over the component containing vertex 1."""
    if n == 1:
        return 1
    total = 2 ** comb(n, 2)
    rest = sum(
        comb(n - 1, k - 1) * connected_labeled_count(k) * 2 ** comb(n - k, 2)
        for k in range(1, n)
    )
    return total - rest


@lru_cache(maxsize=None)
def stirling2(p: int, q: int) -> int:
    if q == 0:
        return 1 if p == 0 else 0
    if p == 0 or q > p:
        return 0
    return q * stirling2(p - 1, q) + stirling2(p - 1, q - 1)


def naive_max_matching_size(g: Graph) -> int:
    """Brute-force recursion over the edge list (include/exclude)."""

    def rec(i: int, used: frozenset[int]) -> int:
        if i == g.m:
            return 0
        best = rec(i + 1, used)
        u, v = g.edges[i]
        if u not in used and v not in used:
            best = max(best, 1 + rec(i + 1, used | {u, v}))
        return best

    return rec(0, frozenset())


def has_induced_p4_bruteforce(g: Graph) -> bool:
    """Check every 4-subset for an induced path on its vertices."""
    ns = g.neighbor_sets
    for quad in combinations(range(g.n), 4):
        sub = [(a, b) for a, b in combinations(quad, 2) if b in ns[a]]
        if len(sub) != 3:
            continue
        degree = {v: 0 for v in quad}
        for a, b in sub:
            degree[a] += 1
            degree[b] += 1
        counts = sorted(degree.values())
        if counts == [1, 1, 2, 2]:
            return True
    return False


def naive_recoloring_class_count(m: int, p: int, q: int) -> int:
    """Count recolorings of p edges among m with exactly q new colors, up to
    permutation of the colors, by explicit enumeration and canonicalization."""
    classes: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    for subset in combinations(range(m), p):
        for colors in product(range(1, q + 1), repeat=p):
            if len(set(colors)) != q:
                continue
            relabel: dict[int, int] = {}
            canon = []
            for c in colors:
                if c not in relabel:
                    relabel[c] = len(relabel) + 1
                canon.append(relabel[c])
            classes.add((subset, tuple(canon)))
    return len(classes)
