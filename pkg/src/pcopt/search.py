"""Exact optimal-recoloring search by iterative deepening on cost.

New colors are interchangeable, so recolorings are enumerated up to
permutation of the new colors: choose the recolored edges, then partition
them into color classes labeled in first-occurrence order (a restricted
growth sequence). This cuts the space by q! without affecting the minimum.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .coloring import (
    EdgeColoring,
    Recoloring,
    _properly_connected_fast,
    apply_recoloring,
    is_properly_connected,
)
from .errors import BudgetError, PreconditionError
from .graphs import Graph, is_connected

EVIDENCE_EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the exact search.

    ``max_total_cost`` defaults to ``2 n`` at call time, which always
    terminates: no connected graph needs more than ``2 n - 4``.
    """

    max_total_cost: int | None = None
    max_candidates: int | None = None
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.max_total_cost is not None and self.max_total_cost < 0:
            raise PreconditionError("max_total_cost must be non-negative")

    def resolved_cost_cap(self, g: Graph) -> int:
        if self.max_total_cost is not None:
            return self.max_total_cost
        return 2 * g.n


@dataclass(frozen=True)
class Certificate:
    """An exact-value claim with a re-checkable witness.

    ``metric`` is ``"opt"`` when the value counts edges plus colors and
    ``"prime"`` when it counts recolored edges alone. The witness is absent
    only for value 0 (already properly connected).
    """

    value: int
    witness: Recoloring | None
    evidence: str
    lower_bound_proof: str | None
    metric: str = "opt"


def verify_certificate(g: Graph, cert: Certificate) -> tuple[bool, str]:
    """Re-check a certificate against the ground-truth checker."""
    if cert.metric not in ("opt", "prime"):
        return False, f"unknown metric {cert.metric!r}"
    if cert.witness is None:
        if cert.value != 0:
            return False, "missing witness for a nonzero value"
        report = is_properly_connected(g, EdgeColoring.monochromatic(g))
        if not report.properly_connected:
            return False, "value 0 claimed but the monochromatic graph fails"
        return True, "ok"
    w = cert.witness
    claimed = w.total_cost if cert.metric == "opt" else w.p
    if claimed != cert.value:
        return False, f"witness cost {claimed} != claimed value {cert.value}"
    report = is_properly_connected(g, apply_recoloring(g, w))
    if not report.properly_connected:
        return False, f"witness fails at pair {report.violating_pair}"
    return True, "ok"


@lru_cache(maxsize=None)
def _surjective_patterns(p: int, q: int) -> tuple[tuple[int, ...], ...]:
    """Length-p restricted growth sequences using exactly q labels, in
    lexicographic order. Label b in position i means edge i joins color
    class b; class 0 always contains the first edge."""
    if q < 1 or q > p:
        return ()
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(used: int) -> None:
        i = len(prefix)
        if p - i < q - used:
            return  # not enough positions left to open the remaining labels
        if i == p:
            if used == q:
                out.append(tuple(prefix))
            return
        for b in range(min(used + 1, q)):
            prefix.append(b)
            rec(used + 1 if b == used else used)
            prefix.pop()

    rec(0)
    return tuple(out)


def enumerate_recolorings(g: Graph, p: int, q: int) -> Iterator[Recoloring]:
    """One representative per recoloring class under new-color permutation.

    Streams every way to pick ``p`` edges (subsets in lexicographic order
    over edge indices) partitioned into exactly ``q`` color classes; the
    class containing the smallest remaining edge index gets the smallest
    unused color id. ``q > p`` yields nothing.
    """
    if p < 1 or q < 1:
        raise PreconditionError("p and q must be at least 1")
    if q > p:
        return
    patterns = _surjective_patterns(p, q)
    for subset in combinations(range(g.m), p):
        for pattern in patterns:
            yield Recoloring(
                tuple(
                    (g.edges[subset[i]], pattern[i] + 1) for i in range(p)
                )
            )


class _CandidateRunner:
    """Shared inner loop: stream canonical candidates at a fixed (p, q) and
    return the first one that properly connects the graph."""

    def __init__(self, g: Graph, budget: SearchBudget) -> None:
        self.g = g
        self.colors = [0] * g.m
        self.checked = 0
        self.max_candidates = budget.max_candidates
        self.deadline = (
            time.monotonic() + budget.time_limit
            if budget.time_limit is not None
            else None
        )
        # Generic bound for budget-error reporting on non-complete inputs.
        self.upper_hint = max(0, 2 * g.n - 4)

    def _tick(self) -> None:
        self.checked += 1
        if self.max_candidates is not None and self.checked > self.max_candidates:
            raise BudgetError(
                f"candidate budget of {self.max_candidates} exhausted",
                partial_count=self.max_candidates,
                best_upper_bound=self.upper_hint,
            )
        if self.deadline is not None and self.checked % 64 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetError(
                    "time limit exhausted",
                    partial_count=self.checked,
                    best_upper_bound=self.upper_hint,
                )

    def first_success(self, p: int, q: int) -> Recoloring | None:
        if q < 1 or q > p or p > self.g.m:
            return None
        g = self.g
        colors = self.colors
        patterns = _surjective_patterns(p, q)
        for subset in combinations(range(g.m), p):
            for pattern in patterns:
                self._tick()
                for i in range(p):
                    colors[subset[i]] = pattern[i] + 1
                ok = _properly_connected_fast(g, colors)
                for i in range(p):
                    colors[subset[i]] = 0
                if ok:
                    return Recoloring(
                        tuple(
                            (g.edges[subset[i]], pattern[i] + 1)
                            for i in range(p)
                        )
                    )
        return None


def pc_opt_exact(g: Graph, budget: SearchBudget | None = None) -> Certificate:
    """Minimum of p + q over recolorings making the graph properly connected.

    Complete graphs cost 0 outright. Otherwise iterative deepening on the
    total t = 2, 3, ...: splits (p, q) with p + q = t are tried with fewer
    colors first, and the first passing candidate in enumeration order is
    the witness, so everything below the returned value was exhausted.
    """
    budget = budget or SearchBudget()
    if not is_connected(g):
        raise PreconditionError("exact search requires a connected graph")
    if g.is_complete():
        return Certificate(0, None, "theorem:complete", "formula", "opt")
    cap = budget.resolved_cost_cap(g)
    runner = _CandidateRunner(g, budget)
    for total in range(2, cap + 1):
        for q in range(1, total // 2 + 1):
            witness = runner.first_success(total - q, q)
            if witness is not None:
                return Certificate(
                    total, witness, EVIDENCE_EXHAUSTIVE, "exhausted-below", "opt"
                )
    raise BudgetError(
        f"no recoloring within total cost {cap}",
        partial_count=runner.checked,
        best_upper_bound=runner.upper_hint,
    )


def pc_opt_prime_exact(
    g: Graph, budget: SearchBudget | None = None
) -> Certificate:
    """Minimum number of recolored edges alone, colors unconstrained.

    Iterative deepening on p with an inner loop over q = 1..p; any count of
    distinct new colors up to p is admissible.
    """
    budget = budget or SearchBudget()
    if not is_connected(g):
        raise PreconditionError("exact search requires a connected graph")
    if g.is_complete():
        return Certificate(0, None, "theorem:complete", "formula", "prime")
    cap = budget.resolved_cost_cap(g)
    runner = _CandidateRunner(g, budget)
    for p in range(1, cap + 1):
        for q in range(1, p + 1):
            witness = runner.first_success(p, q)
            if witness is not None:
                return Certificate(
                    p, witness, EVIDENCE_EXHAUSTIVE, "exhausted-below", "prime"
                )
    raise BudgetError(
        f"no recoloring within {cap} edges",
        partial_count=runner.checked,
        best_upper_bound=runner.upper_hint,
    )


def feasible(
    g: Graph, p: int, q: int, semantics: str = "exact"
) -> Recoloring | None:
    """Witness that recoloring p edges with q new colors properly connects g.

    ``exact`` demands exactly p edges and exactly q distinct new colors;
    ``at_most`` accepts any p' <= p, q' <= q, scanning cheaper budgets
    first. (0, 0) is feasible iff the monochromatic graph is already
    properly connected. Returns None when infeasible.
    """
    if semantics not in ("exact", "at_most"):
        raise PreconditionError(f"unknown semantics {semantics!r}")
    if p < 0 or q < 0:
        raise PreconditionError("p and q must be non-negative")
    if not is_connected(g):
        raise PreconditionError("feasibility requires a connected graph")
    runner = _CandidateRunner(g, SearchBudget())

    def probe(pp: int, qq: int) -> Recoloring | None:
        if (pp, qq) == (0, 0):
            mono = [0] * g.m
            return Recoloring(()) if _properly_connected_fast(g, mono) else None
        if qq < 1 or qq > pp:
            return None
        return runner.first_success(pp, qq)

    if semantics == "exact":
        return probe(p, q)
    for pp in range(p + 1):
        for qq in range(min(pp, q) + 1):
            witness = probe(pp, qq)
            if witness is not None:
                return witness
    return None
