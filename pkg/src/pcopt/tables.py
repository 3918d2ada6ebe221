"""The small-graph value table: expected, constructed and exact side by side.

Every row carries the closed-form expected value, the cost achieved by the
applicable structural construction (blank where none applies), and the
exact search value; prime-metric columns are filled for the families whose
edge-only optimum has a closed form. A correct build has every match flag
set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construct import recolor_complete_bipartite, recolor_tree, theorem_certificate
from .families import complete_bipartite, cycle_graph, path_graph, star_graph
from .graphs import Graph
from .search import pc_opt_exact, pc_opt_prime_exact
from .sweeps import (
    SMALL_BIPARTITE_VALUES,
    expected_big_bipartite_prime,
    expected_big_bipartite_value,
    expected_cycle_value,
    expected_path_value,
    expected_star_value,
    tree_prime_value,
)


@dataclass(frozen=True)
class TableRow:
    family: str
    params: tuple[int, ...]
    expected: int
    constructed: int | None
    exact: int
    expected_prime: int | None
    constructed_prime: int | None
    exact_prime: int | None

    @property
    def match(self) -> bool:
        opt_values = {self.expected, self.exact}
        if self.constructed is not None:
            opt_values.add(self.constructed)
        if len(opt_values) != 1:
            return False
        prime_values = {
            v
            for v in (self.expected_prime, self.constructed_prime, self.exact_prime)
            if v is not None
        }
        return len(prime_values) <= 1


FAMILY_ORDER = ("small-bipartite", "star", "path", "cycle", "big-bipartite")


def _construction_value(g: Graph) -> int | None:
    cert = theorem_certificate(g, prime=False)
    return cert.value if cert is not None else None


def value_table(families: tuple[str, ...] | None = None) -> list[TableRow]:
    """All rows of the value table, in the canonical family order."""
    wanted = set(families) if families is not None else set(FAMILY_ORDER)
    rows: list[TableRow] = []
    if "small-bipartite" in wanted:
        for (m, n), expected in SMALL_BIPARTITE_VALUES.items():
            g = complete_bipartite(m, n)
            rows.append(
                TableRow(
                    "K_{m,n}", (m, n), expected,
                    _construction_value(g), pc_opt_exact(g).value,
                    None, None, None,
                )
            )
    if "star" in wanted:
        for m in range(2, 6):
            g = star_graph(m)
            plan = recolor_tree(g)
            rows.append(
                TableRow(
                    "K_{1,m}", (m,), expected_star_value(m),
                    plan.total_cost, pc_opt_exact(g).value,
                    m - 1, plan.cost_p, pc_opt_prime_exact(g).value,
                )
            )
    if "path" in wanted:
        for n in range(3, 9):
            g = path_graph(n)
            plan = recolor_tree(g)
            rows.append(
                TableRow(
                    "P_n", (n,), expected_path_value(n),
                    plan.total_cost, pc_opt_exact(g).value,
                    tree_prime_value(g), plan.cost_p,
                    pc_opt_prime_exact(g).value,
                )
            )
    if "cycle" in wanted:
        for n in range(3, 9):
            g = cycle_graph(n)
            rows.append(
                TableRow(
                    "C_n", (n,), expected_cycle_value(n),
                    _construction_value(g), pc_opt_exact(g).value,
                    None, None, None,
                )
            )
    if "big-bipartite" in wanted:
        for m, n in ((7, 2), (6, 3), (5, 4)):
            g = complete_bipartite(m, n)
            r = recolor_complete_bipartite(m, n)
            rows.append(
                TableRow(
                    "K_{m,n}", (m, n), expected_big_bipartite_value(n),
                    r.total_cost, pc_opt_exact(g).value,
                    expected_big_bipartite_prime(n), r.p,
                    pc_opt_prime_exact(g).value,
                )
            )
    return rows


_CSV_HEADER = (
    "family,params,expected,constructed,exact,"
    "expected_prime,constructed_prime,exact_prime,match"
)


def _cell(value: int | None) -> str:
    return "-" if value is None else str(value)


def render_csv(rows: list[TableRow]) -> str:
    lines = [_CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                (
                    r.family,
                    " ".join(map(str, r.params)),
                    _cell(r.expected),
                    _cell(r.constructed),
                    _cell(r.exact),
                    _cell(r.expected_prime),
                    _cell(r.constructed_prime),
                    _cell(r.exact_prime),
                    "true" if r.match else "false",
                )
            )
        )
    return "\n".join(lines) + "\n"


def render_text(rows: list[TableRow]) -> str:
    header = (
        "family", "params", "expected", "constructed", "exact",
        "exp'", "con'", "exa'", "match",
    )
    table = [header]
    for r in rows:
        table.append(
            (
                r.family,
                " ".join(map(str, r.params)),
                _cell(r.expected),
                _cell(r.constructed),
                _cell(r.exact),
                _cell(r.expected_prime),
                _cell(r.constructed_prime),
                _cell(r.exact_prime),
                "ok" if r.match else "MISMATCH",
            )
        )
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = [
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in table
    ]
    return "\n".join(lines) + "\n"
