"""Text and JSON formats: edge lists, graph6, coloring files, certificates.

Edge-list format: first line ``n m``, then ``m`` lines ``u v`` (0-based,
whitespace-separated). Coloring files carry ``u v c`` lines; edges not
mentioned default to color 0. graph6 is the usual printable-ASCII encoding
of the upper triangle, column by column.
"""

from __future__ import annotations

from typing import Iterable

from .coloring import EdgeColoring, Recoloring
from .errors import ParameterError, ParseError
from .graphs import Graph, build_graph
from .search import Certificate


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"non-integer edge line {ln!r}") from exc
    return build_graph(n, edges)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    elif n <= 258047:
        head = "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    else:
        raise ParameterError("graph6 writer supports up to 258047 vertices")
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
                  | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return head + body


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 input")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise ParseError("graph6 bytes must be in the printable range 63..126")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ParseError("graph6 8-byte vertex counts are not supported")
        if len(s) < 4:
            raise ParseError("truncated graph6 vertex count")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        rest = s[4:]
    else:
        n = ord(s[0]) - 63
        rest = s[1:]
    if n < 1:
        raise ParseError("graph must have at least one vertex")
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ParseError(
            f"graph6 body length {len(rest)} does not match n={n}"
        )
    bits: list[int] = []
    for ch in rest:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    """One graph6 line per graph; the cache format for enumerations."""
    return "".join(write_graph6(g) + "\n" for g in graphs)


def parse_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]


def parse_graph_auto(text: str) -> Graph:
    """Sniff edge-list vs graph6: an 'n m' integer header means edge list."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty graph input")
    head = lines[0].split()
    if len(head) == 2:
        try:
            int(head[0]), int(head[1])
        except ValueError:
            pass
        else:
            return parse_edge_list(text)
    if len(lines) == 1:
        return parse_graph6(lines[0])
    raise ParseError("input is neither an edge list nor a single graph6 line")


def write_coloring(c: EdgeColoring, include_base: bool = False) -> str:
    """Lines ``u v c``; base-color edges are omitted unless requested."""
    lines = [
        f"{u} {v} {col}"
        for (u, v), col in zip(c.host.edges, c.colors)
        if include_base or col != 0
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_coloring(text: str, host: Graph) -> EdgeColoring:
    """Parse ``u v c`` lines against a host graph; omitted edges get color 0."""
    mapping: dict[tuple[int, int], int] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v c', got {ln!r}")
        try:
            u, v, col = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ParseError(f"non-integer coloring line {ln!r}") from exc
        if col < 0:
            raise ParseError(f"negative color in {ln!r}")
        if u == v or not (0 <= u < host.n and 0 <= v < host.n):
            raise ParseError(f"bad endpoints in {ln!r}")
        key = (u, v) if u < v else (v, u)
        if key not in host.edge_index:
            raise ParseError(f"colored edge {key} is not in the graph")
        if key in mapping:
            raise ParseError(f"edge {key} colored twice")
        mapping[key] = col
    return EdgeColoring.from_partial(host, mapping)


def certificate_to_dict(g: Graph, cert: Certificate) -> dict:
    w = cert.witness
    return {
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges],
        "value": cert.value,
        "p": w.p if w is not None else 0,
        "q": w.q if w is not None else 0,
        "assignments": (
            [[u, v, c] for (u, v), c in w.assignments] if w is not None else []
        ),
        "evidence": cert.evidence,
        "lower_bound_proof": cert.lower_bound_proof,
        "metric": cert.metric,
    }


def certificate_from_dict(payload: dict) -> tuple[Graph, Certificate]:
    try:
        g = build_graph(payload["n"], [tuple(e) for e in payload["edges"]])
        assignments = tuple(
            ((int(u), int(v)), int(c)) for u, v, c in payload["assignments"]
        )
        witness = Recoloring(assignments) if assignments else None
        cert = Certificate(
            value=int(payload["value"]),
            witness=witness,
            evidence=str(payload["evidence"]),
            lower_bound_proof=payload.get("lower_bound_proof"),
            metric=str(payload.get("metric", "opt")),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate payload: {exc}") from exc
    return g, cert
