"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they complete. Every criterion is exact (integer values, zero
tolerance); the sweep machinery lives in ``pcopt.sweeps`` and is also
reachable from the command line via ``pcopt verify-sweep``.
"""

from __future__ import annotations

import pytest

from pcopt.sweeps import SweepResult, run_sweep


def _report(number: int, title: str, results: list[SweepResult]) -> None:
    checked = sum(r.checked for r in results)
    failures = [f for r in results for f in r.failures]
    state = "PASS" if not failures else "FAIL"
    print(f"ACCEPTANCE {number} ({title}): {state} [{checked} checked]")
    assert not failures, f"criterion {number} failed: {failures[:5]}"


def test_criterion_1_reference_value_table():
    _report(1, "small-family exact values", [run_sweep("reference-values")])


def test_criterion_2_tree_theorem():
    _report(2, "tree formula vs exact search", [run_sweep("tree-formula")])


def test_criterion_3_complete_bipartite_theorem():
    _report(3, "complete bipartite values", [run_sweep("complete-bipartite")])


def test_criterion_4_good_edge_characterization():
    _report(4, "good edge iff (1,1)-feasible", [run_sweep("good-edge-iff")])


def test_criterion_5_alpha2_theorem():
    _report(5, "independence-2 cost bound", [run_sweep("alpha2")])


def test_criterion_6_optimal_feasibility():
    _report(6, "optimal feasibility splits", [run_sweep("optimal-feasibility")])


def test_criterion_7_bound_sandwich():
    _report(7, "diameter/spanning-tree sandwich", [run_sweep("bound-sandwich")])


def test_criterion_8_certificate_and_filter_soundness():
    _report(
        8,
        "certificate + filter soundness",
        [run_sweep("certificate-soundness"), run_sweep("filter-soundness")],
    )


def test_headline_tables_gate(capsys):
    """The value table must render with every match flag set (exit 0)."""
    from pcopt.cli import main

    code = main(["tables"])
    out = capsys.readouterr().out
    with capsys.disabled():
        state = "PASS" if code == 0 else "FAIL"
        print(f"ACCEPTANCE gate (tables exit 0): {state}")
    assert code == 0
    assert "false" not in out


@pytest.mark.parametrize(
    "name",
    [
        "monotonicity",
        "diameter-bound",
        "relabel-invariance",
        "prime-vs-opt",
        "mono-complete",
        "path-oracle",
        "tree-equivalence",
        "p4free-bipartition",
        "spanning-count",
        "cograph-two-connected",
    ],
)
def test_module_invariant_sweeps(name):
    result = run_sweep(name)
    print(result.summary())
    assert result.passed, result.failures[:5]
