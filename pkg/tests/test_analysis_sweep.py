"""Per-graph reports, verdict classification and checkpointed sweeps."""

import json

import pytest

from stellate.analysis import (COUNTEREXAMPLE_A, COUNTEREXAMPLE_B, CONSISTENT_FALSE, CONSISTENT_TRUE,
                               IMPERFECT_QUADRATIC, SKIPPED, Budgets, analyze, classify,
                               decomposition_leaves, quadratic_by_decomposition)
from stellate.families import antihole, glue_along_clique, hole, odd_stretcher
from stellate.graph import Graph, disjoint_union
from stellate.sweep import CheckpointError, SweepState, sweep


def test_classify_covers_every_case():
    assert classify(None, True, False) == SKIPPED
    assert classify(True, True, True) == COUNTEREXAMPLE_A
    assert classify(False, True, False) == COUNTEREXAMPLE_B
    assert classify(True, True, False) == CONSISTENT_TRUE
    assert classify(False, True, True) == CONSISTENT_FALSE
    assert classify(True, False, False) == IMPERFECT_QUADRATIC
    assert classify(False, False, True) == CONSISTENT_FALSE


@pytest.mark.parametrize("g,verdict", [
    (Graph.complete(5), CONSISTENT_TRUE),
    (odd_stretcher(1, 1, 1), CONSISTENT_FALSE),
    (antihole(8), CONSISTENT_FALSE),
    (hole(5), IMPERFECT_QUADRATIC),
    (antihole(7), IMPERFECT_QUADRATIC),
])
def test_analyze_verdicts(g, verdict):
    rep = analyze(g)
    assert rep["verdict"] == verdict and rep["schema"] == 1
    assert rep["counterexample"] is False or rep["counterexample"] is None
    json.dumps(rep)


def test_analyze_report_contents():
    rep = analyze(odd_stretcher(1, 1, 1))
    assert rep["certificates"]["stretcher"] is not None
    assert rep["certificates"]["even_antihole"] is not None
    assert rep["toric"]["quadratically_generated"] is False
    assert rep["flags"]["perfect"] is True


def test_budgets_from_env_and_overrides():
    b = Budgets.from_env({"STELLATE_BUDGET_GB_VARS": "50"}, stable_sets=7)
    assert b.gb_vars == 50 and b.stable_sets == 7
    assert Budgets.from_env({}, stable_sets=None).stable_sets == Budgets().stable_sets


def test_tight_budget_is_reported_as_skipped():
    rep = analyze(hole(7), Budgets(gb_vars=5, full_gb_vars=5))
    assert rep["verdict"] == SKIPPED and rep["skipped"]


def test_decomposition_leaves():
    g = disjoint_union(hole(5), glue_along_clique(Graph.complete(3), hole(4), [0, 1], [0, 1]))
    assert len(decomposition_leaves(g)) == 3
    res = quadratic_by_decomposition(disjoint_union(hole(5), antihole(6)))
    assert res["quadratic"] is False and res["witness"]["leaf"]


def test_sweep_small():
    state = sweep(max_n=4)
    assert state.cursor == 1 + 1 + 2 + 6
    assert not state.found_counterexample


def test_checkpoint_resume_matches_uninterrupted(tmp_path):
    full_report = tmp_path / "full.jsonl"
    full = sweep(max_n=5, report_path=str(full_report))
    ck = tmp_path / "ck.json"
    part_report = tmp_path / "part.jsonl"
    sweep(max_n=5, report_path=str(part_report), checkpoint_path=str(ck), every=4, stop_after=13)
    assert SweepState.load(str(ck)).cursor == 13
    resumed = sweep(resume=str(ck), report_path=str(part_report))
    assert resumed.tallies == full.tallies and resumed.cursor == full.cursor
    assert part_report.read_text() == full_report.read_text()


def test_jobs_do_not_change_results(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    s1 = sweep(max_n=5, report_path=str(a), jobs=1)
    s2 = sweep(max_n=5, report_path=str(b), jobs=2)
    assert s1.tallies == s2.tallies
    assert a.read_text() == b.read_text()


def test_corrupted_checkpoint_is_rejected(tmp_path):
    ck = tmp_path / "bad.json"
    ck.write_text("{not json")
    with pytest.raises(CheckpointError):
        SweepState.load(str(ck))
    ck.write_text(json.dumps({"source": "internal:3", "cursor": 5, "tallies": {}}))
    with pytest.raises(CheckpointError):
        SweepState.load(str(ck))


def test_file_sweep_reports_disconnected(tmp_path):
    src = tmp_path / "in.g6"
    src.write_text("Bw\nA?\nDhc\n")
    state = sweep(input_path=str(src))
    assert state.tallies.get("disconnected") == 1 and state.cursor == 3
