"""Command-line interface: subcommands, output formats and exit codes."""

import io
import itertools
import json

import pytest

from stellate.cli import main
from stellate.families import antihole, hole, odd_stretcher
from stellate.io import encode_graph6


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


_names = itertools.count()


def g6file(tmp_path, *graphs):
    p = tmp_path / f"g{next(_names)}.g6"
    p.write_text("".join(encode_graph6(g) + "\n" for g in graphs))
    return str(p)


def test_family_outputs_graph6_and_json(capsys):
    code, out, _ = run(capsys, ["family", "stretcher", "1", "1", "1"])
    assert code == 0 and out.strip() == encode_graph6(odd_stretcher(1, 1, 1))
    code, out, _ = run(capsys, ["family", "antihole", "7", "--json"])
    assert json.loads(out)["n"] == 7
    code, out, _ = run(capsys, ["family", "type2", "2,2"])
    assert code == 0


def test_analyze_json(capsys, tmp_path):
    code, out, _ = run(capsys, ["analyze", g6file(tmp_path, odd_stretcher(1, 1, 1))])
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "consistent-both-false"


def test_analyze_reads_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, ["analyze", "-", "--text"], encode_graph6(antihole(7)) + "\n", monkeypatch)
    assert code == 0 and "verdict imperfect-quadratic" in out


def test_recognize(capsys, tmp_path):
    f = g6file(tmp_path, odd_stretcher(1, 1, 2))
    code, out, _ = run(capsys, ["recognize", f, "--what=stretcher"])
    assert code == 0 and json.loads(out)["found"]
    code, out, _ = run(capsys, ["recognize", f, "--what=meyniel"])
    assert json.loads(out)["result"]["meyniel"] is False


def test_color(capsys, tmp_path):
    code, out, _ = run(capsys, ["color", g6file(tmp_path, antihole(6)), "--seed", "2"])
    obj = json.loads(out)
    assert code == 0 and obj["colors"] == 3 and obj["seed"] == 2


def test_toric_commands(capsys, tmp_path):
    f = g6file(tmp_path, antihole(7))
    code, out, _ = run(capsys, ["toric", "quadgen", f, "--oracle"])
    obj = json.loads(out)
    assert code == 0 and obj["quadratically_generated"] and obj["oracle"]
    code, out, _ = run(capsys, ["toric", "gb", g6file(tmp_path, hole(6)), "--order=theorem32"])
    obj = json.loads(out)
    assert obj["quadratic"] and obj["squarefree"]
    code, _, err = run(capsys, ["toric", "gb", f, "--order=perfect-order"])
    assert code == 3 and "perfect ordering" in err


def test_input_errors_exit_3(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("!!!\n")
    assert run(capsys, ["analyze", str(bad)])[0] == 3
    assert run(capsys, ["analyze", str(tmp_path / "missing")])[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 3
    assert run(capsys, ["sweep"])[0] == 3


def test_budget_exit_2(capsys, tmp_path):
    f = g6file(tmp_path, antihole(7))
    assert run(capsys, ["toric", "quadgen", f, "--budget-gb-vars", "5"])[0] == 2


def test_sweep_with_checkpoint(capsys, tmp_path):
    ck = str(tmp_path / "ck.json")
    code, out, _ = run(capsys, ["sweep", "--n=4", "--checkpoint", ck])
    assert code == 0 and json.loads(out)["graphs"] == 10
    code, out, _ = run(capsys, ["sweep", "--resume", ck])
    assert code == 0 and json.loads(out)["graphs"] == 10
