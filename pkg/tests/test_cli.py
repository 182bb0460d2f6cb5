import json

import pytest

from kncactus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tab_check_valid(capsys):
    code, out, _ = run(capsys, "tab", "check", "1,2/-2", "--n", "2")
    assert code == 0
    assert out.strip() == "KN"


def test_tab_check_not_kn_exits_one(capsys):
    code, out, _ = run(capsys, "tab", "check", "2,2/-2,-2", "--n", "2")
    assert code == 1
    assert "not KN: split not semi-standard" in out


def test_parse_error_exits_two(capsys):
    code, _, err = run(capsys, "tab", "check", "1,q", "--n", "2")
    assert code == 2
    assert "row 1, col 2" in err


def test_usage_error_exits_two(capsys):
    code, _, _ = run(capsys, "inv", "bk", "1", "--n", "2")
    assert code == 2


def test_reversal_json(capsys):
    code, out, _ = run(capsys, "inv", "reversal", ".,2,-2,-1/-2,-2,-1/-1", "--n", "3", "--json")
    assert code == 0
    assert json.loads(out)["result"] == ".,1,1,2/1,2,2/-2"


def test_reversal_trace_shows_snapshots(capsys):
    code, out, _ = run(capsys, "inv", "reversal", ".,2,-2,-1/-2,-2,-1/-1", "--n", "3", "--trace")
    assert code == 0
    assert "start" in out and "evacuated" in out


def test_op_apply_undefined_prints_zero(capsys):
    assert run(capsys, "op", "apply", "f1,f2", "1", "--n", "2")[:2] == (0, "-2\n")
    assert run(capsys, "op", "apply", "f1,f1", "1", "--n", "2")[:2] == (0, "0\n")


def test_virt_round_trip(capsys):
    code, out, _ = run(capsys, "virt", "embed", "2/-2", "--n", "2")
    assert code == 0
    p = out.strip()
    code, out, _ = run(capsys, "virt", "invert", p, "--n", "2")
    assert (code, out.strip()) == (0, "2/-2")


def test_crystal_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "crystal", "build", "2,1", "--n", "2")
    assert code == 0 and out.startswith("16 vertices")
    target = tmp_path / "g.dot"
    assert run(capsys, "crystal", "dot", "2,1", "--n", "2", "--out", str(target))[0] == 0
    assert target.read_text().count("->") == 18


def test_verify_and_fixtures(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "jsp", "--rank", "2", "--max-cells", "3")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "fixture", "run", "bk-c2")
    assert code == 0 and "PASS bk-c2" in out


@pytest.mark.parametrize("argv", [["word", "knuth", "1 2 -1", "--n", "2"], ["tab", "split", "2/-2", "--n", "2"]])
def test_misc_commands_succeed(capsys, argv):
    assert run(capsys, *argv)[0] == 0
