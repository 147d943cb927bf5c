import json
import subprocess
import sys

import pytest

from liecheck.cli import main
from liecheck.models import BUILTIN_CONFIG


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,expected", [
    (("dim", "E7", "sc", "w7"), "56"), (("dim", "A1", "sc", "ω"), "2"),
    (("dim", "E7:sc", "0,0,0,0,0,0,1"), "56"), (("dim", "E8", "w8"), "248"),
    (("dim", "GL4", "amb:1,1,0,0"), "6"), (("dim", "G2", "2w1"), "27")])
def test_dim(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


def test_torsion(capsys):
    code, out, _ = run(capsys, "torsion", "E7", "sc", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[0] == "centralizer"
    labels = [l.split()[0] for l in lines[1:]]
    assert sorted(labels) == ["A7", "D6+A1", "D6+A1", "E6+T1", "E7", "E7"]


def test_branch(capsys):
    code, out, _ = run(capsys, "branch", "E7:sc", "levi:1,2,3,4,5,6", "w7")
    assert code == 0
    dims = sorted(int(l.split()[-1]) for l in out.splitlines()[2:])
    assert dims == [1, 1, 27, 27]


def test_cancel(capsys):
    code, out, _ = run(capsys, "cancel", "GU4xGU2: E,E | E,E", "--eta", "-1")
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 6
    assert all(r.split()[-1] == "0" for r in rows)


@pytest.mark.parametrize("argv", [
    ("dim", "E7", "sc", "w9"), ("dim", "Q3", "w1"), ("dim", "A2", "w1+"),
    ("torsion", "A2", "zero"), ("torsion", "A2", "0"), ("branch", "A2", "foo:1", "w1"),
    ("cancel", "GU4xGU2: S2 | E,E"), ("verify-all", "--model", "nope"), ("bogus",),
    ("verify-all", "--format", "xml")])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_verify_single_model_json(capsys):
    code, out, _ = run(capsys, "verify-all", "--model", "GL6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["fail"] == 0
    assert data["timestamp"] is None
    assert all(it["claim"].startswith("GL6:") for it in data["items"])


def test_list_models(capsys):
    code, out, _ = run(capsys, "verify-all", "--list-models")
    assert code == 0
    assert len(out.splitlines()) == 14


def test_config_file(tmp_path, capsys):
    good = tmp_path / "m.json"
    cfg = dict(BUILTIN_CONFIG[0], name="Copy")
    good.write_text(json.dumps([cfg]))
    code, out, _ = run(capsys, "verify-all", "--config", str(good), "--model", "Copy")
    assert code == 0
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify-all", "--config", str(bad))[0] == 2
    assert run(capsys, "verify-all", "--config", str(tmp_path / "missing.json"))[0] == 2


def test_failing_model_exits_one(tmp_path, capsys):
    cfg = json.loads(json.dumps(BUILTIN_CONFIG[0]))
    cfg["name"] = "Broken"
    cfg["cases"][1]["centralizer"] = "A5"
    path = tmp_path / "broken.json"
    path.write_text(json.dumps([cfg]))
    assert run(capsys, "verify-all", "--config", str(path), "--model", "Broken")[0] == 1


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.md"
    code, out, _ = run(capsys, "verify-all", "--model", "E7", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("# liecheck E7")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "liecheck.cli", "dim", "E6", "w1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.strip() == "27"
