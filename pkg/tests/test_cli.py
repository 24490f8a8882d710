import json
import subprocess
import sys

import pytest

from schubert_toric.cli import main, resolve_w, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--n", "3", "--json", "--jobs", "1")
    assert code == 0
    body = json.loads(out)
    assert body["results"]["covered_count"] == 20
    assert {w for _, w in body["results"]["exceptions"]} == {
        "s1*s3*s2", "s2*s1*s3", "s2*s1*s3*s2", "s1*s2*s3*s2*s1"}


@pytest.mark.parametrize("n", ["1", "2"])
def test_classify_small(capsys, n):
    code, out, _ = run(capsys, "classify", "--n", n, "--json")
    assert code == 0 and json.loads(out)["results"]["exceptions"] == []


def test_classify_cap(capsys):
    code, _, err = run(capsys, "classify", "--n", "9")
    assert code == 2 and "cap" in err


def test_verify_longest_all_checks(capsys):
    code, out, _ = run(capsys, "verify", "--w", "s1*s2*s1=3,2,1", "--json", "--jobs", "1")
    body = json.loads(out)
    assert code == 0 and body["passed"]
    assert sorted(body["checks"]) == sorted(
        ["lattice", "weights", "multiset", "redexp", "straighten", "pairbasis", "hilbert"])


def test_verify_identity(capsys):
    code, out, _ = run(capsys, "verify", "--w", "1,2,3,4", "--checks", "lattice,hilbert",
                       "--degrees", "1,1,1;0,2,0")
    assert code == 0 and "PASS" in out


def test_verify_not_covered(capsys):
    code, _, err = run(capsys, "verify", "--w", "s2*s1*s3*s2", "--n", "3")
    assert code == 2
    assert "not covered" in err and "non-transitivity witness" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--w", "s2*s1"],
    ["verify", "--w", "s2*s1=2,3,1"],
    ["verify", "--w", "3,1,2", "--checks", "bogus"],
    ["verify", "--w", "3,1,2", "--degrees", "1"],
    ["verify", "--w", "3,1,2", "--n", "3"],
    ["export", "ideal", "--w", "3,2,1", "--format", "dot"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_unknown_target_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["export", "polytope", "--w", "3,2,1"])
    assert exc.value.code == 2


def test_resolve_w_cross_validation():
    assert resolve_w("s2*s1=3,1,2", None).one_line == (3, 1, 2)
    assert resolve_w("s2*s1", 2).one_line == (3, 1, 2)
    with pytest.raises(UsageError):
        resolve_w("s1*s2=3,1,2", None)


def test_exports(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "ideal", "--w", "3,2,1", "--format", "m2")
    assert code == 0 and out.count(" - ") == 1
    code, out, _ = run(capsys, "export", "hasse", "--w", "3,2,1")
    assert out.count("label=") == 6
    target = tmp_path / "rel.json"
    code, _, _ = run(capsys, "export", "relations", "--w", "3,2,1", "--format", "json", "--out", str(target))
    assert code == 0 and len(json.loads(target.read_text())["relations"]) == 1
    assert target.read_bytes().endswith(b"}\n")


def test_failure_exit_code(capsys, monkeypatch):
    from schubert_toric import cli
    from schubert_toric.weights import Report

    def broken(w):
        rep = Report("weights", str(w), checked=1)
        rep.failures.append({"reason": "injected"})
        return rep

    monkeypatch.setattr(cli, "verify_weight_additivity", broken)
    code, out, _ = run(capsys, "verify", "--w", "3,2,1", "--checks", "weights")
    assert code == 1 and "FAIL" in out and "injected" in out


def test_stdout_is_byte_identical_across_runs_and_jobs():
    cmd = [sys.executable, "-m", "schubert_toric.cli", "verify", "--w", "4,3,2,1", "--checks",
           "hilbert,straighten", "--json"]
    a = subprocess.run(cmd + ["--jobs", "1"], capture_output=True, check=True).stdout
    b = subprocess.run(cmd + ["--jobs", "2"], capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"\n")
