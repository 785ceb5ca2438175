import json
import os
import subprocess
import sys

import pytest

from hqd.certificates import q6_certificate
from hqd.cli import main
from hqd.io import read_certificate


def run(*args, env=None):
    return subprocess.run([sys.executable, "-m", "hqd", *args], capture_output=True, text=True, env=env)


def test_build_json(tmp_path, capsys):
    out = tmp_path / "q4.json"
    assert main(["build", "--n", "4", "--i", "3", "--out", str(out)]) == 0
    d = read_certificate(out)
    assert len(d.cycles) == 4 and all(len(c) == 8 for c in d.cycles)


def test_build_stdout_text(capsys):
    assert main(["build", "--n", "4", "--i", "2", "--format", "text"]) == 0
    assert capsys.readouterr().out.startswith("# hqd-cert-v1 n=4 cycle_length=4 cycles=8 sets=2")


@pytest.mark.parametrize("args", [["--n", "3", "--i", "2"], ["--n", "4", "--i", "5"], ["--n", "4", "--i", "1"]])
def test_build_preconditions(args, capsys):
    assert main(["build", *args]) == 2


def test_bad_flags_exit_2():
    r = run("build", "--n", "four", "--i", "2")
    assert r.returncode == 2 and "usage" in r.stderr
    assert run("frobnicate").returncode == 2


def test_build_then_verify_in_new_process(tmp_path):
    out = tmp_path / "c.json"
    assert run("build", "--n", "8", "--i", "4", "--out", str(out)).returncode == 0
    r = run("verify", str(out), "--expect-n", "8", "--expect-length", "16")
    assert r.returncode == 0 and r.stdout.strip().endswith("ok")


def test_verify_shipped_q6(tmp_cert):
    assert main(["verify", str(tmp_cert(q6_certificate()))]) == 0


def test_verify_truncated_cycle(tmp_path, tmp_cert, capsys):
    p = tmp_cert(q6_certificate())
    obj = json.loads(p.read_text())
    obj["cycles"][2]["vertices"] = obj["cycles"][2]["vertices"][:-1]
    p.write_text(json.dumps(obj))
    assert main(["verify", str(p)]) == 1
    assert "[coverage]" in capsys.readouterr().out


def test_verify_expectation(tmp_path, capsys):
    out = tmp_path / "c.json"
    main(["build", "--n", "4", "--i", "3", "--out", str(out)])
    assert main(["verify", str(out), "--expect-length", "16"]) == 1
    assert "[expectation]" in capsys.readouterr().out
    assert main(["verify", str(out), "--expect-n", "6"]) == 1


def test_verify_parse_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert main(["verify", str(bad)]) == 2
    assert main(["verify", str(tmp_path / "missing.json")]) == 2


def test_verify_binary_labels(tmp_path):
    out = tmp_path / "b.json"
    assert main(["build", "--n", "6", "--i", "5", "--labels", "binary", "--out", str(out)]) == 0
    assert main(["verify", str(out)]) == 0


def test_export_dot(tmp_cert, tmp_path):
    from hqd.certificates import q4_certificate

    dot = tmp_path / "q4.dot"
    assert main(["export-dot", str(tmp_cert(q4_certificate())), str(dot)]) == 0
    text = dot.read_text()
    assert text.count(" -- ") == 32 and text.count("[label=") == 16


def test_export_dot_empty_cycle(tmp_path):
    p = tmp_path / "e.json"
    p.write_text('{"format": "hqd-cert-v1", "n": 4, "cycle_length": 8, "cycles": [{"id": 0, "partition_set": 0, "vertices": []}]}')
    assert main(["export-dot", str(p), str(tmp_path / "e.dot")]) == 2


def test_oracle(capsys):
    assert main(["oracle", "--n", "4", "--i", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["cycle_length"] == 8
    assert main(["oracle", "--n", "3", "--i", "2"]) == 1
    assert main(["oracle", "--n", "8", "--i", "2"]) == 2


def test_hash_seed_does_not_change_output(tmp_path):
    outs = []
    for seed in ("1", "2"):
        p = tmp_path / f"c{seed}.json"
        env = dict(os.environ, PYTHONHASHSEED=seed)
        assert run("build", "--n", "6", "--i", "6", "--out", str(p), env=env).returncode == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]
