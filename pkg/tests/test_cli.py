import json

import pytest

from minla import io
from minla.cli import run


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


TWO = "p 4 4\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n"
K3 = "p 3 3\ne 1 2\ne 1 3\ne 2 3\n"
CLAW = "p 4 3\ne 1 2\ne 1 3\ne 1 4\n"


def test_solve_two_cliques(files, capsys, tmp_path):
    out = tmp_path / "arr.txt"
    assert run(["solve", files("two.txt", TWO), "--arrangement", str(out)]) == 0
    assert capsys.readouterr().out == "cost 5\n"
    a = io.parse_arrangement(out.read_text(), 4)
    assert sorted(a.as_tuple()) == [1, 2, 3, 4]


def test_check_k3_identity(files, capsys):
    assert run(["check", files("k3.txt", K3), files("id.txt", "1 1\n2 2\n3 3\n")]) == 0
    assert capsys.readouterr().out == "cost 4\n"


def test_check_rejects_non_bijection(files, capsys):
    assert run(["check", files("k3.txt", K3), files("bad.txt", "1 1\n2 1\n3 3\n")]) == 2


def test_recognize_claw(files, capsys):
    assert run(["recognize", files("claw.txt", CLAW)]) == 1
    assert capsys.readouterr().out.strip() == "NOT_PROPER_INTERVAL"


def test_solve_claw(files, capsys):
    assert run(["solve", files("claw.txt", CLAW)]) == 1


def test_recognize_two_cliques(files, capsys):
    assert run(["recognize", files("two.txt", TWO)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "PROPER_INTERVAL"
    assert lines[1].startswith("order ")
    assert [ln for ln in lines if ln.startswith("clique")] in (
        ["clique 1 3", "clique 3 4"],
        ["clique 1 2", "clique 2 4"],
    )


def test_malformed_input(files, capsys):
    assert run(["solve", files("bad.txt", "p 3 1\ne 3 1\n")]) == 2
    assert "error" in capsys.readouterr().err
    assert run(["solve", "/nonexistent/file"]) == 2


def test_oracle_too_large(files, capsys):
    assert run(["oracle", files("big.txt", "p 11 0\n")]) == 3


def test_oracle(files, capsys):
    assert run(["oracle", files("claw.txt", CLAW)]) == 0
    assert capsys.readouterr().out.splitlines() == ["cost 4", "order 2 1 3 4"]
    assert run(["oracle", files("p3.txt", "p 3 2\ne 1 2\ne 2 3\n"), "--all-optima", "--threads", "2"]) == 0
    assert capsys.readouterr().out.splitlines() == ["cost 2", "optima 2", "order 1 2 3", "order 3 2 1"]


def test_approx_json(files, capsys):
    assert run(["approx", files("p.iv", "intervals 4\n1 3\n2 5\n4 7\n6 8\n"), "--report", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report == {"n": 4, "m": 3, "cost": 3, "lower_bound_A": "11/4", "upper_bound_B": 8, "ratio": "12/11"}


def test_approx_text_edgeless(files, capsys):
    assert run(["approx", files("e.iv", "intervals 2\n1 2\n3 4\n")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "ratio none" in out and "cost 0" in out


def test_gen_roundtrip(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run(["gen", "chain", "--n", "4", "--ranges", "1-3,3-4", "-o", str(out)]) == 0
    assert run(["solve", str(out)]) == 0
    assert capsys.readouterr().out == "cost 5\n"
    assert run(["gen", "proper", "--n", "6", "--density", "1/2", "--seed", "42"]) == 0
    text = capsys.readouterr().out
    assert "c seed=42" in text
    assert io.parse_edge_list(text).n == 6
    assert run(["gen", "intervals", "--n", "5", "--span", "20", "--seed", "7"]) == 0
    assert io.parse_intervals(capsys.readouterr().out).n == 5


def test_gen_bad_range(capsys):
    assert run(["gen", "chain", "--n", "3", "--ranges", "2-5"]) == 2


def test_gen_deterministic(capsys):
    run(["gen", "intervals", "--n", "6", "--seed", "3"])
    first = capsys.readouterr().out
    run(["gen", "intervals", "--n", "6", "--seed", "3"])
    assert capsys.readouterr().out == first


def test_find_counterexample(tmp_path, capsys):
    out = tmp_path / "cx.iv"
    assert run(["find-counterexample", "--max-n", "8", "--seed", "1", "--trials", "1000", "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("c seed=")
    assert io.parse_intervals(text).n <= 8


def test_find_counterexample_not_found(capsys):
    assert run(["find-counterexample", "--max-n", "2", "--seed", "0", "--trials", "20"]) == 1
    assert capsys.readouterr().out.startswith("NOT_FOUND")


def test_bench_small(capsys):
    assert run(["bench", "--family", "chain", "--sizes", "1e2,1e3", "--repeats", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split()[:3] == ["n", "m", "recognize_s"]
    assert [int(ln.split()[0]) for ln in lines[1:]] == [100, 1000]
