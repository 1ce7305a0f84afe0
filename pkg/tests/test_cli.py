import json

import pytest

from glhom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_count_json(capsys):
    code, out = run(capsys, "count", "--p", "2", "--factors", "1", "--q", "3", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == "14" and data["vp"] == 1


def test_count_brute_agrees(capsys):
    _, a = run(capsys, "--format", "json", "count", "--p", "2", "--factors", "1,1", "--q", "3", "--n", "2")
    _, b = run(capsys, "--format", "json", "count", "--p", "2", "--factors", "1,1", "--q", "3", "--n", "2", "--method", "brute")
    assert json.loads(a)["count"] == json.loads(b)["count"]


def test_count_modular_dispatch(capsys):
    code, out = run(capsys, "count", "--p", "2", "--factors", "1", "--q", "2", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == "22"


def test_bound_table(capsys):
    code, out = run(capsys, "bound", "--p", "2", "--factors", "1", "--q", "5", "--n-max", "8", "--compare")
    assert code == 0
    assert "main3" in out


def test_modular_commands(capsys):
    code, out = run(capsys, "modular", "poly", "--n", "3", "--k", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["poly"]
    code, out = run(capsys, "modular", "count", "--p", "2", "--u", "1", "--v", "1", "--n", "3", "--method", "brute", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == "22"
    code, out = run(capsys, "modular", "bound", "--n-max", "6", "--k", "2")
    assert code == 0


@pytest.mark.parametrize("family", ["catalan", "P", "R", "Q", "cyclotomic"])
def test_poly_families(capsys, family):
    code, out = run(capsys, "poly", "--family", family, "--n", "4")
    assert code == 0 and out.strip()


@pytest.mark.parametrize("name,extra", [("f", ["--q", "3"]), ("h", ["--q", "3"]), ("g", []), ("F", ["--p", "2", "--factors", "1", "--q", "3"])])
def test_series(capsys, name, extra):
    code, out = run(capsys, "series", "--name", name, "--trunc", "5", *extra)
    assert code == 0
    assert out.count("[z^") == 6


def test_verify_is_deterministic(capsys):
    argv = ("verify", "--suite", "exp-pdiv", "--cases", "10", "--seed", "4", "--format", "json")
    code1, a = run(capsys, *argv)
    code2, b = run(capsys, *argv, "--jobs", "2")
    assert code1 == code2 == 0
    assert json.loads(a)["cases"] == json.loads(b)["cases"]


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--p", "4", "--factors", "1", "--q", "3", "--n", "2"],
        ["count", "--p", "2", "--factors", "x", "--q", "3", "--n", "2"],
        ["verify", "--suite", "nope"],
        ["poly", "--family", "zzz", "--n", "2"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_failed_case_exits_1(capsys, monkeypatch):
    import glhom.suites as suites

    real = suites.run_suite

    def broken(*args, **kwargs):
        rep = real(*args, **kwargs)
        rep.cases[0].passed = False
        return rep

    monkeypatch.setattr(suites, "run_suite", broken)
    code, out = run(capsys, "verify", "--suite", "qn")
    assert code == 1
    assert "FAIL #0" in out
