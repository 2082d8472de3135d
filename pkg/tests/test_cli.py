import json

import pytest

from qcrystal import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def dot_vertices(out):
    return [line for line in out.splitlines()
            if line.startswith('  "') and line.endswith('";')]


def test_insert_hm_golden(capsys):
    code, out, _ = run(capsys, "insert", "--algo", "hm", "333323212")
    assert code == 0
    assert out == "P: 1 2' 2 3' 3 / 2 3' 3 / 3\nQ: 1 2 3 4 6 / 5 7 9 / 8\n"


def test_insert_kr_golden(capsys):
    code, out, _ = run(capsys, "insert", "--algo", "kr", "012013")
    assert code == 0
    assert out == "P: 2 0 1 3 / 0 1\nQ: 1 2 3 6 / 4 5\n"


def test_insert_pkr_golden(capsys):
    code, out, _ = run(capsys, "insert", "--algo", "pkr", "(+01)(-2013)")
    assert code == 0
    assert out == "P: 2 0 1 3 / 0 1\nT: 1 1 2' 2 / 2' 2\n"


def test_insert_not_reduced(capsys):
    code, out, err = run(capsys, "insert", "--algo", "kr", "00")
    assert code == 2
    assert out == ""
    assert "not reduced" in err


def test_graph_pt_24_vertices(capsys):
    code, out, _ = run(capsys, "graph", "--model", "pt",
                       "--n", "3", "--shape", "3,1")
    assert code == 0
    assert out.startswith("digraph pt3 {\n")
    assert out.endswith("}\n")
    assert len(dot_vertices(out)) == 24


def test_graph_fact_33_vertices(capsys):
    code, out, _ = run(capsys, "graph", "--model", "fact", "--perm", "3,2,-1",
                       "--m", "3", "--seed", "(+2012)()()")
    assert code == 0
    assert len(dot_vertices(out)) == 33


def test_graph_words_two_vertices(capsys):
    code, out, _ = run(capsys, "graph", "--model", "words",
                       "--n", "2", "--seed", "1")
    assert code == 0
    assert dot_vertices(out) == ['  "1";', '  "2";']


def test_graph_is_deterministic(capsys):
    _, first, _ = run(capsys, "graph", "--model", "ssdt",
                      "--n", "3", "--shape", "3,1")
    _, second, _ = run(capsys, "graph", "--model", "ssdt",
                       "--n", "3", "--shape", "3,1")
    assert first == second


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", "--model", "spt", "--m", "2",
                       "--shape", "2,1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["vertices"]) == 2


def test_graph_cap_exceeded(capsys, monkeypatch):
    monkeypatch.setenv("QCRYSTAL_MAX_VERTICES", "5")
    code, out, err = run(capsys, "graph", "--model", "pt",
                         "--n", "3", "--shape", "3,1")
    assert code == 3
    assert "cap" in err


def test_graph_missing_flags(capsys):
    code, _, err = run(capsys, "graph", "--model", "pt", "--n", "3")
    assert code == 2
    assert "--shape" in err


def test_enumerate_reduced(capsys):
    code, out, _ = run(capsys, "enumerate", "--what", "reduced",
                       "--perm", "3,2,-1")
    assert code == 0
    assert out == "0121\n0212\n2012\ncount 3\n"


def test_enumerate_reduced_identity(capsys):
    code, out, _ = run(capsys, "enumerate", "--what", "reduced",
                       "--perm", "1,2")
    assert code == 0
    assert out == "\ncount 1\n"


def test_enumerate_pt_count(capsys):
    code, out, _ = run(capsys, "enumerate", "--what", "pt",
                       "--n", "3", "--shape", "3,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "count 24"
    assert len(lines) == 25


def test_enumerate_factorizations(capsys):
    code, out, _ = run(capsys, "enumerate", "--what", "factorizations",
                       "--perm", "3,2,-1", "--m", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "count 162"
    assert "(+2012)()()" in lines


def test_verify_small_suites(capsys):
    for suite in ("axioms", "bijections", "equivalence", "highlow"):
        code, out, _ = run(capsys, "verify", "--suite", suite,
                           "--n", "2", "--max-size", "3")
        assert code == 0, suite
        report = json.loads(out)
        assert report["failures"] == []
        assert report["checked"] > 0


def test_verify_all_documented_run(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all",
                       "--n", "3", "--max-size", "5")
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == []
    assert report["suite"] == "all"


def test_verify_equiv_single_perm(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "equivalence",
                       "--perm", "3,2,-1", "--m", "3")
    assert code == 0
    assert json.loads(out)["failures"] == []


def test_verify_corrupt_negative_control(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "axioms",
                       "--n", "2", "--max-size", "2", "--corrupt")
    assert code == 1
    assert json.loads(out)["failures"]


def test_verify_corrupt_rejected_elsewhere(capsys):
    code, _, err = run(capsys, "verify", "--suite", "highlow", "--corrupt")
    assert code == 2
    assert "corrupt" in err


def test_bad_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["insert", "--algo", "nope", "1"])
    assert exc.value.code == 2


def test_bad_shape(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["enumerate", "--what", "pt", "--n", "3", "--shape", "1,3"])
    assert exc.value.code == 2
    assert "strict" in capsys.readouterr().err
