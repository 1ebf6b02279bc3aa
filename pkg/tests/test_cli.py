import pytest

from geohull import format_labels, parse_graph
from geohull.cli import run

FIG2_TEXT = "5 6\n0 1\n1 2\n1 3\n2 3\n2 4\n3 4\n"
SAMPLE_DIMACS = "p cnf 3 3\n1 2 3 0\n1 2 3 0\n-1 -2 -3 0\n"


@pytest.fixture
def fig2_file(tmp_path):
    path = tmp_path / "fig2.g"
    path.write_text(FIG2_TEXT)
    return str(path)


@pytest.fixture
def sample_cnf_file(tmp_path):
    path = tmp_path / "sample.cnf"
    path.write_text(SAMPLE_DIMACS)
    return str(path)


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_fixture_fig2(capsys):
    code, out = invoke(capsys, "fixture", "fig2")
    assert code == 0
    assert out == FIG2_TEXT


def test_fixture_to_file(tmp_path, capsys):
    target = tmp_path / "out.g"
    code, out = invoke(capsys, "fixture", "fig2", "--out-graph", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == FIG2_TEXT


def test_interval(capsys, fig2_file):
    code, out = invoke(capsys, "interval", "--graph", fig2_file, "--set", "4,1")
    assert code == 0
    assert out == "1,2,3,4\n"


def test_hull(capsys, fig2_file):
    code, out = invoke(capsys, "hull", "--graph", fig2_file, "--set", "0,4")
    assert code == 0
    assert out == "0,1,2,3,4\n"


def test_convex_and_concave(capsys, fig2_file):
    assert invoke(capsys, "convex", "--graph", fig2_file, "--set", "2,3,4") == (0, "true\n")
    assert invoke(capsys, "convex", "--graph", fig2_file, "--set", "0,3") == (0, "false\n")
    assert invoke(capsys, "concave", "--graph", fig2_file, "--set", "1") == (0, "false\n")


def test_hullnum(capsys, fig2_file):
    code, out = invoke(capsys, "hullnum", "--graph", fig2_file)
    assert code == 0
    assert out == "h=2\nwitness=0,4\n"


def test_hullnum_oracle(capsys, fig2_file):
    code, out = invoke(capsys, "hullnum", "--graph", fig2_file, "--oracle")
    assert code == 0
    assert out == "h=2\nwitness=0,4\n"


def test_hullnum_budget_exhausted(tmp_path, capsys):
    path = tmp_path / "c4.g"
    path.write_text("4 4\n0 1\n0 3\n1 2\n2 3\n")
    code, _ = invoke(capsys, "hullnum", "--graph", str(path), "--budget", "1")
    assert code == 3


def test_simplicial(capsys, fig2_file):
    assert invoke(capsys, "simplicial", "--graph", fig2_file) == (0, "0,4\n")


def test_chordal(capsys, fig2_file):
    code, out = invoke(capsys, "chordal", "--graph", fig2_file)
    assert code == 0
    assert out == "chordal\n4 3 2 1 0\n"


def test_chordal_negative(tmp_path, capsys):
    path = tmp_path / "c4.g"
    path.write_text("4 4\n0 1\n0 3\n1 2\n2 3\n")
    code, out = invoke(capsys, "chordal", "--graph", str(path))
    assert code == 0
    assert out == "not-chordal\n"


def test_deps(capsys, fig2_file):
    code, out = invoke(capsys, "deps", "--graph", fig2_file)
    assert code == 0
    lines = out.splitlines()
    assert "{0,3} -> 1" in lines
    assert "{1,4} -> 2" in lines
    assert "{3,4} -> 2" not in lines
    assert lines == [
        "{0,2} -> 1", "{0,3} -> 1", "{0,4} -> 1", "{0,4} -> 2",
        "{0,4} -> 3", "{1,4} -> 2", "{1,4} -> 3"]


def test_reduce_round_trip(tmp_path, capsys, sample_cnf_file, sample_reduction):
    graph_out = tmp_path / "red.g"
    labels_out = tmp_path / "red.labels"
    code, out = invoke(capsys, "reduce", "--cnf", sample_cnf_file,
                       "--out-graph", str(graph_out),
                       "--out-labels", str(labels_out))
    assert code == 0
    assert out == "vertices=39 edges=144 k=12\n"
    assert parse_graph(graph_out.read_text()) == sample_reduction.graph
    assert labels_out.read_text() == format_labels(sample_reduction)


def test_verify_reduction(capsys, sample_cnf_file):
    code, out = invoke(capsys, "verify-reduction", "--cnf", sample_cnf_file)
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for line in lines if line.startswith("PASS")) == 8
    assert not any(line.startswith("FAIL") for line in lines)
    assert any(line.startswith("NOTE") for line in lines)


def test_equiv(capsys, sample_cnf_file):
    code, out = invoke(capsys, "equiv", "--cnf", sample_cnf_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "satisfiable=true"
    assert lines[1] == "h=12"
    assert lines[2] == "k=12"
    assert all(line.startswith("PASS") for line in lines[3:])


def test_gen_cnf_deterministic(capsys):
    first = invoke(capsys, "gen-cnf", "--n", "4", "--seed", "7")
    second = invoke(capsys, "gen-cnf", "--n", "4", "--seed", "7")
    assert first == second
    assert first[0] == 0
    assert first[1].startswith("p cnf 4 ")


def test_outputs_are_stable(capsys, fig2_file):
    for argv in (["hullnum", "--graph", fig2_file],
                 ["deps", "--graph", fig2_file],
                 ["chordal", "--graph", fig2_file]):
        assert invoke(capsys, *argv) == invoke(capsys, *argv)


# -- error handling ------------------------------------------------------------

def test_missing_file_is_input_error(capsys):
    code, _ = invoke(capsys, "hull", "--graph", "/no/such/file", "--set", "0")
    assert code == 2


def test_malformed_graph_is_input_error(tmp_path, capsys):
    path = tmp_path / "bad.g"
    path.write_text("not a graph\n")
    code, _ = invoke(capsys, "simplicial", "--graph", str(path))
    assert code == 2


def test_bad_set_is_input_error(capsys, fig2_file):
    code, _ = invoke(capsys, "hull", "--graph", fig2_file, "--set", "0,x")
    assert code == 2


def test_disconnected_is_precondition_error(tmp_path, capsys):
    path = tmp_path / "disc.g"
    path.write_text("4 2\n0 1\n2 3\n")
    code, _ = invoke(capsys, "hull", "--graph", str(path), "--set", "0")
    assert code == 3


def test_out_of_range_set_is_precondition_error(capsys, fig2_file):
    code, _ = invoke(capsys, "hull", "--graph", fig2_file, "--set", "0,9")
    assert code == 3


def test_invalid_cnf_is_precondition_error(tmp_path, capsys):
    path = tmp_path / "bad.cnf"
    path.write_text("p cnf 1 2\n1 0\n-1 0\n")
    code, _ = invoke(capsys, "verify-reduction", "--cnf", str(path))
    assert code == 3


def test_failing_check_exits_one(tmp_path, capsys, monkeypatch):
    import geohull.cli as cli_module
    from geohull.reduction import CheckResult, StructureReport

    path = tmp_path / "sample.cnf"
    path.write_text(SAMPLE_DIMACS)
    monkeypatch.setattr(
        cli_module, "verify_structure",
        lambda rg: StructureReport(
            (CheckResult("order", False, "forced failure"),), ()))
    code, out = invoke(capsys, "verify-reduction", "--cnf", str(path))
    assert code == 1
    assert out.startswith("FAIL order")
