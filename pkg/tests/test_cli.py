import pytest

from majdom.cli import main
from majdom.solver import is_mods
from majdom.io import load_instance
from majdom.structured import load


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_table(capsys):
    code, out, _ = run(capsys, "solve", "dipath:8")
    assert code == 0
    assert "value     2" in out and "witness   {0, 2}" in out


def test_solve_structured_roundtrip(capsys):
    code, out, _ = run(capsys, "solve", "--format", "structured", "randdigraph:9,0.3,4")
    data = load(out)
    D = load_instance("randdigraph:9,0.3,4")
    assert code == 0 and data["command"] == "solve"
    assert is_mods(D, data["witness"]) and len(data["witness"]) == data["value"]


def test_solve_variants(capsys):
    assert load(run(capsys, "solve", "--format", "structured", "figure1:3")[1])["value"] == 3
    assert load(run(capsys, "solve", "--format", "structured", "--undirected", "star:9")[1])["value"] == 1
    assert load(run(capsys, "solve", "--format", "structured", "--full", "dipath:8")[1])["value"] == 4
    data = load(run(capsys, "solve", "--format", "structured", "--method", "oracle", "dicycle:7")[1])
    assert (data["value"], data["method"]) == (2, "oracle")


def test_structured_output_is_stable(capsys):
    a = run(capsys, "bounds", "--format", "structured", "dicycle:8")[1]
    b = run(capsys, "bounds", "--format", "structured", "dicycle:8")[1]
    assert a == b
    data = load(a)
    assert data["bound.longest_cycle.tight"] is True


def test_bounds_acyclic(capsys):
    data = load(run(capsys, "bounds", "--format", "structured", "empty:5")[1])
    assert data["bound.longest_cycle.applicable"] is False
    assert data["bound.longest_cycle.note"] == "acyclic"


def test_perturb_single(capsys):
    data = load(run(capsys, "perturb", "--format", "structured", "--remove-vertex", "0", "dicycle:4")[1])
    assert [data[f"record.0.{k}"] for k in ("before", "after", "bound_low", "bound_high", "within_bounds")] == [1, 1, 0, 1, True]


def test_perturb_all(capsys):
    data = load(run(capsys, "perturb", "--format", "structured", "dipath:4")[1])
    assert data["records"] == 19


def test_critical(capsys, tmp_path):
    p = tmp_path / "star.txt"
    p.write_text("digraph 5 2\n0 1\n0 2\n")
    data = load(run(capsys, "critical", "--format", "structured", str(p))[1])
    assert data["critical"] == [(0, 1), (0, 2)]
    assert data["arc.0.agree"] and data["arc.1.agree"]
    data = load(run(capsys, "critical", "--format", "structured", "dipath:4")[1])
    assert data["critical"] == []


def test_minimal(capsys):
    data = load(run(capsys, "minimal", "enumerate", "--format", "structured", "dipath:4")[1])
    assert data["count"] == 3 and data["set.2"] == [2]
    data = load(run(capsys, "minimal", "check", "--format", "structured", "--set", "0,1", "dipath:5")[1])
    assert data["minimal_direct"] is True and data["minimal_characterized"] is False
    assert data["minimal_by_loss"] is True


def test_orient(capsys):
    data = load(run(capsys, "orient", "--format", "structured", "--realize", "cycle:5")[1])
    assert (data["dom"], data["DOM"], data["orientations"]) == (1, 2, 32)
    assert data["histogram.1"] + data["histogram.2"] == 32
    assert data["realized.value"] == len(data["realized.set"])


def test_conjecture_and_dom1(capsys):
    data = load(run(capsys, "conjecture", "--format", "structured", "2", "8")[1])
    assert (data["case.2.8.computed"], data["case.2.8.conjectured"]) == (3, 3)
    data = load(run(capsys, "dom1", "--format", "structured", "3", "3")[1])
    assert data["computed"] == 1 and data["agrees"]


def test_gen(capsys, tmp_path):
    target = tmp_path / "c.txt"
    assert run(capsys, "gen", "dicycle:3", "-o", str(target))[0] == 0
    assert target.read_text() == "digraph 3 3\n0 1\n1 2\n2 0\n"
    assert run(capsys, "solve", str(target))[0] == 0


def test_suite_exit_code(capsys):
    code, out, _ = run(capsys, "suite", "--random", "10", "--max-n", "6", "--orient-max-edges", "6")
    assert code == 3
    assert "minimal_characterization" in out
    code, _, _ = run(capsys, "suite", "--families", "distar", "--random", "0", "--max-n", "6", "--orient-max-edges", "6")
    assert code == 0


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "solve", "nosuch:3")[0] == 1
    assert run(capsys, "solve", "--undirected", "dipath:3")[0] == 1
    assert run(capsys, "minimal", "check", "dipath:3")[0] == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("digraph 3 2\n0 1\n1 x\n")
    code, _, err = run(capsys, "solve", str(bad))
    assert code == 1 and "line 3" in err
    with pytest.raises(SystemExit) as exc:
        main(["solve"])
    assert exc.value.code == 1


def test_limit_errors(capsys):
    assert run(capsys, "bounds", "dipath:25")[0] == 2
    assert run(capsys, "orient", "complete:8")[0] == 2
    assert run(capsys, "solve", "--method", "oracle", "--limit-n", "10", "dipath:12")[0] == 2
