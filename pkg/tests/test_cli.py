import io
import json

import pytest

import horn_cli
from horn_cli import EXIT_INTERNAL, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def invoke_json(*argv):
    code, text = invoke(*argv)
    return code, json.loads(text)


def test_horn_check_reports_the_failing_inequality():
    code, data = invoke_json("horn", "check", "--n", "4", "--tuple", "[[1,4],[2,3]]")
    assert code == EXIT_NEGATIVE
    assert data["member"] is False
    assert data["violation"] == {"kind": "horn inequality", "d": 1, "J": [[1], [2]], "edim_of_composition": -1}


def test_horn_check_member():
    code, data = invoke_json("horn", "check", "--n", "6", "--tuple", "{\"n\": 6, \"parts\": [[2,4,6],[2,4,6],[2,4,6]]}")
    assert code == EXIT_OK
    assert data["member"] is True
    assert data["edim"] == 0


def test_horn_enumerate_csv():
    code, text = invoke("horn", "enumerate", "--r", "1", "--n", "2", "--s", "2", "--format", "csv")
    assert code == EXIT_OK
    assert text.splitlines() == ["n,J_1,J_2,edim", "2,{1},{2},0", "2,{2},{1},0", "2,{2},{2},1"]


def test_global_flags_before_the_subcommand():
    code, text = invoke("--format", "text", "horn", "enumerate", "--r", "1", "--n", "2", "--s", "2", "--classes")
    assert code == EXIT_OK
    assert text.startswith("Horn(1,2,2) up to permutations")


def test_horn0():
    code, data = invoke_json("horn0", "--d", "1", "--r", "2", "--s", "3")
    assert code == EXIT_OK
    assert len(data["tuples"]) == 3


def test_intersect_certify_is_deterministic():
    argv = ("--seed", "7", "intersect", "certify", "--n", "4", "--tuple", "[[1,4],[2,4]]")
    code, first = invoke(*argv)
    assert code == EXIT_OK
    assert json.loads(first)["kind"] == "IntersectingCertified"
    assert invoke(*argv) == (code, first)


def test_intersect_crossval():
    code, data = invoke_json("intersect", "crossval", "--r", "1", "--n", "3", "--s", "3")
    assert code == EXIT_OK
    assert data["r"] == 1


def test_kirwan_commands():
    code, data = invoke_json("kirwan", "ineqs", "--r", "2", "--s", "3")
    assert code == EXIT_OK
    assert data["count"] == 3
    code, data = invoke_json("kirwan", "check", "--xi", "[[1,-1],[\"1/2\",\"-1/2\"],[\"1/2\",\"-1/2\"]]")
    assert code == EXIT_OK
    assert data["member"] is True


@pytest.mark.parametrize("lambdas, expected", [
    ("[[1,-1],[1,-1],[1,-1]]", EXIT_OK),
    ("[[2,-2],[0,0],[0,0]]", EXIT_NEGATIVE),
])
def test_lr_nonzero(lambdas, expected):
    code, data = invoke_json("lr", "nonzero", "--lambda", lambdas)
    assert code == expected
    assert data["nonvanishing"] is (expected == EXIT_OK)


def test_pos_compute(tmp_path):
    flag = tmp_path / "flag.json"
    flag.write_text(json.dumps({"field": "rational", "matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}))
    subspace = tmp_path / "subspace.json"
    subspace.write_text(json.dumps({"field": "rational", "matrix": [[0], [1], [1]]}))
    code, data = invoke_json("pos", "compute", "--flag", str(flag), "--subspace", str(subspace))
    assert code == EXIT_OK
    assert data["position"] == [3]
    assert data["position_by_rank"] == [3]


def test_cell_sample_and_degenerate():
    code, data = invoke_json("cell", "sample", "--n", "5", "--subset", "[2,4]")
    assert code == EXIT_OK
    assert data["position"] == [2, 4]
    code, data = invoke_json("pos", "degenerate", "--n", "5", "--subset", "[2,4]")
    assert code == EXIT_OK
    assert all(item["below"] is not False for item in data["degenerations"])


def test_hn_search():
    code, data = invoke_json("hn", "search", "--r", "2", "--s", "3", "--q", "2", "--trials", "2")
    assert code == EXIT_OK
    assert len(data["trials"]) == 2


def test_delta_eval():
    code, data = invoke_json("delta", "eval", "--n", "4", "--tuple", "[[1,4],[2,3]]", "--trials", "2")
    assert code == EXIT_OK
    assert [sample["delta"] for sample in data["samples"]] == ["0", "0"]


def test_variational_demo():
    code, data = invoke_json("variational", "demo", "--r", "4", "--J", "[2,4]", "--count", "2", "--trials", "5")
    assert code == EXIT_OK
    assert data["passed"] is True
    assert len(data["runs"]) == 2


def test_tables_and_fixtures():
    code, data = invoke_json("tables", "appendix-a")
    assert code == EXIT_OK
    assert all(table["matches_fixture"] for table in data["tables"])
    code, tex = invoke("--format", "tex", "tables", "appendix-b")
    assert code == EXIT_OK
    assert "\\begin{tabular}" in tex
    code, data = invoke_json("fixtures", "two-point")
    assert code == EXIT_OK
    assert data["all_at_target"] is True


@pytest.mark.parametrize("argv", [
    ["kirwan", "ineqs", "--r", "2", "--s", "3"],
    ["--seed", "3", "--samples", "2", "intersect", "crossval", "--r", "1", "--n", "2", "--s", "2"],
    ["horn0", "--s", "3", "--d", "1", "--r", "2", "--seed", "5"],
])
def test_component_count_flag_is_not_taken_for_a_global_one(argv):
    code, text = invoke(*argv)
    assert code == EXIT_OK
    assert json.loads(text)["s"] in (2, 3)


def test_unexpected_failure_exits_internal(monkeypatch):
    def broken(*args, **kwargs):
        raise TypeError("broken")

    monkeypatch.setattr(horn_cli, "horn_member", broken)
    code, text = invoke("horn", "check", "--n", "4", "--tuple", "[[1,4],[2,3]]")
    assert code == EXIT_INTERNAL
    assert text == ""


@pytest.mark.parametrize("argv", [
    ["hn", "search", "--r", "0", "--s", "1"],
    ["horn", "check", "--n", "4", "--tuple", "[[1,4],[2,3]"],
    ["horn", "check", "--n", "4", "--tuple", "[[1,5],[2,3]]"],
    ["--prime", "15", "tables", "appendix-a"],
    ["horn", "enumerate", "--r", "3", "--n", "2", "--s", "2"],
    ["pos", "compute", "--flag", "/nonexistent/flag.json", "--subspace", "/nonexistent/s.json"],
    ["horn"],
    ["nonsense"],
])
def test_usage_errors(argv):
    code, text = invoke(*argv)
    assert code == EXIT_USAGE
    assert text == ""
