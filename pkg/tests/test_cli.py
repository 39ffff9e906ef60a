import json

import pytest
from click.testing import CliRunner

from src.interfaces.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


def test_classify_odd_table(runner):
    result = invoke(runner, "classify", "odd", "--k-range", "1..8")
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "family\tn\tk\torder\tparity\tverdict\ttheorem_tag"
    assert len(lines) == 9
    unresolved = [line.split("\t")[2] for line in lines[1:] if "\tUnresolved\t" in line]
    assert unresolved == ["1", "3", "7"]
    assert lines[2] == "Odd\t5\t2\t10\teven\tNonCayley\tThm2.8"


def test_classify_kneser_single(runner):
    result = invoke(runner, "classify", "kneser", "--n", "5", "--k", "2")
    assert result.exit_code == 0
    assert result.stdout.strip().splitlines()[1] == "Kneser\t5\t2\t10\teven\tNonCayley\tThm2.1-I"


@pytest.mark.parametrize(
    "n, k, tag",
    [(5, 2, "Thm2.1-I"), (8, 2, "Thm2.1-II"), (8, 3, "None"), (7, 2, "None")],
)
def test_classify_kneser_theorem_tags(runner, n, k, tag):
    result = invoke(runner, "classify", "kneser", "--n", str(n), "--k", str(k))
    assert result.exit_code == 0
    assert result.stdout.strip().splitlines()[1].endswith("\t" + tag)


def test_classify_kneser_table(runner):
    result = invoke(runner, "classify", "kneser", "--n-max", "14")
    assert result.exit_code == 0
    assert len(result.stdout.strip().splitlines()) == 31


def test_classify_kneser_invalid_params(runner):
    result = invoke(runner, "classify", "kneser", "--n", "6", "--k", "3")
    assert result.exit_code == 1
    assert "k < n/2" in result.stderr


def test_classify_line_odd_json(runner):
    result = invoke(runner, "--format", "json", "classify", "line-odd", "--k-range", "5..6")
    assert result.exit_code == 0
    rows = json.loads(result.stdout)
    assert [row["verdict"] for row in rows] == ["Unresolved", "NonCayley"]
    assert rows[1]["theorem_tag"] == "Thm2.13"
    assert rows[1]["order"] == 6006


def test_classify_line_odd_rejects_k_below_two(runner):
    result = invoke(runner, "classify", "line-odd", "--k-range", "1..4")
    assert result.exit_code == 1


def test_witness(runner):
    result = invoke(runner, "witness", "--n", "5", "--k", "2", "--perm", "(1 2)(3 4)")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["v = {1,2}", "θ(v) = v"]


def test_witness_pair_json(runner):
    result = invoke(runner, "--format", "json", "witness", "--n", "9", "--k", "4", "--perm", "(1 2)(3 4)", "--pair")
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert (data["v"], data["w"]) == ("{1,2,3,4}", "{5,6,7,8}")
    assert data["verified"] is True


@pytest.mark.parametrize(
    "args",
    [
        ("witness", "--n", "5", "--k", "2", "--perm", "(1 6)"),
        ("witness", "--n", "5", "--k", "2", "--perm", ""),
        ("witness", "--n", "8", "--k", "3", "--perm", "(1 2)"),
        ("witness", "--n", "7", "--k", "3", "--perm", "(1 2)", "--pair"),
    ],
)
def test_witness_errors_exit_one(runner, args):
    result = invoke(runner, *args)
    assert result.exit_code == 1
    assert result.stderr.startswith("Error (")


def test_verify_involutions(runner):
    result = invoke(runner, "verify", "involutions", "--n", "7", "--k", "3")
    assert result.exit_code == 0
    header, row = result.stdout.strip().splitlines()
    values = dict(zip(header.split("\t"), row.split("\t")))
    assert values["involutions_checked"] == "231"
    assert values["verified"] == "true"
    assert values["mode"] == "Exhaustive"


def test_verify_involutions_refuses_large_exhaustive_sweep(runner):
    result = invoke(runner, "verify", "involutions", "--n", "21", "--k", "3")
    assert result.exit_code == 1
    assert "n <= 12" in result.stderr


def test_verify_involutions_sampled(runner):
    result = invoke(
        runner, "--format", "json", "verify", "involutions", "--n", "21", "--k", "3", "--sample", "40", "--seed", "9"
    )
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["involutions_checked"] == 40
    assert data["mode"] == {"kind": "Sampled", "seed": 9, "count": 40}


def test_verify_pairs_and_lifted(runner):
    assert invoke(runner, "verify", "pairs", "--n", "8", "--k", "2").exit_code == 0
    assert invoke(runner, "verify", "pairs", "--n", "7", "--k", "3").exit_code == 1
    assert invoke(runner, "verify", "lifted", "--k", "2").exit_code == 0
    assert invoke(runner, "verify", "lifted", "--k", "3").exit_code == 1


def test_verify_regular_subgroup(runner):
    result = invoke(runner, "--format", "json", "verify", "regular-subgroup", "--n", "5", "--k", "2")
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["outcome"] == "NoRegularSubgroup"
    assert data["subgroups_examined"] == 38


def test_verify_regular_subgroup_skipped(runner):
    result = invoke(runner, "verify", "regular-subgroup", "--n", "7", "--k", "2", "--max-degree", "6")
    assert result.exit_code == 0
    assert "Skipped" in result.stdout


def test_linegraph_order(runner):
    result = invoke(runner, "linegraph-order", "--k-range", "2..4", "--enumerate")
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0].endswith("\tenumerated")
    orders = [line.split("\t") for line in lines[1:]]
    assert [(row[4], row[-1]) for row in orders] == [("15", "15"), ("70", "70"), ("315", "315")]


def test_linegraph_order_respects_materialize_threshold(runner):
    result = invoke(runner, "--max-materialize", "100", "linegraph-order", "--k-range", "2..4", "--enumerate")
    assert result.exit_code == 1
    assert "resource_limit" in result.stderr


@pytest.mark.parametrize(
    "args",
    [
        ("--workers", "0", "classify", "odd", "--k-range", "1..2"),
        ("--max-exhaustive-n", "40", "classify", "odd", "--k-range", "1..2"),
        ("classify", "odd", "--k-range", "1..2", "--bogus"),
        ("classify", "odd"),
        ("nonsense",),
    ],
)
def test_usage_errors_exit_one(runner, args):
    assert invoke(runner, *args).exit_code == 1


def test_workers_flag_runs_pool(runner):
    result = invoke(runner, "--workers", "2", "verify", "involutions", "--n", "9", "--k", "2")
    assert result.exit_code == 0
    assert "\t2619\t" in result.stdout


def test_odd_table_to_twenty(runner):
    result = invoke(runner, "classify", "odd", "--k-range", "2..20")
    rows = [line.split("\t") for line in result.stdout.strip().splitlines()[1:]]
    assert [int(row[2]) for row in rows if row[5] == "Unresolved"] == [3, 7, 15]


def test_witness_rejects_non_involution(runner):
    result = invoke(runner, "witness", "--n", "5", "--k", "2", "--perm", "(1 2 3)")
    assert result.exit_code == 1
    assert "order 3" in result.stderr


def test_tsv_and_json_agree(runner):
    tsv = invoke(runner, "classify", "line-odd", "--k-range", "5..12").stdout.strip().splitlines()
    header = tsv[0].split("\t")
    tsv_rows = [dict(zip(header, line.split("\t"))) for line in tsv[1:]]
    json_rows = json.loads(invoke(runner, "--format", "json", "classify", "line-odd", "--k-range", "5..12").stdout)
    assert len(tsv_rows) == len(json_rows) == 8
    for flat, full in zip(tsv_rows, json_rows):
        assert flat == {name: str(full[name]) for name in header}
