import json

import pytest
from click.testing import CliRunner

from main import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def lcs_fasta(tmp_path):
    path = tmp_path / "lcs.fasta"
    path.write_text(">s1\nACGT\n>s2\nCGGT\n>s3\nCGTC\n", encoding="utf-8")
    return str(path)


@pytest.fixture
def scs_fasta(tmp_path):
    path = tmp_path / "scs.fasta"
    path.write_text(">s1\nACGT\n>s2\nCGGT\n>s3\nCTGC\n", encoding="utf-8")
    return str(path)


def test_gen_is_deterministic(runner):
    first = runner.invoke(cli, ["gen", "--n", "10", "--k", "100", "--seed", "1"])
    second = runner.invoke(cli, ["gen", "--n", "10", "--k", "100", "--seed", "1"])
    assert first.exit_code == 0
    assert first.output == second.output
    assert first.output.startswith(">seq1\n")
    assert first.output.count(">") == 10


def test_gen_reads_seed_from_environment(runner):
    by_flag = runner.invoke(cli, ["gen", "--n", "2", "--k", "8", "--seed", "5"])
    by_env = runner.invoke(cli, ["gen", "--n", "2", "--k", "8"], env={"PALS_SEED": "5"})
    assert by_flag.output == by_env.output


def test_gen_replicates(runner, tmp_path):
    result = runner.invoke(cli, ["gen", "--n", "2", "--k", "5", "--replicates", "3", \
        "--out", str(tmp_path / "data")])
    assert result.exit_code == 0
    assert sorted(path.name for path in (tmp_path / "data").iterdir()) == \
        ["1.fasta", "2.fasta", "3.fasta"]
    assert runner.invoke(cli, ["gen", "--replicates", "2"]).exit_code == 1


def test_pals_json(runner, lcs_fasta):
    result = runner.invoke(cli, ["pals", lcs_fasta, "--base", "lcs", "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    report = data["pattern_reports"][0]
    assert report["patterns"] == ["*CG*"]
    assert report["sensitivity"] == 1.0
    assert report["algorithm"] == "PALS-LCS"


def test_pals_report_is_byte_identical(runner, lcs_fasta):
    first = runner.invoke(cli, ["pals", lcs_fasta, "--base", "scs"])
    second = runner.invoke(cli, ["pals", lcs_fasta, "--base", "scs"])
    assert first.output == second.output


def test_pals_star_tsv_to_file(runner, lcs_fasta, tmp_path):
    out = tmp_path / "report.tsv"
    result = runner.invoke(cli, ["pals-star", lcs_fasta, "--min-sensitivity", "0.66", \
        "--format", "tsv", "--out", str(out)])
    assert result.exit_code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("base\tn\tk\tpatterns")


@pytest.mark.parametrize("args", [
    ["lcs", "--candidates", "2"],
    ["scs", "--algo", "sh"],
    ["scs"],
    ["transform", "--from", "lcs"],
    ["refine", "--rounds", "2"],
    ["compare", "--known", "*CGT*"],
])
def test_verbs_succeed(runner, scs_fasta, args):
    result = runner.invoke(cli, args[:1] + [scs_fasta] + args[1:])
    assert result.exit_code == 0, result.output


def test_transform_from_scs(runner, scs_fasta, tmp_path):
    out = tmp_path / "transform.json"
    result = runner.invoke(cli, ["transform", scs_fasta, "--from", "scs", "--out", str(out)])
    assert result.exit_code == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert [item["algorithm"] for item in data["heuristic_results"]] == ["depredn", "transform"]


def test_eval(runner):
    result = runner.invoke(cli, ["eval", "--max-len", "5", "--instances", "5", "--format", "tsv"])
    assert result.exit_code == 0
    assert "PASS" in result.output
    assert "FAIL" not in result.output


def test_eval_refuses_long_inputs(runner):
    result = runner.invoke(cli, ["eval", "--max-len", "13"])
    assert result.exit_code == 1
    assert "oracle limit" in result.output


def test_errors_exit_nonzero(runner, tmp_path):
    assert runner.invoke(cli, ["pals", str(tmp_path / "missing.fasta")]).exit_code == 1
    bad = tmp_path / "bad.fasta"
    bad.write_text(">a\nACXT\n", encoding="utf-8")
    result = runner.invoke(cli, ["pals", str(bad), "--alphabet", "dna"])
    assert result.exit_code == 1
    assert "line 2" in result.output
    assert runner.invoke(cli, ["unknown"]).exit_code == 2
    assert runner.invoke(cli, ["pals", str(bad), "--no-such-flag"]).exit_code == 2


def test_bench(runner):
    result = runner.invoke(cli, ["bench", "--settings", "3,5", "--k", "12", "--replicates", "2", \
        "--process", "1"])
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert [point["setting"] for point in data["points"]] == [3.0, 5.0]
    assert data["verdicts"]["full-sensitivity"] == "PASS"
