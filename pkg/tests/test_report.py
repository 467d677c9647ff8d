import json

from heuristic.algorithm import Base
from heuristic.lcs import heuristic_lcs
from pals.pipeline import pals_lcs
from pals.star import pals_star
from program import PROGRAM_NAME, VERSION
from report.run_report import TSV_PATTERN_HEADER, RunReport
from metrics.score import ls_score, sensitivity


def _report(d, timings=False):
    report = RunReport.for_dataset(d, seed=0, timings=timings)
    report.pattern_reports = [pals_lcs(d), pals_star(d, Base.SCS)]
    report.heuristic_results = [heuristic_lcs(d)]
    report.extra["note"] = {"rounds": 1}
    return report


def test_json_round_trip(lcs_example):
    report = _report(lcs_example, timings=True)
    restored = RunReport.from_json(report.to_json())
    assert restored.to_json() == report.to_json()
    assert restored.pattern_reports[0].pattern_strings == ["*CG*"]


def test_json_is_reproducible(lcs_example):
    first = _report(lcs_example).to_json()
    second = _report(lcs_example).to_json()
    assert first == second
    data = json.loads(first)
    assert data["program"] == PROGRAM_NAME
    assert data["version"] == VERSION
    assert data["dataset_digest"] == lcs_example.digest()
    assert "timings" not in data["pattern_reports"][0]


def test_values_are_recomputable(lcs_example):
    data = json.loads(_report(lcs_example).to_json())
    for item in data["pattern_reports"]:
        assert item["sensitivity"] == sensitivity(lcs_example, item["patterns"])
        assert item["ls"] == ls_score(lcs_example, item["patterns"])


def test_tsv_columns(lcs_example):
    lines = _report(lcs_example).to_tsv().splitlines()
    assert lines[0].split("\t") == TSV_PATTERN_HEADER
    assert lines[1].split("\t")[:4] == ["lcs", "3", "4", "*CG*"]
    assert lines[1].split("\t")[-1] == "-"
    assert lines[3].split("\t") == ["algorithm", "length", "value", "time"]
    assert lines[4].split("\t")[:3] == ["depextn", "3", "CGT"]


def test_render_selects_format(lcs_example):
    report = _report(lcs_example)
    assert report.render("tsv") == report.to_tsv()
    assert report.render("json") == report.to_json()
