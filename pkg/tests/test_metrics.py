import math

import pytest

from metrics.consensus import compare_consensus, shared_fragment
from metrics.language_model import LanguageModel, language_size_estimate, log10_language_size
from metrics.maximality import check_one_step_maximal, specializations
from metrics.score import PatternReport, build_pattern_report, covered_indice, ls_score, \
    sensitivity, support
from sequence.alphabet import Alphabet
from sequence.dataset import Dataset
from sequence.pattern import as_pattern


def test_sensitivity_and_support(lcs_example, scs_example):
    assert sensitivity(lcs_example, ["*CG*T*"]) == 1.0
    assert sensitivity(scs_example, ["*CG*T*"]) == pytest.approx(2 / 3)
    assert covered_indice(scs_example, ["*CG*T*"]) == [0, 1]
    assert support(scs_example, "*C*G*") == 3
    assert sensitivity(lcs_example, []) == 0.0


def test_ls_examples(lcs_example):
    assert ls_score(lcs_example, ["*CG*T*"]) == pytest.approx(-math.log10(0.75))
    d = Dataset.from_strings(["AA"], Alphabet("AB"))
    assert ls_score(d, ["*"]) == pytest.approx(math.log10(4))
    assert math.isinf(ls_score(lcs_example, ["TTTT"]))


def test_ls_sums_language_sizes(lcs_example):
    value = ls_score(lcs_example, ["*CG*", "*GT*"])
    assert value == pytest.approx(math.log10(16 + 16) - math.log10(3))


def test_language_model():
    model = LanguageModel(4, 7)
    assert language_size_estimate("*AC*T*", model) == pytest.approx(256)
    assert log10_language_size("*AC*T*", model) == pytest.approx(4 * math.log10(4))
    assert model.for_pattern("*AC*T*").substitution_length == pytest.approx(4 / 3)
    assert log10_language_size("ACGTACGT", model) == 0.0
    assert math.isinf(language_size_estimate("*", LanguageModel(20, 1e6)))


def test_specializations_are_more_specific():
    candidates = {pattern.render() for pattern in specializations("*A*", "AB")}
    assert {"A*", "*A", "*AA*", "*BA*", "*AB*", "*A*A*", "BA*"} <= candidates
    assert "*A*" not in candidates
    interior = {pattern.render() for pattern in \
        specializations("*A*", "AB", replace_boundary=False)}
    assert "BA*" not in interior
    assert "*BA*" in interior


def test_one_step_maximal(scs_example):
    assert not check_one_step_maximal(Dataset.from_strings(["AA"]), "*")
    assert check_one_step_maximal(scs_example, "*C*G*")


def test_report_round_trip(lcs_example):
    report = build_pattern_report(lcs_example, [as_pattern("*CG*T*")], "PALS-LCS", "lcs", \
        "CGT", {"heuristic": 0.5})
    assert report.support == 3
    assert report.elapsed == pytest.approx(0.5)
    restored = PatternReport.from_dict(report.to_dict(timings=True))
    assert restored == report
    assert "timings" not in report.to_dict()


def test_report_encodes_infinite_ls(lcs_example):
    report = build_pattern_report(lcs_example, [as_pattern("TTTT")], "PALS-LCS")
    assert report.to_dict()["ls"] == "inf"
    assert math.isinf(PatternReport.from_dict(report.to_dict()).ls)


def test_shared_fragment():
    assert shared_fragment("*TATA*", "*GTATC*") == "TAT"
    assert shared_fragment("*A*", "*C*") == ""


def test_compare_consensus(lcs_example):
    comparisons = compare_consensus(lcs_example, ["*CG*T*"], ["*CGT*", "*CG*"])
    assert [item.known.render() for item in comparisons] == ["*CGT*", "*CG*"]
    assert comparisons[0].sensitivity == pytest.approx(2 / 3)
    assert comparisons[0].fragments == ["CG"]
    assert comparisons[0].contains_known == [True]
    assert comparisons[1].sensitivity == 1.0
    assert comparisons[1].to_dict()["known"] == "*CG*"
