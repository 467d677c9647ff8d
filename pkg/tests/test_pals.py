from heuristic.algorithm import Base
from metrics.maximality import check_one_step_maximal
from pals.patternize import map_subsequence, map_supersequence, patternize_alpha, \
    patternize_beta
from pals.pipeline import PALS_LCS, PALS_SCS, pals_lcs, pals_scs, repair_cover, run_pals
from pals.substring import SuffixAutomaton, longest_common_fragment, longest_common_strings, \
    longest_common_substrings
from sequence.dataset import Dataset
from sequence.pattern import pattern_matches, segments_in_order


def test_map_subsequence():
    assert map_subsequence("CGT", "ACGT").render() == "*CGT"
    assert map_subsequence("CGT", "CGGT").render() == "CG*T"
    assert map_subsequence("CGT", "CGTC").render() == "CGT*"
    assert map_subsequence("", "ACG").render() == "*"


def test_map_supersequence():
    assert map_supersequence("ACTGGTC", "ACGT").render() == "AC*G*T*"


def test_patternize_beta(scs_example):
    mapped = patternize_beta(scs_example, "ACTGGTC")
    assert [item.pattern.render() for item in mapped] == ["AC*G*T*", "*C*GGT*", "*CTG*C"]
    assert [item.source for item in mapped] == ["seq1", "seq2", "seq3"]


def test_mapped_patterns_match_their_sequence(lcs_example):
    for item, sequence in zip(patternize_alpha(lcs_example, "CGT"), lcs_example.sequences):
        assert pattern_matches(item.pattern, sequence)


def test_suffix_automaton_match_lengths():
    automaton = SuffixAutomaton("ABAB")
    assert len(automaton.states) > 1
    assert longest_common_strings(["ABAB", "BABA"]) == ["ABA", "BAB"]
    assert longest_common_strings(["AAA", "CCC"]) == []


def test_longest_common_substrings():
    patterns = longest_common_substrings(["*CG*T", "CG*T", "CG*T*"])
    assert [pattern.render() for pattern in patterns] == ["*CG*T*"]
    patterns = longest_common_substrings(["*CGT", "CG*T", "CGT*"])
    assert [pattern.render() for pattern in patterns] == ["*CG*"]


def test_longest_common_substrings_prefers_literals():
    patterns = longest_common_substrings(["A*", "*A"])
    assert [pattern.render() for pattern in patterns] == ["*A*"]
    patterns = longest_common_substrings(["A*", "*C"])
    assert [pattern.render() for pattern in patterns] == ["*"]


def test_longest_common_fragment():
    assert longest_common_fragment("ACGT", "TTCG") == "CG"
    assert longest_common_fragment("AAA", "") == ""


def test_pals_lcs_example(lcs_example):
    report = pals_lcs(lcs_example)
    assert report.algorithm == PALS_LCS
    assert report.source == "CGT"
    assert report.pattern_strings == ["*CG*"]
    assert report.sensitivity == 1.0


def test_pals_lcs_with_ties():
    report = pals_lcs(Dataset.from_strings(["AB", "BA"]))
    assert report.pattern_strings == ["*A*"]
    assert report.sensitivity == 1.0


def test_pals_scs_example(scs_example):
    report = pals_scs(scs_example, scs="ACTGGTC")
    assert report.algorithm == PALS_SCS
    assert report.pattern_strings == ["*C*G*"]
    assert report.sensitivity == 1.0
    assert segments_in_order(report.patterns[0], "ACTGGTC")
    assert check_one_step_maximal(scs_example, report.patterns[0])


def test_repair_cover_inserts_star():
    assert repair_cover("CG", ["ACG", "CAG"]) == "C*G"
    assert repair_cover("CG", ["ACG", "CG*"]) == "CG"


def test_run_pals_dispatch(lcs_example):
    assert run_pals(lcs_example, Base.LCS).algorithm == PALS_LCS
    report = run_pals(lcs_example, Base.SCS)
    assert report.algorithm == PALS_SCS
    assert report.sensitivity == 1.0
    assert len(report.patterns) == 1
