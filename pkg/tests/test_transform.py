import numpy as np
import pytest

from common.exception import InvalidInputError
from heuristic.algorithm import Algorithm
from heuristic.lcs import heuristic_lcs
from heuristic.result import HeuristicResult
from heuristic.scs import heuristic_scs
from pals.pipeline import pals_lcs
from sequence.alphabet import Alphabet
from sequence.dataset import Dataset
from sequence.embedding import is_common_subsequence, is_common_supersequence
from sequence.pattern import as_pattern
from transform.anchor import choose_anchor_pattern, decompose, place_segments
from transform.refine import refine
from transform.transform import lcs_to_scs, scs_to_lcs


def test_choose_anchor_pattern():
    patterns = [as_pattern("*"), as_pattern("*C*"), as_pattern("*A*")]
    assert choose_anchor_pattern(patterns).render() == "*A*"
    assert choose_anchor_pattern([as_pattern("*A*"), as_pattern("*CG*")]).render() == "*CG*"


def test_place_segments():
    assert place_segments(as_pattern("*C*G*"), "ACGT") == [1, 2]
    assert place_segments(as_pattern("C*G"), "CTG") == [0, 2]
    assert place_segments(as_pattern("C*G"), "CG") == [0, 1]
    assert place_segments(as_pattern("CG*G"), "CG") is None
    assert place_segments(as_pattern("*T*A*"), "ACGT") is None


def test_decompose(scs_example):
    columns = decompose(as_pattern("*C*G*"), scs_example.strings)
    assert columns == [["A", "", ""], ["", "", "T"], ["T", "GT", "C"]]


def test_scs_to_lcs_example(scs_example):
    scs = HeuristicResult("ACTGGTC", Algorithm.DEPOSITION_REDUCTION)
    result = scs_to_lcs(scs_example, scs)
    assert result.value == "CG"
    assert result.algorithm == Algorithm.TRANSFORM
    assert result.params == {"from": "scs", "pattern": "*C*G*", "fallback": False}
    assert not result.fallback
    assert len(result.value) > len("G")


def test_lcs_to_scs_example():
    d = Dataset.from_strings(["AB", "BA"])
    result = lcs_to_scs(d, HeuristicResult("A", Algorithm.DEPOSITION_EXTENSION))
    assert result.value == "BAB"
    assert result.params["from"] == "lcs"


def test_transform_fallback(monkeypatch, scs_example, capsys):
    monkeypatch.setattr("transform.transform.decompose", lambda pattern, strings: None)
    result = scs_to_lcs(scs_example, heuristic_scs(scs_example))
    assert result.fallback
    assert result.params["from"] == "scs"
    assert result.value == heuristic_lcs(scs_example).value
    assert "fell back" in capsys.readouterr().err


def test_transforms_on_random_datasets():
    rng = np.random.default_rng(4)
    for _ in range(50):
        strings = ["".join(rng.choice(list("ACGT"), size=int(rng.integers(1, 15)))) \
            for _ in range(int(rng.integers(2, 6)))]
        d = Dataset.from_strings(strings, Alphabet("ACGT"))
        lcs = scs_to_lcs(d, heuristic_scs(d))
        scs = lcs_to_scs(d, heuristic_lcs(d))
        assert is_common_subsequence(lcs.value, strings)
        assert is_common_supersequence(scs.value, strings)


def test_refine_identical_sequences():
    d = Dataset.from_strings(["ACGTAC"] * 3, Alphabet("ACGT"))
    state = refine(d)
    assert state.round == 1
    assert state.best_lcs.value == "ACGTAC"
    assert state.best_scs.value == "ACGTAC"
    assert state.history[-1]["improved"] is False


def test_refine_is_monotone():
    rng = np.random.default_rng(9)
    for _ in range(10):
        strings = ["".join(rng.choice(list("ACGT"), size=12)) for _ in range(4)]
        d = Dataset.from_strings(strings, Alphabet("ACGT"))
        state = refine(d, max_rounds=5, candidates=2)
        assert 1 <= state.round <= 5
        lcs_lengths = [entry["lcs_length"] for entry in state.history]
        scs_lengths = [entry["scs_length"] for entry in state.history]
        assert lcs_lengths == sorted(lcs_lengths)
        assert scs_lengths == sorted(scs_lengths, reverse=True)
        assert is_common_subsequence(state.best_lcs.value, strings)
        assert is_common_supersequence(state.best_scs.value, strings)
        assert state.best_patterns.sensitivity == 1.0


def test_refine_rejects_invalid_rounds(scs_example):
    with pytest.raises(InvalidInputError):
        refine(scs_example, max_rounds=0)


def test_refine_state_to_dict(scs_example):
    data = refine(scs_example, max_rounds=2).to_dict()
    assert set(data) == {"round", "best_lcs", "best_scs", "best_patterns", "history", \
        "lcs_candidates", "scs_candidates"}
    assert "elapsed" not in data["best_lcs"]


def test_refine_picks_patterns_from_every_lcs_candidate(monkeypatch, scs_example):
    candidates = [HeuristicResult(value, Algorithm.DEPOSITION_EXTENSION) \
        for value in ("CT", "CG", "G")]
    monkeypatch.setattr("transform.refine.heuristic_lcs_candidates", \
        lambda d, count, params: candidates)
    state = refine(scs_example, max_rounds=1, candidates=3)
    assert [candidate.value for candidate in state.lcs_candidates] == ["CT", "CG", "G"]
    assert state.best_lcs.length == 2
    best_ls = min(pals_lcs(scs_example, lcs=value).ls for value in ("CT", "CG", "G"))
    assert state.best_patterns.ls <= best_ls + 1e-9
    assert state.best_patterns.sensitivity == 1.0
