import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from common.exception import InvalidInputError
from heuristic.algorithm import Algorithm
from heuristic.scs import alphabet_supersequence, heuristic_scs, heuristic_scs_candidates, \
    min_height_merge, reduce_template, run_scs_algorithm, sum_height_merge
from oracle.brute import brute_scs
from sequence.alphabet import Alphabet
from sequence.dataset import Dataset
from sequence.embedding import is_common_supersequence

small_datasets = st.lists(st.text(alphabet="AB", min_size=1, max_size=8), min_size=1, max_size=3)


def test_alphabet_supersequence(scs_example):
    assert alphabet_supersequence(scs_example) == "ACGT" * 4


def test_sum_height_examples(scs_example):
    assert sum_height_merge(scs_example) == "CACGTGCT"
    assert sum_height_merge(Dataset.from_strings(["AB", "BA"])) == "ABA"


def test_min_height_example():
    d = Dataset.from_strings(["AAB", "BA"])
    value = min_height_merge(d)
    assert value.startswith("A")
    assert is_common_supersequence(value, d.strings)


def test_reduce_examples(scs_example):
    reduced = reduce_template(scs_example, "ACGT" * 4)
    assert reduced == "CTGACGT"
    assert is_common_supersequence(reduced, scs_example.strings)
    assert reduce_template(Dataset.from_strings(["AB", "BA"]), "ABAB") == "BAB"


def test_reduce_keeps_optimal_template():
    d = Dataset.from_strings(["AB", "BA"])
    assert reduce_template(d, "ABA") == "ABA"


def test_reduce_rejects_non_supersequence(scs_example):
    with pytest.raises(InvalidInputError):
        reduce_template(scs_example, "ACGT")


def test_heuristic_scs_examples(scs_example):
    assert heuristic_scs(Dataset.from_strings(["AB", "BA"])).value == "ABA"
    result = heuristic_scs(scs_example)
    assert result.algorithm == Algorithm.DEPOSITION_REDUCTION
    assert is_common_supersequence(result.value, scs_example.strings)
    assert len(result.value) <= 7


def test_invalid_pool_size(scs_example):
    with pytest.raises(InvalidInputError):
        heuristic_scs(scs_example, pool_size=0)


@pytest.mark.parametrize("algorithm", Algorithm.get_scs_choices())
def test_every_algorithm_returns_supersequence(scs_example, algorithm):
    result = run_scs_algorithm(scs_example, Algorithm(algorithm))
    assert result.algorithm == Algorithm(algorithm)
    assert is_common_supersequence(result.value, scs_example.strings)


def test_run_scs_algorithm_rejects_lcs_algorithm(scs_example):
    with pytest.raises(InvalidInputError):
        run_scs_algorithm(scs_example, Algorithm.DEPOSITION_EXTENSION)


@given(small_datasets)
@settings(max_examples=100, deadline=None)
def test_heuristic_scs_is_bounded(strings):
    d = Dataset.from_strings(strings, Alphabet("AB"))
    value = heuristic_scs(d).value
    assert is_common_supersequence(value, strings)
    assert len(brute_scs(d)) <= len(value) <= len(alphabet_supersequence(d))
    for index in range(len(value)):
        assert not is_common_supersequence(value[:index] + value[index + 1:], strings)


def test_contract_on_random_datasets():
    """ランダムなデータセットで、出力が常に共通超配列になる。
    """
    rng = np.random.default_rng(2006)
    for _ in range(500):
        symbols = "AB" if rng.integers(0, 2) == 0 else "ACGT"
        strings = ["".join(rng.choice(list(symbols), size=int(rng.integers(1, 41)))) \
            for _ in range(int(rng.integers(1, 9)))]
        d = Dataset.from_strings(strings, Alphabet(symbols))
        assert is_common_supersequence(heuristic_scs(d).value, strings)


def test_reduce_is_idempotent():
    rng = np.random.default_rng(5)
    for _ in range(200):
        strings = ["".join(rng.choice(list("ACGT"), size=int(rng.integers(1, 10)))) \
            for _ in range(3)]
        d = Dataset.from_strings(strings, Alphabet("ACGT"))
        template = "".join(strings) + "".join(rng.choice(list("ACGT"), size=5))
        reduced = reduce_template(d, template)
        assert is_common_supersequence(reduced, strings)
        assert reduce_template(d, reduced) == reduced


def test_candidates_are_distinct(scs_example):
    results = heuristic_scs_candidates(scs_example, 3)
    values = [result.value for result in results]
    assert len(values) == len(set(values))
    assert values[0] == heuristic_scs(scs_example).value
