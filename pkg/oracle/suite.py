"""小規模なランダム入力でヒューリスティックとパターン探索を厳密解と照合する検査群。
"""
from dataclasses import dataclass
from typing import Any, Callable, Dict, List

import numpy as np

from common.exception import InvalidInputError, OracleLimitError
from common.print_console import print_progress
from heuristic.algorithm import Base
from heuristic.lcs import heuristic_lcs
from heuristic.scs import alphabet_supersequence, heuristic_scs, reduce_template
from metrics.score import PatternReport
from oracle.brute import brute_lcs, brute_pattern_matches, brute_scs, enumerate_language, \
    language_count
from oracle.limits import OracleLimits
from oracle.pairwise import exact_lcs_pair, exact_scs_pair
from oracle.verdict import CheckVerdict
from pals.pipeline import pals_lcs, pals_scs
from pals.star import pals_star
from pals_param import EVAL_INSTANCES, EVAL_MAX_LENGTH
from sequence.alphabet import Alphabet
from sequence.constant import WILDCARD
from sequence.dataset import Dataset
from sequence.embedding import is_common_subsequence, is_common_supersequence, is_subsequence
from sequence.pattern import Pattern, pattern_matches, segments_in_order, strip_wildcards

SUITE_ALPHABETS = ("AB", "ACGT")
MAX_SUITE_SEQUENCES = 3
MATCHER_MAX_LENGTH = 8
LANGUAGE_MAX_LENGTH = 6


@dataclass(frozen=True)
class CheckResult:
    """1種類の検査の結果。
    """
    name: str
    verdict: CheckVerdict
    checked: int
    violations: int
    detail: str

    def to_dict(self) -> Dict[str, Any]:
        """辞書形式に変換する。

        Returns:
            Dict[str, Any]: 検査結果の辞書。
        """
        return {
            "name": self.name,
            "verdict": CheckVerdict.get_string(self.verdict),
            "checked": self.checked,
            "violations": self.violations,
            "detail": self.detail,
        }


class _CheckCounter:
    """検査件数と違反件数、最初の違反の内容を記録する。
    """
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.violations = 0
        self.first_violation = ""

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.violations += 1
            if not self.first_violation:
                self.first_violation = describe()

    def result(self) -> CheckResult:
        verdict = CheckVerdict.from_violations(self.checked, self.violations)
        detail = self.first_violation if self.violations > 0 else \
            f"{self.checked} checks, 0 violations"
        return CheckResult(self.name, verdict, self.checked, self.violations, detail)


def _random_string(rng: np.random.Generator, symbols: str, length: int) -> str:
    return "".join(symbols[i] for i in rng.integers(0, len(symbols), size=length))


def _random_dataset(rng: np.random.Generator, max_len: int) -> Dataset:
    symbols = SUITE_ALPHABETS[int(rng.integers(0, len(SUITE_ALPHABETS)))]
    num_sequences = int(rng.integers(2, MAX_SUITE_SEQUENCES + 1))
    strings = [_random_string(rng, symbols, int(rng.integers(1, max_len + 1))) \
        for _ in range(num_sequences)]
    return Dataset.from_strings(strings, Alphabet(symbols))


def _random_pattern(rng: np.random.Generator, symbols: str, max_tokens: int) -> Pattern:
    text = _random_string(rng, symbols + WILDCARD, int(rng.integers(0, max_tokens + 1)))
    return Pattern.parse(text).normalize()


def _random_interleave(rng: np.random.Generator, strings: List[str]) -> str:
    """各配列の文字をランダムな順に混ぜ合わせ、共通超配列を1つ作る。
    """
    cursors = [0] * len(strings)
    result = []
    while True:
        remaining = [i for i, string in enumerate(strings) if cursors[i] < len(string)]
        if not remaining:
            return "".join(result)
        index = remaining[int(rng.integers(0, len(remaining)))]
        result.append(strings[index][cursors[index]])
        cursors[index] += 1


def _check_pattern_bounds(counters: Dict[str, _CheckCounter], d: Dataset, report: PatternReport, \
    exact_lcs: str, exact_scs: str, generator: str, contiguous: bool) -> None:
    for pattern in report.patterns:
        stripped = strip_wildcards(pattern)
        where = f"{report.algorithm} {pattern.render()} on {d.strings}"
        counters["pattern-scs-subsequence"].record(is_subsequence(stripped, exact_scs), \
            lambda: f"{where}: not a subsequence of {exact_scs}")
        counters["pattern-lcs-length"].record(len(stripped) <= len(exact_lcs), \
            lambda: f"{where}: longer than {exact_lcs}")
        counters["pattern-segment-order"].record( \
            segments_in_order(pattern, generator, contiguous), \
            lambda: f"{where}: segments out of order in {generator}")


def run_oracle_suite(max_len: int=EVAL_MAX_LENGTH, instances: int=EVAL_INSTANCES, seed: int=0, \
    limits: OracleLimits=OracleLimits()) -> List[CheckResult]:
    """ランダムな小規模データセットで全ての検査を実行する。

    Args:
        max_len (int, optional): 生成する配列の最大長。
        instances (int, optional): 生成するデータセット数。
        seed (int, optional): 乱数シード。
        limits (OracleLimits, optional): 厳密解ソルバの上限。

    Returns:
        List[CheckResult]: 検査ごとの結果。
    """
    if max_len > limits.max_length:
        raise OracleLimitError(f"max length {max_len} exceeds the oracle limit " \
            f"{limits.max_length}")
    if max_len < 1 or instances < 1:
        raise InvalidInputError(f"max_len and instances must be positive : {max_len}, {instances}")

    names = ["lcs-sandwich", "scs-sandwich", "pairwise-identity", "matcher-equivalence", \
        "pattern-scs-subsequence", "pattern-lcs-length", "pattern-segment-order", \
        "reduce-idempotent", "language-count"]
    counters = {name: _CheckCounter(name) for name in names}
    rng = np.random.default_rng(seed)

    for index in range(instances):
        d = _random_dataset(rng, max_len)
        strings = d.strings
        exact_lcs = brute_lcs(d, limits)
        exact_scs = brute_scs(d, limits)

        lcs = heuristic_lcs(d).value
        counters["lcs-sandwich"].record( \
            is_common_subsequence(lcs, strings) and len(lcs) <= len(exact_lcs), \
            lambda: f"{strings}: heuristic LCS {lcs}, exact {exact_lcs}")
        scs = heuristic_scs(d).value
        upper = alphabet_supersequence(d)
        counters["scs-sandwich"].record(is_common_supersequence(scs, strings) and \
            len(exact_scs) <= len(scs) <= len(upper), \
            lambda: f"{strings}: heuristic SCS {scs}, exact {exact_scs}")

        a, b = strings[0], strings[1]
        counters["pairwise-identity"].record( \
            len(exact_lcs_pair(a, b)) + len(exact_scs_pair(a, b)) == len(a) + len(b), \
            lambda: f"({a}, {b}) violates |LCS| + |SCS| = |a| + |b|")

        pattern = _random_pattern(rng, d.alphabet.symbols, 5)
        text = _random_string(rng, d.alphabet.symbols, \
            int(rng.integers(0, min(max_len, MATCHER_MAX_LENGTH) + 1)))
        counters["matcher-equivalence"].record( \
            pattern_matches(pattern, text) == brute_pattern_matches(pattern, text), \
            lambda: f"{pattern.render()} against {text}")

        # PALS*で追加されたリテラルは元の解に含まれないため、共通超配列の部分列として確認する
        for report, generator, contiguous in ((pals_lcs(d, lcs=lcs), lcs, True), \
            (pals_scs(d, scs=scs), scs, True), (pals_star(d, Base.LCS), scs, False), \
            (pals_star(d, Base.SCS), scs, False)):
            _check_pattern_bounds(counters, d, report, exact_lcs, exact_scs, generator, contiguous)

        template = _random_interleave(rng, strings)
        reduced = reduce_template(d, template)
        counters["reduce-idempotent"].record(reduce_template(d, reduced) == reduced, \
            lambda: f"{strings}: reduce of {template} is not stable")

        length = int(rng.integers(0, min(max_len, LANGUAGE_MAX_LENGTH) + 1))
        language_pattern = _random_pattern(rng, "AB", 4)
        counters["language-count"].record(language_count(language_pattern, length, "AB", limits) \
            == len(enumerate_language(language_pattern, length, "AB")), \
            lambda: f"{language_pattern.render()} at length {length}")

        print_progress(f"instance {index + 1}/{instances} checked")

    return [counters[name].result() for name in names]
