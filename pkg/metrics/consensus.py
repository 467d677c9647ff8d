"""既知のコンセンサスパターンと発見したパターンの比較。
"""
from dataclasses import dataclass
from typing import Any, Dict, List

from metrics.score import ls_score, sensitivity
from pals.substring import longest_common_fragment
from sequence.dataset import Dataset
from sequence.embedding import is_supersequence
from sequence.pattern import Pattern, PatternLike, as_pattern, strip_wildcards


@dataclass(frozen=True)
class ConsensusComparison:
    """既知のコンセンサス1つに対する比較結果。

    fragmentsとcontains_knownは発見したパターンの順に並ぶ。
    """
    known: Pattern
    sensitivity: float
    ls: float
    fragments: List[str]
    contains_known: List[bool]

    def to_dict(self) -> Dict[str, Any]:
        """辞書形式に変換する。

        Returns:
            Dict[str, Any]: 比較結果の辞書。
        """
        return {
            "known": self.known.render(),
            "sensitivity": self.sensitivity,
            "ls": "inf" if self.ls == float("inf") else self.ls,
            "fragments": list(self.fragments),
            "contains_known": list(self.contains_known),
        }


def shared_fragment(a: PatternLike, b: PatternLike) -> str:
    """2つのパターンのリテラル部分文字列が共有する最長の断片を求める。

    Args:
        a (PatternLike): パターン1。
        b (PatternLike): パターン2。

    Returns:
        str: 最長の共通断片。同じ長さの断片が複数ある場合は辞書順で最初のもの。
    """
    best = ""
    for left in as_pattern(a).segments:
        for right in as_pattern(b).segments:
            fragment = longest_common_fragment(left, right)
            if len(fragment) > len(best) or (len(fragment) == len(best) and fragment < best):
                best = fragment
    return best


def compare_consensus(d: Dataset, discovered: List[PatternLike], known: List[PatternLike]) \
    -> List[ConsensusComparison]:
    """既知のコンセンサスパターンをデータセット上で評価し、発見したパターンと比較する。

    Args:
        d (Dataset): データセット。
        discovered (List[PatternLike]): 発見したパターンのリスト。
        known (List[PatternLike]): 既知のコンセンサスパターンのリスト。

    Returns:
        List[ConsensusComparison]: 既知のパターンごとの比較結果。
    """
    discovered = [as_pattern(p) for p in discovered]
    results = []
    for item in known:
        pattern = as_pattern(item)
        known_literals = strip_wildcards(pattern)
        results.append(ConsensusComparison(
            known=pattern,
            sensitivity=sensitivity(d, [pattern]),
            ls=ls_score(d, [pattern]),
            fragments=[shared_fragment(pattern, other) for other in discovered],
            contains_known=[is_supersequence(strip_wildcards(other), known_literals) \
                for other in discovered],
        ))
    return results
