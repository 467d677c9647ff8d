"""感度、特異度(LS)の計算とパターン探索結果のレポート。
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import math

import numpy as np

from common.exception import InvalidInputError
from metrics.language_model import LanguageModel, log10_language_size
from sequence.dataset import Dataset
from sequence.pattern import Pattern, PatternLike, as_pattern, pattern_matches


def covered_indice(d: Dataset, ps: List[PatternLike]) -> List[int]:
    """少なくとも1つのパターンにマッチする配列のインデックスを取得する。

    Args:
        d (Dataset): データセット。
        ps (List[PatternLike]): パターンのリスト。

    Returns:
        List[int]: マッチする配列のインデックスのリスト。
    """
    patterns = [as_pattern(p) for p in ps]
    return [index for index, sequence in enumerate(d.sequences) \
        if any(pattern_matches(pattern, sequence) for pattern in patterns)]


def support(d: Dataset, p: PatternLike) -> int:
    """パターンにマッチする配列の数を数える。

    Args:
        d (Dataset): データセット。
        p (PatternLike): パターン。

    Returns:
        int: マッチする配列の数。
    """
    return len(covered_indice(d, [p]))


def sensitivity(d: Dataset, ps: List[PatternLike]) -> float:
    """パターン集合の感度(カバーされる配列の割合)を計算する。

    Args:
        d (Dataset): データセット。
        ps (List[PatternLike]): パターンのリスト。

    Returns:
        float: 感度。
    """
    if d is None or len(d.sequences) == 0:
        raise InvalidInputError("sensitivity of an empty dataset is undefined")
    return len(covered_indice(d, ps)) / len(d.sequences)


def ls_score(d: Dataset, ps: List[PatternLike], model: Optional[LanguageModel]=None) -> float:
    """LS = -log10(カバーされる配列数 / 言語サイズの推定値の総和)を計算する。

    Args:
        d (Dataset): データセット。
        ps (List[PatternLike]): パターンのリスト。
        model (Optional[LanguageModel], optional): 推定モデル。省略時はデータセットから生成する。

    Returns:
        float: LS。カバーされる配列が無い場合はinf。
    """
    model = model if model is not None else LanguageModel.from_dataset(d)
    covered = len(covered_indice(d, ps))
    if covered == 0:
        return math.inf
    log_sizes = np.array([log10_language_size(p, model) for p in ps]) * math.log(10.0)
    total = float(np.logaddexp.reduce(log_sizes)) / math.log(10.0)
    return total - math.log10(covered)


def _encode_ls(value: float) -> Any:
    return "inf" if math.isinf(value) else value


def _decode_ls(value: Any) -> float:
    return math.inf if value == "inf" else float(value)


@dataclass(frozen=True)
class PatternReport: # pylint: disable=R0902
    """パターン探索の結果と評価値。
    """
    patterns: List[Pattern]
    sensitivity: float
    ls: float
    support: int
    algorithm: str
    base: Optional[str] = None
    source: str = ""
    elapsed: float = 0.0
    timings: Dict[str, float] = field(default_factory=dict)
    num_sequences: int = 0
    avg_length: float = 0.0

    @property
    def pattern_strings(self) -> List[str]:
        """パターンのテキスト表記を取得する。

        Returns:
            List[str]: テキスト表記のリスト。
        """
        return [pattern.render() for pattern in self.patterns]

    def to_dict(self, timings: bool=False) -> Dict[str, Any]:
        """辞書形式に変換する。

        Args:
            timings (bool, optional): 実行時間を含める場合はTrue。

        Returns:
            Dict[str, Any]: レポートの辞書。
        """
        data = {
            "algorithm": self.algorithm,
            "base": self.base,
            "source": self.source,
            "patterns": self.pattern_strings,
            "sensitivity": self.sensitivity,
            "ls": _encode_ls(self.ls),
            "support": self.support,
            "n": self.num_sequences,
            "avg_length": self.avg_length,
        }
        if timings:
            data["elapsed"] = self.elapsed
            data["timings"] = dict(self.timings)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PatternReport":
        """辞書形式から復元する。

        Args:
            data (Dict[str, Any]): to_dictで生成した辞書。

        Returns:
            PatternReport: 復元したレポート。
        """
        return cls(patterns=[Pattern.parse(text) for text in data["patterns"]], \
            sensitivity=data["sensitivity"], ls=_decode_ls(data["ls"]), support=data["support"], \
            algorithm=data["algorithm"], base=data["base"], source=data["source"], \
            elapsed=data.get("elapsed", 0.0), timings=dict(data.get("timings", {})), \
            num_sequences=data["n"], avg_length=data["avg_length"])


def build_pattern_report(d: Dataset, patterns: List[Pattern], algorithm: str, \
    base: Optional[str]=None, source: str="", timings: Optional[Dict[str, float]]=None) \
    -> PatternReport:
    """パターンを評価してレポートを生成する。

    Args:
        d (Dataset): データセット。
        patterns (List[Pattern]): パターンのリスト。
        algorithm (str): パターン探索のアルゴリズム名。
        base (Optional[str], optional): 元にしたヒューリスティック解の種類(lcs, scs)。
        source (str, optional): 元にしたヒューリスティック解。
        timings (Optional[Dict[str, float]], optional): フェーズごとの実行時間。

    Returns:
        PatternReport: 生成したレポート。
    """
    timings = dict(timings) if timings is not None else {}
    covered = len(covered_indice(d, patterns))
    return PatternReport(patterns=list(patterns), sensitivity=covered / d.size, \
        ls=ls_score(d, patterns), support=covered, algorithm=algorithm, base=base, \
        source=source, elapsed=sum(timings.values()), timings=timings, num_sequences=d.size, \
        avg_length=d.average_length)
