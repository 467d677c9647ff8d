"""パターンの言語サイズの推定モデル。
"""
from dataclasses import dataclass, replace
import math

from common.exception import InvalidInputError
from sequence.dataset import Dataset
from sequence.pattern import PatternLike, as_pattern


@dataclass(frozen=True)
class LanguageModel:
    """言語サイズを|Σ|^(l-p)で推定するモデル。

    qは推定には使用せず、ワイルドカード1つあたりの平均置換長(l-p)/qの表示にだけ使う。
    """
    alphabet_size: int
    avg_seq_len: float
    literal_count: int = 0
    star_count: int = 0

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise InvalidInputError(f"alphabet size must be positive : {self.alphabet_size}")
        if self.literal_count < 0 or self.star_count < 0:
            raise InvalidInputError("literal and wildcard counts must not be negative")

    @classmethod
    def from_dataset(cls, d: Dataset) -> "LanguageModel":
        """データセットのアルファベットサイズと平均配列長からモデルを生成する。

        Args:
            d (Dataset): データセット。

        Returns:
            LanguageModel: 生成したモデル。
        """
        return cls(d.alphabet.size, d.average_length)

    def for_pattern(self, p: PatternLike) -> "LanguageModel":
        """パターンのリテラル数とワイルドカード数を設定したモデルを生成する。

        Args:
            p (PatternLike): パターン。

        Returns:
            LanguageModel: 生成したモデル。
        """
        pattern = as_pattern(p)
        return replace(self, literal_count=pattern.literal_count, star_count=pattern.star_count)

    @property
    def log10_size(self) -> float:
        """言語サイズの常用対数。l < pの場合は0(サイズ1)。
        """
        return max(self.avg_seq_len - self.literal_count, 0.0) * math.log10(self.alphabet_size)

    @property
    def substitution_length(self) -> float:
        """ワイルドカード1つあたりの平均置換長(l-p)/q。
        """
        if self.star_count == 0:
            return 0.0
        return max(self.avg_seq_len - self.literal_count, 0.0) / self.star_count


def log10_language_size(p: PatternLike, model: LanguageModel) -> float:
    """パターンの言語サイズの推定値の常用対数を計算する。

    Args:
        p (PatternLike): パターン。
        model (LanguageModel): 推定モデル。

    Returns:
        float: log10(|Σ|^(l-p))。
    """
    return model.for_pattern(p).log10_size


def language_size_estimate(p: PatternLike, model: LanguageModel) -> float:
    """パターンの言語サイズ|Σ|^(l-p)を推定する。

    Args:
        p (PatternLike): パターン。
        model (LanguageModel): 推定モデル。

    Returns:
        float: 言語サイズの推定値。表現できない大きさの場合はinf。
    """
    try:
        return 10.0 ** log10_language_size(p, model)
    except OverflowError:
        return math.inf
