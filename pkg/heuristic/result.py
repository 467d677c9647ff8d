"""ヒューリスティック探索のパラメータと結果のデータ構造。
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from common.exception import InvalidInputError
from heuristic.algorithm import Algorithm
from heuristic.constant import MAX_WINDOW_GROWTH


@dataclass(frozen=True)
class DepositionParams:
    """Depositionの探索パラメータ。

    windowがNoneの場合はアルファベットサイズのWINDOW_FACTOR倍を使用する。
    seedが0の場合は同点の記号をアルファベット順で選ぶ。
    """
    window: Optional[int] = None
    seed: int = 0
    max_window_growth: int = MAX_WINDOW_GROWTH

    def __post_init__(self):
        if self.window is not None and self.window < 1:
            raise InvalidInputError(f"window must be positive : {self.window}")
        if self.max_window_growth < 0:
            raise InvalidInputError(f"max_window_growth must not be negative : " \
                f"{self.max_window_growth}")

    def to_dict(self) -> Dict[str, Any]:
        """辞書形式に変換する。

        Returns:
            Dict[str, Any]: パラメータの辞書。
        """
        return {
            "window": self.window,
            "seed": self.seed,
            "max_window_growth": self.max_window_growth,
        }


@dataclass(frozen=True)
class HeuristicResult:
    """ヒューリスティックで求めたLCS、またはSCSと、その生成情報。
    """
    value: str
    algorithm: Algorithm
    params: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def length(self) -> int:
        """解の長さを取得する。

        Returns:
            int: 解の長さ。
        """
        return len(self.value)

    @property
    def fallback(self) -> bool:
        """変換に失敗してヒューリスティックを直接実行した結果か否か。
        """
        return bool(self.params.get("fallback", False))

    def to_dict(self, timings: bool=False) -> Dict[str, Any]:
        """辞書形式に変換する。

        Args:
            timings (bool, optional): 実行時間を含める場合はTrue。

        Returns:
            Dict[str, Any]: 結果の辞書。
        """
        data = {
            "algorithm": self.algorithm.value,
            "value": self.value,
            "length": self.length,
            "params": dict(self.params),
        }
        if timings:
            data["elapsed"] = self.elapsed
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "HeuristicResult":
        """辞書形式から復元する。

        Args:
            data (Dict[str, Any]): to_dictで生成した辞書。

        Returns:
            HeuristicResult: 復元した結果。
        """
        return cls(data["value"], Algorithm(data["algorithm"]), dict(data["params"]), \
            data.get("elapsed", 0.0))
