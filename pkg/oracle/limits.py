"""厳密解ソルバの適用範囲。
"""
from dataclasses import dataclass
from typing import List

from common.exception import InvalidInputError, OracleLimitError
from oracle.constant import ORACLE_MAX_SEQUENCES, ORACLE_MAX_LENGTH, ORACLE_MAX_LANGUAGE_LENGTH


@dataclass(frozen=True)
class OracleLimits:
    """指数時間の列挙を行う前に確認する入力サイズの上限。
    """
    max_sequences: int = ORACLE_MAX_SEQUENCES
    max_length: int = ORACLE_MAX_LENGTH
    max_language_len: int = ORACLE_MAX_LANGUAGE_LENGTH

    def __post_init__(self):
        if min(self.max_sequences, self.max_length, self.max_language_len) < 1:
            raise InvalidInputError("oracle limits must be positive")

    def check_dataset(self, strings: List[str]) -> None:
        """データセットが上限内か確認する。

        Args:
            strings (List[str]): 配列の文字列のリスト。
        """
        if len(strings) > self.max_sequences:
            raise OracleLimitError(f"{len(strings)} sequences exceed the oracle limit " \
                f"{self.max_sequences}")
        longest = max(len(string) for string in strings)
        if longest > self.max_length:
            raise OracleLimitError(f"sequence length {longest} exceeds the oracle limit " \
                f"{self.max_length}")

    def check_language_length(self, length: int) -> None:
        """言語サイズを数え上げる文字列長が上限内か確認する。

        Args:
            length (int): 文字列長。
        """
        if length > self.max_language_len:
            raise OracleLimitError(f"language length {length} exceeds the oracle limit " \
                f"{self.max_language_len}")
