"""アルファベット(記号の集合)の実装。
"""
from dataclasses import dataclass
from typing import Iterable

from common.exception import InvalidInputError
from sequence.constant import ALPHABET_PRESETS, WILDCARD


@dataclass(frozen=True)
class Alphabet:
    """順序付きの記号集合を表すクラス。記号の並び順がタイブレークの順序になる。
    """
    symbols: str

    def __post_init__(self):
        if len(self.symbols) == 0:
            raise InvalidInputError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidInputError(f"alphabet has duplicated symbols : {self.symbols}")
        if WILDCARD in self.symbols:
            raise InvalidInputError(f"'{WILDCARD}' is reserved for wildcards")

    @property
    def size(self) -> int:
        """アルファベットサイズ|Σ|を取得する。

        Returns:
            int: 記号の数。
        """
        return len(self.symbols)

    def contains(self, symbols: str) -> bool:
        """文字列の全ての文字がアルファベットに含まれるか確認する。

        Args:
            symbols (str): 確認する文字列。

        Returns:
            bool: 全ての文字が含まれる場合はTrue。
        """
        return set(symbols) <= set(self.symbols)

    def index(self, symbol: str) -> int:
        """記号の順位を取得する。

        Args:
            symbol (str): 記号。

        Returns:
            int: 記号の順位(0始まり)。
        """
        return self.symbols.index(symbol)

    @classmethod
    def infer(cls, strings: Iterable[str]) -> "Alphabet":
        """文字列集合に出現する記号をソートしたアルファベットを生成する。

        Args:
            strings (Iterable[str]): 文字列集合。

        Returns:
            Alphabet: 推定したアルファベット。
        """
        symbols = sorted(set("".join(strings)))
        if len(symbols) == 0:
            symbols = list(ALPHABET_PRESETS["dna"])
        return cls("".join(symbols))

    @classmethod
    def from_name(cls, name: str) -> "Alphabet":
        """プリセット名(dna, protein)、または記号の列挙からアルファベットを生成する。

        Args:
            name (str): プリセット名、または記号を並べた文字列。

        Returns:
            Alphabet: 生成したアルファベット。
        """
        preset = ALPHABET_PRESETS.get(name.lower())
        if preset is not None:
            return cls(preset)
        return cls(name.upper())
