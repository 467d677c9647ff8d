"""各配列の記号の出現位置を引く表。
"""
from typing import List

import numpy as np

from common.exception import InvalidInputError
from heuristic.constant import NOT_FOUND


class OccurrenceTable: # pylint: disable=R0902
    """配列集合に対する次の出現位置、前の出現位置の表。

    next_table[i, j, c]は配列iの位置j以降で記号cが最初に現れる位置。存在しない場合は
    sentinel(最大配列長+1)。prev_table[i, j, c]は位置jより前で記号cが最後に現れる位置。
    存在しない場合はNOT_FOUND。
    """
    def __init__(self, strings: List[str], symbols: str):
        """OccurrenceTableクラスのコンストラクタ。

        Args:
            strings (List[str]): 配列の文字列のリスト。
            symbols (str): 使用する記号の並び。並び順が記号の順位になる。
        """
        self.strings = list(strings)
        self.symbols = symbols
        self.code_map = {symbol: index for index, symbol in enumerate(symbols)}
        self.num_strings = len(strings)
        self.num_symbols = len(symbols)
        self.max_length = max((len(string) for string in strings), default=0)
        self.sentinel = self.max_length + 1
        self.lengths = np.array([len(string) for string in strings], dtype=np.int32)
        self.rows = np.arange(self.num_strings)

        self.codes = np.full((self.num_strings, self.max_length), NOT_FOUND, dtype=np.int32)
        for i, string in enumerate(strings):
            if string:
                self.codes[i, :len(string)] = self.encode(string)

        self.next_table = np.full((self.num_strings, self.max_length + 2, self.num_symbols), \
            self.sentinel, dtype=np.int32)
        for j in range(self.max_length - 1, -1, -1):
            self.next_table[:, j, :] = self.next_table[:, j + 1, :]
            valid = self.codes[:, j] >= 0
            self.next_table[self.rows[valid], j, self.codes[valid, j]] = j

        self.prev_table = np.full((self.num_strings, self.max_length + 1, self.num_symbols), \
            NOT_FOUND, dtype=np.int32)
        for j in range(1, self.max_length + 1):
            self.prev_table[:, j, :] = self.prev_table[:, j - 1, :]
            valid = self.codes[:, j - 1] >= 0
            self.prev_table[self.rows[valid], j, self.codes[valid, j - 1]] = j - 1

    def encode(self, string: str) -> np.ndarray:
        """文字列を記号の順位の配列に変換する。

        Args:
            string (str): 文字列。

        Returns:
            np.ndarray: 記号の順位の配列。
        """
        try:
            return np.array([self.code_map[char] for char in string], dtype=np.int32)
        except KeyError as error:
            raise InvalidInputError(f"symbol {error} is not in {self.symbols}") from error

    def next_positions(self, cursors: np.ndarray) -> np.ndarray:
        """各配列のカーソル以降の全記号の出現位置を取得する。

        Args:
            cursors (np.ndarray): 各配列のカーソル位置。

        Returns:
            np.ndarray: (配列数, 記号数)の出現位置。
        """
        return self.next_table[self.rows, cursors, :]

    def found(self, positions: np.ndarray) -> np.ndarray:
        """出現位置が配列内に存在するか判定する。

        Args:
            positions (np.ndarray): 各配列の出現位置。

        Returns:
            np.ndarray: 存在する場合はTrue。
        """
        if positions.ndim == 2:
            return positions < self.lengths[:, None]
        return positions < self.lengths

    def rightmost_starts(self, value: str) -> np.ndarray:
        """valueの各接尾辞を各配列の最も右に埋め込んだ時の開始位置を取得する。

        Args:
            value (str): 埋め込む文字列。

        Returns:
            np.ndarray: (len(value)+1, 配列数)の開始位置。埋め込めない場合はNOT_FOUNDを含む。
        """
        starts = np.empty((len(value) + 1, self.num_strings), dtype=np.int32)
        starts[len(value)] = self.lengths
        codes = self.encode(value)
        for p in range(len(value) - 1, -1, -1):
            previous = np.maximum(starts[p + 1], 0)
            starts[p] = np.where(starts[p + 1] >= 0, \
                self.prev_table[self.rows, previous, codes[p]], NOT_FOUND)
        return starts
