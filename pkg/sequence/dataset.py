"""配列とデータセットの実装。
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union
import hashlib

from common.exception import InvalidInputError
from sequence.alphabet import Alphabet


@dataclass(frozen=True)
class Sequence:
    """アルファベット上の記号列を表すクラス。
    """
    id: str
    symbols: str
    alphabet: Alphabet

    def __post_init__(self):
        if not self.alphabet.contains(self.symbols):
            unknown = sorted(set(self.symbols) - set(self.alphabet.symbols))
            raise InvalidInputError(f"sequence {self.id} has symbols outside the alphabet : " \
                f"{''.join(unknown)}")

    @property
    def length(self) -> int:
        """配列長を取得する。

        Returns:
            int: 配列長。
        """
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols


SequenceLike = Union[Sequence, str]


@dataclass(frozen=True)
class Dataset:
    """同じアルファベットを共有する配列集合を表すクラス。
    """
    alphabet: Alphabet
    sequences: Tuple[Sequence, ...]

    def __post_init__(self):
        if len(self.sequences) == 0:
            raise InvalidInputError("dataset must contain at least one sequence")
        for sequence in self.sequences:
            if sequence.alphabet != self.alphabet:
                raise InvalidInputError(f"sequence {sequence.id} does not share the dataset alphabet")

    @classmethod
    def from_strings(cls, strings: List[str], alphabet: Optional[Alphabet]=None, \
        ids: Optional[List[str]]=None) -> "Dataset":
        """文字列のリストからデータセットを生成する。

        Args:
            strings (List[str]): 配列の文字列のリスト。
            alphabet (Optional[Alphabet], optional): アルファベット。省略時は出現する記号から推定する。
            ids (Optional[List[str]], optional): 配列のID。省略時はseq1, seq2, ...。

        Returns:
            Dataset: 生成したデータセット。
        """
        strings = [string.upper() for string in strings]
        if alphabet is None:
            alphabet = Alphabet.infer(strings)
        if ids is None:
            ids = [f"seq{i + 1}" for i in range(len(strings))]
        return cls(alphabet, tuple(Sequence(seq_id, string, alphabet) \
            for seq_id, string in zip(ids, strings)))

    @property
    def size(self) -> int:
        """配列数nを取得する。

        Returns:
            int: 配列数。
        """
        return len(self.sequences)

    @property
    def strings(self) -> List[str]:
        """全配列の文字列を取得する。

        Returns:
            List[str]: 配列の文字列のリスト。
        """
        return [sequence.symbols for sequence in self.sequences]

    @property
    def average_length(self) -> float:
        """平均配列長lを取得する。

        Returns:
            float: 平均配列長。
        """
        return sum(len(sequence) for sequence in self.sequences) / len(self.sequences)

    @property
    def max_length(self) -> int:
        """最大配列長Kを取得する。

        Returns:
            int: 最大配列長。
        """
        return max(len(sequence) for sequence in self.sequences)

    def digest(self) -> str:
        """データセットのダイジェスト(SHA-256)を計算する。

        Returns:
            str: 16進数表記のダイジェスト。
        """
        sha = hashlib.sha256()
        sha.update(self.alphabet.symbols.encode("utf-8"))
        for sequence in self.sequences:
            sha.update(f"\n>{sequence.id}\n{sequence.symbols}".encode("utf-8"))
        return sha.hexdigest()


def symbols_of(value: SequenceLike) -> str:
    """配列、または文字列から記号列を取り出す。

    Args:
        value (SequenceLike): 配列、または文字列。

    Returns:
        str: 記号列。
    """
    if isinstance(value, Sequence):
        return value.symbols
    return value


def check_same_alphabet(a: SequenceLike, b: SequenceLike) -> None:
    """2つの配列のアルファベットが一致するか確認する。文字列の場合は確認しない。

    Args:
        a (SequenceLike): 配列1。
        b (SequenceLike): 配列2。
    """
    if isinstance(a, Sequence) and isinstance(b, Sequence) and a.alphabet != b.alphabet:
        raise InvalidInputError(f"alphabet mismatch : {a.alphabet.symbols} and {b.alphabet.symbols}")
