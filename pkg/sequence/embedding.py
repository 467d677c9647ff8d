"""部分列・超配列の判定と、部分列の埋め込み位置の計算。
"""
from typing import List, Optional

from sequence.dataset import SequenceLike, check_same_alphabet, symbols_of


def embed_leftmost(a: SequenceLike, b: SequenceLike) -> Optional[List[int]]:
    """aをbに最も左の位置へ貪欲に埋め込む。

    Args:
        a (SequenceLike): 埋め込む配列。
        b (SequenceLike): 埋め込み先の配列。

    Returns:
        Optional[List[int]]: aの各文字に対応するbの位置。埋め込めない場合はNone。
    """
    check_same_alphabet(a, b)
    text = symbols_of(b)
    positions = []
    cursor = 0
    for char in symbols_of(a):
        index = text.find(char, cursor)
        if index < 0:
            return None
        positions.append(index)
        cursor = index + 1
    return positions


def is_subsequence(a: SequenceLike, b: SequenceLike) -> bool:
    """aがbの部分列か判定する。

    Args:
        a (SequenceLike): 配列a。
        b (SequenceLike): 配列b。

    Returns:
        bool: aがbの順序を保った部分列ならTrue。
    """
    return embed_leftmost(a, b) is not None


def is_supersequence(a: SequenceLike, b: SequenceLike) -> bool:
    """aがbの超配列か判定する。

    Args:
        a (SequenceLike): 配列a。
        b (SequenceLike): 配列b。

    Returns:
        bool: bがaの部分列ならTrue。
    """
    return is_subsequence(b, a)


def is_common_subsequence(value: SequenceLike, strings: List[str]) -> bool:
    """全ての文字列の共通部分列か判定する。
    """
    return all(is_subsequence(value, string) for string in strings)


def is_common_supersequence(value: SequenceLike, strings: List[str]) -> bool:
    """全ての文字列の共通超配列か判定する。
    """
    return all(is_subsequence(string, value) for string in strings)
