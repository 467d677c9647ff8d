"""ヒューリスティック解を各配列に写像してパターンを作る処理。
"""
from dataclasses import dataclass
from typing import List

from common.exception import InvalidInputError
from sequence.constant import WILDCARD
from sequence.dataset import Dataset, SequenceLike, symbols_of
from sequence.embedding import embed_leftmost
from sequence.pattern import Pattern


@dataclass(frozen=True)
class MappedPattern:
    """配列ごとの写像パターン。
    """
    source: str
    pattern: Pattern


def _collapse(chars: List[str]) -> Pattern:
    """文字のリストから連続するワイルドカードをまとめたパターンを作る。
    """
    return Pattern.parse("".join(chars)).normalize()


def map_subsequence(lcs: str, text: str) -> Pattern:
    """共通部分列を文字列の最も左に埋め込み、埋め込まれなかった区間を*にしたパターンを作る。

    Args:
        lcs (str): 共通部分列。
        text (str): 配列の文字列。

    Returns:
        Pattern: 写像パターン。
    """
    positions = embed_leftmost(lcs, text)
    if positions is None:
        raise InvalidInputError(f"{lcs} is not a subsequence of {text}")
    matched = set(positions)
    return _collapse([char if index in matched else WILDCARD for index, char in enumerate(text)])


def map_supersequence(scs: str, text: str) -> Pattern:
    """文字列を共通超配列の最も左に埋め込み、埋め込まれなかった区間を*にしたパターンを作る。

    Args:
        scs (str): 共通超配列。
        text (str): 配列の文字列。

    Returns:
        Pattern: 写像パターン。
    """
    positions = embed_leftmost(text, scs)
    if positions is None:
        raise InvalidInputError(f"{scs} is not a supersequence of {text}")
    matched = set(positions)
    return _collapse([char if index in matched else WILDCARD for index, char in enumerate(scs)])


def patternize_alpha(d: Dataset, lcs: SequenceLike) -> List[MappedPattern]:
    """共通部分列を全配列に写像する。

    Args:
        d (Dataset): データセット。
        lcs (SequenceLike): 共通部分列。

    Returns:
        List[MappedPattern]: 配列順の写像パターンのリスト。
    """
    value = symbols_of(lcs)
    return [MappedPattern(sequence.id, map_subsequence(value, sequence.symbols)) \
        for sequence in d.sequences]


def patternize_beta(d: Dataset, scs: SequenceLike) -> List[MappedPattern]:
    """全配列を共通超配列に写像する。

    Args:
        d (Dataset): データセット。
        scs (SequenceLike): 共通超配列。

    Returns:
        List[MappedPattern]: 配列順の写像パターンのリスト。
    """
    value = symbols_of(scs)
    return [MappedPattern(sequence.id, map_supersequence(value, sequence.symbols)) \
        for sequence in d.sequences]
