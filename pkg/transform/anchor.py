"""パターンのリテラル部分文字列を基準に配列を区間に分割する処理。
"""
from typing import List, Optional

from sequence.pattern import Pattern


def choose_anchor_pattern(patterns: List[Pattern]) -> Pattern:
    """分割に使うパターンを選ぶ。リテラル数が最も多いもの、同数なら辞書順で最初のもの。

    Args:
        patterns (List[Pattern]): パターンのリスト。

    Returns:
        Pattern: 選んだパターン。
    """
    return min(patterns, key=lambda pattern: (-pattern.literal_count, pattern.render()))


def place_segments(pattern: Pattern, text: str) -> Optional[List[int]]:
    """リテラル部分文字列を先頭から最も左の位置に配置する。

    先頭(末尾)にワイルドカードが無い場合は最初(最後)のリテラルを接頭辞(接尾辞)に固定する。

    Args:
        pattern (Pattern): 正規化済みのパターン。
        text (str): 配列の文字列。

    Returns:
        Optional[List[int]]: 各リテラルの開始位置。配置できない場合はNone。
    """
    segments = pattern.segments
    if not segments:
        return []
    if pattern.star_count == 0:
        return [0] if text == segments[0] else None

    last_start = len(text)
    if not pattern.trailing_star:
        last_start = len(text) - len(segments[-1])
        if last_start < 0 or not text.endswith(segments[-1]):
            return None

    starts = []
    low = 0
    for index, segment in enumerate(segments):
        if index == 0 and not pattern.leading_star:
            if not text.startswith(segment):
                return None
            start = 0
        elif index == len(segments) - 1 and not pattern.trailing_star:
            if last_start < low:
                return None
            start = last_start
        else:
            start = text.find(segment, low, last_start)
            if start < 0:
                return None
        starts.append(start)
        low = start + len(segment)
    if low > len(text):
        return None
    return starts


def split_gaps(pattern: Pattern, text: str, starts: List[int]) -> List[str]:
    """リテラルの配置位置で文字列を分割し、リテラルの間の区間を取り出す。

    Args:
        pattern (Pattern): 正規化済みのパターン。
        text (str): 配列の文字列。
        starts (List[int]): place_segmentsで求めた開始位置。

    Returns:
        List[str]: リテラル数+1個の区間のリスト。
    """
    gaps = []
    position = 0
    for segment, start in zip(pattern.segments, starts):
        gaps.append(text[position:start])
        position = start + len(segment)
    gaps.append(text[position:])
    return gaps


def decompose(pattern: Pattern, strings: List[str]) -> Optional[List[List[str]]]:
    """全配列を区間に分割し、区間ごとに全配列の文字列をまとめる。

    Args:
        pattern (Pattern): 正規化済みのパターン。
        strings (List[str]): 配列の文字列のリスト。

    Returns:
        Optional[List[List[str]]]: 区間ごとの文字列のリスト。配置できない配列がある場合はNone。
    """
    columns = [[] for _ in range(len(pattern.segments) + 1)]
    for text in strings:
        starts = place_segments(pattern, text)
        if starts is None:
            return None
        for column, gap in zip(columns, split_gaps(pattern, text, starts)):
            column.append(gap)
    return columns
