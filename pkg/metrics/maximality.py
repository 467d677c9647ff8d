"""1ステップの特殊化によるパターンの極大性の判定。
"""
from typing import List

from sequence.constant import WILDCARD
from sequence.dataset import Dataset
from sequence.pattern import Pattern, PatternLike, as_pattern, pattern_matches


def specializations(p: PatternLike, symbols: str, replace_boundary: bool=True) -> List[Pattern]:
    """1ステップの変更で得られる、言語が元のパターンの部分集合になるパターンを列挙する。

    変更は、ワイルドカードの削除、ワイルドカードの記号への置換、ワイルドカードの*c*への分割、
    ワイルドカードに接するリテラルの延長の4種類。

    Args:
        p (PatternLike): パターン。
        symbols (str): 使用する記号。
        replace_boundary (bool, optional): 先頭と末尾のワイルドカードの置換を含める場合はTrue。

    Returns:
        List[Pattern]: 正規化済みのパターンのリスト。重複は除く。
    """
    tokens = list(as_pattern(p).tokens)
    moves = []
    for i, token in enumerate(tokens):
        if token != WILDCARD:
            continue
        boundary = i in (0, len(tokens) - 1)
        moves.append(tokens[:i] + tokens[i + 1:])
        if replace_boundary or not boundary:
            moves.extend(tokens[:i] + [symbol] + tokens[i + 1:] for symbol in symbols)
        moves.extend(tokens[:i] + [WILDCARD, symbol, WILDCARD] + tokens[i + 1:] \
            for symbol in symbols)

    for i, token in enumerate(tokens):
        if token == WILDCARD:
            continue
        if i > 0 and tokens[i - 1] == WILDCARD:
            moves.extend(tokens[:i] + [symbol + token] + tokens[i + 1:] for symbol in symbols)
        if i < len(tokens) - 1 and tokens[i + 1] == WILDCARD:
            moves.extend(tokens[:i] + [token + symbol] + tokens[i + 1:] for symbol in symbols)

    results = []
    seen = set()
    for move in moves:
        pattern = Pattern(tuple(move)).normalize()
        if pattern not in seen:
            seen.add(pattern)
            results.append(pattern)
    return results


def check_one_step_maximal(d: Dataset, p: PatternLike) -> bool:
    """1ステップの特殊化で、同じ配列集合をカバーするパターンが無いか判定する。

    Args:
        d (Dataset): データセット。
        p (PatternLike): パターン。

    Returns:
        bool: そのようなパターンが無い場合はTrue。
    """
    covered = [sequence for sequence in d.sequences if pattern_matches(p, sequence)]
    for candidate in specializations(p, d.alphabet.symbols):
        if all(pattern_matches(candidate, sequence) for sequence in covered):
            return False
    return True
