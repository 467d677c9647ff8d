"""小規模入力に対する全探索による厳密解。
"""
from collections import deque
from itertools import combinations, product
from typing import Dict, List, Optional, Tuple, Union

from common.exception import InvalidInputError
from oracle.limits import OracleLimits
from sequence.alphabet import Alphabet
from sequence.constant import WILDCARD
from sequence.dataset import Dataset
from sequence.embedding import is_common_subsequence
from sequence.pattern import PatternLike, as_pattern


def brute_lcs(d: Dataset, limits: OracleLimits=OracleLimits()) -> str:
    """最短の配列の部分列を長い順に列挙し、全配列の最長共通部分列を求める。

    Args:
        d (Dataset): データセット。
        limits (OracleLimits, optional): 列挙の上限。

    Returns:
        str: 最長共通部分列の1つ。
    """
    strings = d.strings
    limits.check_dataset(strings)
    shortest = min(strings, key=len)
    for length in range(len(shortest), 0, -1):
        checked = set()
        for indice in combinations(range(len(shortest)), length):
            candidate = "".join(shortest[i] for i in indice)
            if candidate in checked:
                continue
            checked.add(candidate)
            if is_common_subsequence(candidate, strings):
                return candidate
    return ""


def brute_scs(d: Dataset, limits: OracleLimits=OracleLimits()) -> str:
    """各配列の消費済み長さの組を状態とする幅優先探索で最短共通超配列を求める。

    Args:
        d (Dataset): データセット。
        limits (OracleLimits, optional): 列挙の上限。

    Returns:
        str: 最短共通超配列の1つ。
    """
    strings = d.strings
    limits.check_dataset(strings)
    start = tuple(0 for _ in strings)
    goal = tuple(len(string) for string in strings)
    parents: Dict[Tuple[int, ...], Optional[Tuple[Tuple[int, ...], str]]] = {start: None}
    queue = deque([start])

    while queue:
        state = queue.popleft()
        if state == goal:
            break
        for symbol in d.alphabet.symbols:
            advanced = tuple(consumed + 1 if consumed < len(string) and string[consumed] == symbol \
                else consumed for consumed, string in zip(state, strings))
            if advanced == state or advanced in parents:
                continue
            parents[advanced] = (state, symbol)
            queue.append(advanced)

    result = []
    state = goal
    while parents[state] is not None:
        state, symbol = parents[state]
        result.append(symbol)
    return "".join(reversed(result))


def _expand_chars(p: PatternLike) -> List[str]:
    """パターンを1文字単位の要素(リテラル文字、またはワイルドカード)に分解する。
    """
    return list(as_pattern(p).render())


def language_count(p: PatternLike, length: int, alphabet: Union[Alphabet, str], \
    limits: OracleLimits=OracleLimits()) -> int:
    """パターンの言語に含まれる長さlengthの文字列の数を数える。

    パターンを非決定性オートマトンとみなし、状態集合ごとに文字列数を数える。

    Args:
        p (PatternLike): パターン。
        length (int): 文字列長。
        alphabet (Union[Alphabet, str]): アルファベット。
        limits (OracleLimits, optional): 列挙の上限。

    Returns:
        int: 文字列の数。
    """
    limits.check_language_length(length)
    if length < 0:
        raise InvalidInputError(f"length must not be negative : {length}")
    symbols = alphabet.symbols if isinstance(alphabet, Alphabet) else alphabet
    items = _expand_chars(p)
    final = len(items)

    def closure(states):
        closed = set(states)
        for state in sorted(states):
            position = state
            while position < final and items[position] == WILDCARD:
                position += 1
                closed.add(position)
        return frozenset(closed)

    counts = {closure({0}): 1}
    for _ in range(length):
        next_counts = {}
        for states, count in counts.items():
            for symbol in symbols:
                moved = set()
                for state in states:
                    if state == final:
                        continue
                    if items[state] == WILDCARD:
                        moved.add(state)
                    elif items[state] == symbol:
                        moved.add(state + 1)
                if not moved:
                    continue
                key = closure(moved)
                next_counts[key] = next_counts.get(key, 0) + count
        counts = next_counts

    return sum(count for states, count in counts.items() if final in states)


def brute_pattern_matches(p: PatternLike, text: str) -> bool:
    """文字列の分割を全て試してパターンとの照合を判定する。

    Args:
        p (PatternLike): パターン。
        text (str): 文字列。

    Returns:
        bool: マッチする場合はTrue。
    """
    tokens = list(as_pattern(p).tokens)

    def match(token_index: int, position: int) -> bool:
        if token_index == len(tokens):
            return position == len(text)
        token = tokens[token_index]
        if token == WILDCARD:
            return any(match(token_index + 1, split) for split in range(position, len(text) + 1))
        if text.startswith(token, position):
            return match(token_index + 1, position + len(token))
        return False

    return match(0, 0)


def enumerate_language(p: PatternLike, length: int, symbols: str) -> List[str]:
    """長さlengthの全ての文字列から、パターンにマッチするものを列挙する。

    Args:
        p (PatternLike): パターン。
        length (int): 文字列長。
        symbols (str): アルファベットの記号。

    Returns:
        List[str]: マッチする文字列のリスト。
    """
    return ["".join(chars) for chars in product(symbols, repeat=length) \
        if brute_pattern_matches(p, "".join(chars))]
