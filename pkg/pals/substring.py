"""接尾辞オートマトンによる複数文字列の最長共通部分文字列の列挙。
"""
from dataclasses import dataclass, field, replace
from typing import Dict, List

from sequence.constant import WILDCARD
from sequence.pattern import Pattern, PatternLike, as_pattern


@dataclass
class State:
    """接尾辞オートマトンの状態。

    first_posは状態が表す部分文字列が最初に終わる位置。
    """
    length: int = 0
    link: int = -1
    first_pos: int = -1
    transitions: Dict[str, int] = field(default_factory=dict)


class SuffixAutomaton:
    """文字列の全ての部分文字列を受理する接尾辞オートマトン。
    """
    def __init__(self, text: str):
        """SuffixAutomatonクラスのコンストラクタ。

        Args:
            text (str): 対象の文字列。
        """
        self.text = text
        self.states = [State()]
        last = 0
        for position, char in enumerate(text):
            current = len(self.states)
            self.states.append(State(length=self.states[last].length + 1, first_pos=position))
            p = last
            while p != -1 and char not in self.states[p].transitions:
                self.states[p].transitions[char] = current
                p = self.states[p].link
            if p == -1:
                self.states[current].link = 0
            else:
                q = self.states[p].transitions[char]
                if self.states[p].length + 1 == self.states[q].length:
                    self.states[current].link = q
                else:
                    clone = len(self.states)
                    self.states.append(replace(self.states[q], \
                        length=self.states[p].length + 1, \
                        transitions=self.states[q].transitions.copy()))
                    while p != -1 and self.states[p].transitions.get(char) == q:
                        self.states[p].transitions[char] = clone
                        p = self.states[p].link
                    self.states[q].link = clone
                    self.states[current].link = clone
            last = current
        self.order = sorted(range(len(self.states)), key=lambda index: -self.states[index].length)

    def match_lengths(self, text: str) -> List[int]:
        """各状態について、textと共通する部分文字列の最大長を求める。

        Args:
            text (str): 比較する文字列。

        Returns:
            List[int]: 状態ごとの共通部分文字列の最大長。
        """
        best = [0] * len(self.states)
        state, length = 0, 0
        for char in text:
            while state != 0 and char not in self.states[state].transitions:
                state = self.states[state].link
                length = self.states[state].length
            if char in self.states[state].transitions:
                state = self.states[state].transitions[char]
                length += 1
            else:
                state, length = 0, 0
            best[state] = max(best[state], length)

        for index in self.order:
            link = self.states[index].link
            if link >= 0 and best[index] > 0:
                best[link] = max(best[link], min(best[index], self.states[link].length))
        return best


def longest_common_strings(texts: List[str]) -> List[str]:
    """複数文字列の最長共通部分文字列を全て列挙する。

    Args:
        texts (List[str]): 文字列のリスト。

    Returns:
        List[str]: ソート済みの最長共通部分文字列のリスト。共通部分文字列が無い場合は空。
    """
    automaton = SuffixAutomaton(texts[0])
    common = [state.length for state in automaton.states]
    for text in texts[1:]:
        best = automaton.match_lengths(text)
        common = [min(value, other) for value, other in zip(common, best)]
    common[0] = 0

    longest = max(common)
    if longest == 0:
        return []
    substrings = set()
    for index, length in enumerate(common):
        if length == longest:
            end = automaton.states[index].first_pos + 1
            substrings.add(automaton.text[end - longest:end])
    return sorted(substrings)


def longest_common_substrings(patterns: List[PatternLike]) -> List[Pattern]:
    """パターンのテキスト表記を文字列とみなして最長共通部分文字列を全て求める。

    求めた部分文字列は最終出力モードで正規化し、重複を除いて返す。リテラルを含む
    パターンがある場合、ワイルドカードのみのパターンは除く。

    Args:
        patterns (List[PatternLike]): パターンのリスト。

    Returns:
        List[Pattern]: パターンのリスト。共通部分文字列が無い場合は*のみ。
    """
    texts = [as_pattern(p).render() for p in patterns]
    results = {Pattern.parse(text).normalize(final=True) for text in longest_common_strings(texts)}
    literal_results = {pattern for pattern in results if pattern.literal_count > 0}
    if literal_results:
        results = literal_results
    if not results:
        return [Pattern((WILDCARD,))]
    return sorted(results, key=lambda pattern: pattern.render())


def longest_common_fragment(a: str, b: str) -> str:
    """2つの文字列の最長共通部分文字列を1つ求める。

    Args:
        a (str): 文字列1。
        b (str): 文字列2。

    Returns:
        str: 辞書順で最初の最長共通部分文字列。無い場合は空文字列。
    """
    if not a or not b:
        return ""
    substrings = longest_common_strings([a, b])
    return substrings[0] if substrings else ""
