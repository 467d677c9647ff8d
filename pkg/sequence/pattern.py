"""ワイルドカードパターンのデータ構造と照合処理。
"""
from dataclasses import dataclass
from typing import List, Tuple, Union

from common.exception import InvalidInputError
from sequence.constant import WILDCARD
from sequence.dataset import Sequence, SequenceLike, symbols_of


@dataclass(frozen=True, order=True)
class Pattern:
    """リテラル部分文字列とワイルドカードを並べたパターンを表すクラス。

    tokensの各要素はWILDCARD、または空でないリテラル文字列。parseで生成した直後は
    ワイルドカードの連続やリテラルの分割を含み得るため、normalizeで正規化する。
    """
    tokens: Tuple[str, ...]

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """テキスト表記からパターンを生成する。

        Args:
            text (str): パターンのテキスト表記(例: *CG*T*)。

        Returns:
            Pattern: 生成したパターン。
        """
        tokens = []
        literal = ""
        for char in text:
            if char == WILDCARD:
                if literal:
                    tokens.append(literal)
                    literal = ""
                tokens.append(WILDCARD)
            else:
                literal += char
        if literal:
            tokens.append(literal)
        return cls(tuple(tokens))

    def render(self) -> str:
        """テキスト表記を生成する。

        Returns:
            str: パターンのテキスト表記。
        """
        return "".join(self.tokens)

    def __str__(self) -> str:
        return self.render()

    def normalize(self, final: bool=False) -> "Pattern":
        """連続するワイルドカードをまとめ、隣接するリテラルを結合する。

        Args:
            final (bool, optional): 最終出力モード。先頭と末尾にワイルドカードを付与する。

        Returns:
            Pattern: 正規化したパターン。
        """
        tokens = []
        for token in self.tokens:
            if token == WILDCARD:
                if not tokens or tokens[-1] != WILDCARD:
                    tokens.append(WILDCARD)
            elif token:
                if tokens and tokens[-1] != WILDCARD:
                    tokens[-1] += token
                else:
                    tokens.append(token)
        if final:
            if not tokens or tokens[0] != WILDCARD:
                tokens.insert(0, WILDCARD)
            if tokens[-1] != WILDCARD:
                tokens.append(WILDCARD)
        return Pattern(tuple(tokens))

    @property
    def segments(self) -> List[str]:
        """リテラル部分文字列を先頭から順に取得する。正規化済みのパターンを前提とする。

        Returns:
            List[str]: リテラル部分文字列のリスト。
        """
        return [token for token in self.tokens if token != WILDCARD]

    @property
    def leading_star(self) -> bool:
        """先頭がワイルドカードか否か。
        """
        return len(self.tokens) > 0 and self.tokens[0] == WILDCARD

    @property
    def trailing_star(self) -> bool:
        """末尾がワイルドカードか否か。
        """
        return len(self.tokens) > 0 and self.tokens[-1] == WILDCARD

    @property
    def star_count(self) -> int:
        """ワイルドカードの数q。
        """
        return sum(1 for token in self.tokens if token == WILDCARD)

    @property
    def interior_star_count(self) -> int:
        """先頭と末尾を除いたワイルドカードの数。
        """
        return self.star_count - int(self.leading_star) - \
            int(self.trailing_star and len(self.tokens) > 1)

    @property
    def literal_count(self) -> int:
        """ワイルドカード以外の文字数p。
        """
        return sum(len(segment) for segment in self.segments)


PatternLike = Union[Pattern, str]


def as_pattern(value: PatternLike) -> Pattern:
    """パターン、またはテキスト表記を正規化済みのパターンに変換する。

    Args:
        value (PatternLike): パターン、またはテキスト表記。

    Returns:
        Pattern: 正規化済みのパターン。
    """
    if isinstance(value, Pattern):
        return value.normalize()
    return Pattern.parse(value).normalize()


def normalize(p: PatternLike, final: bool=False) -> Pattern:
    """パターンを正規化する。

    Args:
        p (PatternLike): パターン。
        final (bool, optional): 最終出力モード。

    Returns:
        Pattern: 正規化したパターン。
    """
    return as_pattern(p).normalize(final)


def strip_wildcards(p: PatternLike) -> str:
    """ワイルドカードを除いたリテラルの連結を取得する。

    Args:
        p (PatternLike): パターン。

    Returns:
        str: リテラル部分文字列を順に連結した文字列。
    """
    return "".join(as_pattern(p).segments)


def _match_segments(pattern: Pattern, text: str) -> bool:
    if pattern.star_count == 0:
        return text == "".join(pattern.segments)

    segments = pattern.segments
    low, high = 0, len(text)

    if not pattern.leading_star:
        if not text.startswith(segments[0]):
            return False
        low = len(segments[0])
        segments = segments[1:]

    if not pattern.trailing_star:
        last = segments[-1]
        high = len(text) - len(last)
        if high < low or not text.endswith(last):
            return False
        segments = segments[:-1]

    for segment in segments:
        index = text.find(segment, low, high)
        if index < 0:
            return False
        low = index + len(segment)

    return True


def pattern_matches(p: PatternLike, s: SequenceLike) -> bool:
    """配列がパターンの言語L(p)に含まれるか判定する。

    リテラル部分文字列を先頭から最も左の位置に貪欲に配置する。先頭(末尾)に
    ワイルドカードが無い場合は、最初(最後)のリテラルを接頭辞(接尾辞)に固定する。

    Args:
        p (PatternLike): パターン。
        s (SequenceLike): 配列。

    Returns:
        bool: 配列がパターンにマッチする場合はTrue。
    """
    pattern = as_pattern(p)
    if isinstance(s, Sequence):
        literals = "".join(pattern.segments)
        if not s.alphabet.contains(literals):
            raise InvalidInputError(f"pattern {pattern.render()} has symbols outside the alphabet " \
                f"{s.alphabet.symbols}")
    return _match_segments(pattern, symbols_of(s))


def segments_in_order(p: PatternLike, text: SequenceLike, contiguous: bool=True) -> bool:
    """パターンのリテラル部分文字列が文字列中に順番通りに現れるか判定する。

    Args:
        p (PatternLike): パターン。
        text (SequenceLike): 調べる文字列(ヒューリスティックなLCS、SCS)。
        contiguous (bool, optional): Trueの場合は各リテラルを部分文字列として、
            Falseの場合はリテラルの連結を部分列として探す。

    Returns:
        bool: 順番通りに現れる場合はTrue。
    """
    text = symbols_of(text)
    pattern = as_pattern(p)
    position = 0
    if contiguous:
        for segment in pattern.segments:
            index = text.find(segment, position)
            if index < 0:
                return False
            position = index + len(segment)
        return True
    for char in strip_wildcards(pattern):
        index = text.find(char, position)
        if index < 0:
            return False
        position = index + 1
    return True
