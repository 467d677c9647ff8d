"""PALS-LCS、PALS-SCSによるパターン探索。
"""
from typing import List, Optional

from common.print_console import print_phase_times
from common.stopwatch import Stopwatch
from heuristic.algorithm import Base
from heuristic.constant import PATTERN_WINDOW, POOL_SIZE
from heuristic.lcs import heuristic_lcs, lcs_of_strings
from heuristic.result import DepositionParams
from heuristic.scs import heuristic_scs
from metrics.score import PatternReport, build_pattern_report
from pals.patternize import patternize_alpha, patternize_beta
from pals.substring import longest_common_substrings
from sequence.constant import WILDCARD
from sequence.dataset import Dataset, SequenceLike, symbols_of
from sequence.embedding import embed_leftmost
from sequence.pattern import Pattern

PALS_LCS = "PALS-LCS"
PALS_SCS = "PALS-SCS"


def repair_cover(value: str, texts: List[str]) -> str:
    """隣接する2つのリテラルの間を飛ばして埋め込まれる写像パターンがある場合に*を挿入する。

    Args:
        value (str): 写像パターンの共通部分列。
        texts (List[str]): 写像パターンのテキスト表記のリスト。

    Returns:
        str: *を挿入した文字列。
    """
    embeddings = [embed_leftmost(value, text) for text in texts]
    result = []
    for index, char in enumerate(value):
        if index > 0 and char != WILDCARD and value[index - 1] != WILDCARD:
            if any(positions[index] - positions[index - 1] > 1 for positions in embeddings):
                result.append(WILDCARD)
        result.append(char)
    return "".join(result)


def pals_lcs(d: Dataset, params: Optional[DepositionParams]=None, \
    lcs: Optional[SequenceLike]=None) -> PatternReport:
    """PALS-LCSでパターンを求める。

    Args:
        d (Dataset): データセット。
        params (Optional[DepositionParams], optional): LCSヒューリスティックのパラメータ。
        lcs (Optional[SequenceLike], optional): 計算済みの共通部分列。省略時はheuristic_lcsで求める。

    Returns:
        PatternReport: 1つ以上のパターンを含むレポート。
    """
    stopwatch = Stopwatch()
    stopwatch.start_timer()

    stopwatch.start_phase("heuristic")
    value = heuristic_lcs(d, params).value if lcs is None else symbols_of(lcs)

    stopwatch.start_phase("patternize")
    mapped = patternize_alpha(d, value)

    stopwatch.start_phase("substring")
    patterns = longest_common_substrings([item.pattern for item in mapped])

    timings = stopwatch.get_phase_times()
    print_phase_times(PALS_LCS, timings)
    return build_pattern_report(d, patterns, PALS_LCS, Base.LCS.value, value, timings)


def pals_scs(d: Dataset, pool_size: int=POOL_SIZE, seed: int=0, \
    scs: Optional[SequenceLike]=None) -> PatternReport:
    """PALS-SCSでパターンを求める。

    写像パターンを*を含む拡張アルファベット上の文字列とみなしてLCSを求め、
    最終出力モードで正規化した1つのパターンを返す。

    Args:
        d (Dataset): データセット。
        pool_size (int, optional): SCSヒューリスティックのテンプレート数。
        seed (int, optional): SCSヒューリスティックの乱数シード。
        scs (Optional[SequenceLike], optional): 計算済みの共通超配列。省略時はheuristic_scsで求める。

    Returns:
        PatternReport: 1つのパターンを含むレポート。
    """
    stopwatch = Stopwatch()
    stopwatch.start_timer()

    stopwatch.start_phase("heuristic")
    value = heuristic_scs(d, pool_size, seed).value if scs is None else symbols_of(scs)

    stopwatch.start_phase("patternize")
    texts = [item.pattern.render() for item in patternize_beta(d, value)]

    stopwatch.start_phase("substring")
    common = lcs_of_strings(texts, d.alphabet.symbols + WILDCARD, \
        DepositionParams(window=PATTERN_WINDOW))
    pattern = Pattern.parse(repair_cover(common, texts)).normalize(final=True)

    timings = stopwatch.get_phase_times()
    print_phase_times(PALS_SCS, timings)
    return build_pattern_report(d, [pattern], PALS_SCS, Base.SCS.value, value, timings)


def run_pals(d: Dataset, base: Base, params: Optional[DepositionParams]=None, \
    pool_size: int=POOL_SIZE) -> PatternReport:
    """指定した種類のヒューリスティック解からパターンを求める。

    Args:
        d (Dataset): データセット。
        base (Base): 元にするヒューリスティック解の種類。
        params (Optional[DepositionParams], optional): LCSヒューリスティックのパラメータ。
        pool_size (int, optional): SCSヒューリスティックのテンプレート数。

    Returns:
        PatternReport: パターン探索の結果。
    """
    if base == Base.LCS:
        return pals_lcs(d, params)
    seed = params.seed if params is not None else 0
    return pals_scs(d, pool_size, seed)
