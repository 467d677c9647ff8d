"""パターンを介したSCSとLCSの相互変換。
"""
from typing import Optional
import time

from common.print_console import print_err
from heuristic.algorithm import Algorithm, Base
from heuristic.constant import POOL_SIZE
from heuristic.lcs import heuristic_lcs, lcs_of_strings
from heuristic.result import DepositionParams, HeuristicResult
from heuristic.scs import heuristic_scs, scs_of_strings
from pals.pipeline import pals_lcs, pals_scs
from sequence.dataset import Dataset
from sequence.embedding import is_common_subsequence, is_common_supersequence
from transform.anchor import choose_anchor_pattern, decompose


def _fallback(result: HeuristicResult, origin: Base, reason: str) -> HeuristicResult:
    print_err(f"transform from {origin.value} fell back to the direct heuristic : {reason}")
    params = dict(result.params)
    params.update({"from": origin.value, "fallback": True})
    return HeuristicResult(result.value, result.algorithm, params, result.elapsed)


def scs_to_lcs(d: Dataset, scs: HeuristicResult, params: Optional[DepositionParams]=None) \
    -> HeuristicResult:
    """SCSから求めたパターンのリテラルを基準に配列を分割し、区間ごとのLCSを連結する。

    Args:
        d (Dataset): データセット。
        scs (HeuristicResult): 共通超配列。
        params (Optional[DepositionParams], optional): 区間のLCSヒューリスティックのパラメータ。

    Returns:
        HeuristicResult: 共通部分列。分割に失敗した場合はheuristic_lcsの結果。
    """
    params = params if params is not None else DepositionParams()
    start_time = time.perf_counter()
    pattern = choose_anchor_pattern(pals_scs(d, scs=scs.value).patterns)
    columns = decompose(pattern, d.strings)
    if columns is None:
        return _fallback(heuristic_lcs(d, params), Base.SCS, \
            f"{pattern.render()} cannot be placed")

    pieces = []
    for index, column in enumerate(columns):
        pieces.append(lcs_of_strings(column, d.alphabet.symbols, params))
        if index < len(pattern.segments):
            pieces.append(pattern.segments[index])
    value = "".join(pieces)
    if not is_common_subsequence(value, d.strings):
        return _fallback(heuristic_lcs(d, params), Base.SCS, f"{value} is not a common subsequence")

    return HeuristicResult(value, Algorithm.TRANSFORM, \
        {"from": Base.SCS.value, "pattern": pattern.render(), "fallback": False}, \
        time.perf_counter() - start_time)


def lcs_to_scs(d: Dataset, lcs: HeuristicResult, pool_size: int=POOL_SIZE, seed: int=0) \
    -> HeuristicResult:
    """LCSから求めたパターンのリテラルを基準に配列を分割し、区間ごとのSCSを連結する。

    Args:
        d (Dataset): データセット。
        lcs (HeuristicResult): 共通部分列。
        pool_size (int, optional): 区間のSCSヒューリスティックのテンプレート数。
        seed (int, optional): 区間のSCSヒューリスティックの乱数シード。

    Returns:
        HeuristicResult: 共通超配列。分割に失敗した場合はheuristic_scsの結果。
    """
    start_time = time.perf_counter()
    pattern = choose_anchor_pattern(pals_lcs(d, lcs=lcs.value).patterns)
    columns = decompose(pattern, d.strings)
    if columns is None:
        return _fallback(heuristic_scs(d, pool_size, seed), Base.LCS, \
            f"{pattern.render()} cannot be placed")

    pieces = []
    for index, column in enumerate(columns):
        pieces.append(scs_of_strings(column, d.alphabet.symbols, pool_size, seed)[0])
        if index < len(pattern.segments):
            pieces.append(pattern.segments[index])
    value = "".join(pieces)
    if not is_common_supersequence(value, d.strings):
        return _fallback(heuristic_scs(d, pool_size, seed), Base.LCS, \
            f"{value} is not a common supersequence")

    return HeuristicResult(value, Algorithm.TRANSFORM, \
        {"from": Base.LCS.value, "pattern": pattern.render(), "fallback": False}, \
        time.perf_counter() - start_time)
