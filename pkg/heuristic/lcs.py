"""Deposition and Extensionによる複数配列のLCSヒューリスティック。
"""
from typing import List, Optional
import time

import numpy as np

from common.exception import InvalidInputError
from heuristic.algorithm import Algorithm
from heuristic.constant import WINDOW_FACTOR
from heuristic.occurrence import OccurrenceTable
from heuristic.result import DepositionParams, HeuristicResult
from sequence.dataset import Dataset, SequenceLike, symbols_of


def symbol_priority(num_symbols: int, seed: int) -> np.ndarray:
    """同点の記号を選ぶ時の優先順位を生成する。

    Args:
        num_symbols (int): 記号数。
        seed (int): 乱数シード。0の場合は記号の並び順。

    Returns:
        np.ndarray: 各記号の優先順位(小さいほど優先)。
    """
    if seed == 0:
        return np.arange(num_symbols)
    rng = np.random.default_rng(seed)
    return rng.permutation(num_symbols)


def deposit(table: OccurrenceTable, params: DepositionParams) -> str:
    """各配列のカーソルを進めながら共通の記号を1文字ずつ積み上げる。

    Args:
        table (OccurrenceTable): 出現位置の表。
        params (DepositionParams): 探索パラメータ。

    Returns:
        str: 共通部分列。
    """
    base_window = params.window if params.window is not None \
        else WINDOW_FACTOR * table.num_symbols
    priority = symbol_priority(table.num_symbols, params.seed)
    cursors = np.zeros(table.num_strings, dtype=np.int32)
    result = []
    window = base_window
    growth = 0

    while (cursors < table.lengths).all():
        candidates = table.next_positions(cursors)
        found = table.found(candidates).all(axis=0)
        if not found.any():
            break
        advance = candidates - cursors[:, None]
        qualified = found & (advance < window).all(axis=0)
        if not qualified.any():
            if growth >= params.max_window_growth:
                break
            window *= 2
            growth += 1
            continue

        indice = np.flatnonzero(qualified)
        total = advance[:, indice].sum(axis=0)
        longest = advance[:, indice].max(axis=0)
        order = np.lexsort((priority[indice], longest, total))
        code = indice[order[0]]
        result.append(table.symbols[code])
        cursors = candidates[:, code] + 1
        window = base_window
        growth = 0

    return "".join(result)


def extend(table: OccurrenceTable, base: str) -> str:
    """共通部分列に記号を挿入できなくなるまで挿入を繰り返す。

    挿入位置は左から順に、記号はアルファベット順に試す。位置pへの記号cの挿入は、
    接頭辞を最も左に埋め込んだ位置の後、接尾辞を最も右に埋め込んだ位置の前に
    全配列でcが現れる場合に可能。

    Args:
        table (OccurrenceTable): 出現位置の表。
        base (str): 共通部分列。

    Returns:
        str: 極大な共通部分列。
    """
    value = base
    changed = True
    while changed:
        changed = False
        starts = table.rightmost_starts(value)
        if (starts[0] < 0).any():
            raise InvalidInputError(f"{value} is not a common subsequence")
        left = np.zeros(table.num_strings, dtype=np.int32)
        result = []
        for p in range(len(value) + 1):
            right = starts[p]
            while True:
                candidates = table.next_positions(left)
                feasible = (candidates < right[:, None]).all(axis=0)
                if not feasible.any():
                    break
                code = int(np.argmax(feasible))
                result.append(table.symbols[code])
                left = candidates[:, code] + 1
                changed = True
            if p < len(value):
                code = table.code_map[value[p]]
                left = table.next_table[table.rows, left, code] + 1
                result.append(value[p])
        value = "".join(result)
    return value


def deposit_common_subsequence(d: Dataset, params: DepositionParams=DepositionParams()) \
    -> HeuristicResult:
    """Depositionで共通部分列を求める。

    Args:
        d (Dataset): データセット。
        params (DepositionParams, optional): 探索パラメータ。

    Returns:
        HeuristicResult: 共通部分列。
    """
    start_time = time.perf_counter()
    value = deposit(OccurrenceTable(d.strings, d.alphabet.symbols), params)
    return HeuristicResult(value, Algorithm.DEPOSITION_EXTENSION, params.to_dict(), \
        time.perf_counter() - start_time)


def extend_to_maximal(d: Dataset, base: SequenceLike) -> str:
    """共通部分列を極大になるまで拡張する。

    Args:
        d (Dataset): データセット。
        base (SequenceLike): 共通部分列。

    Returns:
        str: baseを含む極大な共通部分列。
    """
    return extend(OccurrenceTable(d.strings, d.alphabet.symbols), symbols_of(base))


def lcs_of_strings(strings: List[str], symbols: str, \
    params: DepositionParams=DepositionParams()) -> str:
    """文字列集合に対してDeposition and Extensionを実行する。

    Args:
        strings (List[str]): 文字列のリスト。
        symbols (str): 使用する記号の並び。
        params (DepositionParams, optional): 探索パラメータ。

    Returns:
        str: 極大な共通部分列。
    """
    table = OccurrenceTable(strings, symbols)
    return extend(table, deposit(table, params))


def heuristic_lcs(d: Dataset, params: Optional[DepositionParams]=None) -> HeuristicResult:
    """Deposition and ExtensionでLCS_DepExtn(S)を求める。

    Args:
        d (Dataset): データセット。
        params (Optional[DepositionParams], optional): 探索パラメータ。

    Returns:
        HeuristicResult: 極大な共通部分列。
    """
    params = params if params is not None else DepositionParams()
    start_time = time.perf_counter()
    value = lcs_of_strings(d.strings, d.alphabet.symbols, params)
    return HeuristicResult(value, Algorithm.DEPOSITION_EXTENSION, params.to_dict(), \
        time.perf_counter() - start_time)


def heuristic_lcs_candidates(d: Dataset, count: int, \
    params: Optional[DepositionParams]=None) -> List[HeuristicResult]:
    """シードを変えてheuristic_lcsを実行し、異なる解を列挙する。

    Args:
        d (Dataset): データセット。
        count (int): 試行するシードの数。seed, seed+1, ..., seed+count-1を使用する。
        params (Optional[DepositionParams], optional): 探索パラメータ。

    Returns:
        List[HeuristicResult]: シード順に並べた異なる解のリスト。
    """
    params = params if params is not None else DepositionParams()
    results = []
    seen = set()
    for seed in range(params.seed, params.seed + count):
        result = heuristic_lcs(d, DepositionParams(params.window, seed, params.max_window_growth))
        if result.value not in seen:
            seen.add(result.value)
            results.append(result)
    return results
